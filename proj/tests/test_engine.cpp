// Copyright 2026 The rspm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "rspm/engine.hpp"

#include <gtest/gtest.h>

#include <array>

using namespace rspm;

namespace {

std::vector<Eigen::MatrixXcd> hv_effects() {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(2, 2);
    h(0, 0) = 1.0;
    v(1, 1) = 1.0;
    return {h, v};
}

}  // namespace

TEST(Session, EprCountsOneEbitAndAnticorrelates) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Session s(seed);
        const EprHalves e = s.distribute_epr();
        EXPECT_EQ(e.alice.owner, Party::Alice);
        EXPECT_EQ(e.bob.owner, Party::Bob);
        EXPECT_EQ(s.ledger(), (ResourceLedger{1, 0, 0}));
        const Bit a = s.measure_computational(Party::Alice, e.alice);
        const Bit b = s.measure_computational(Party::Bob, e.bob);
        EXPECT_NE(a, b);
    }
}

TEST(Session, HalvesAreMaximallyMixedUntilMeasured) {
    Session s(1);
    const EprHalves e = s.distribute_epr();
    EXPECT_NEAR(s.peek_reduced(e.bob).purity(), 0.5, 1e-15);
    EXPECT_THROW(s.peek_state(e.bob), DomainError);
    s.measure_computational(Party::Alice, e.alice, Bit::V);
    EXPECT_NEAR(std::abs(s.peek_state(e.bob).aH()), 1.0, 1e-15);
}

TEST(Session, PartiesCannotTouchTheOtherHalf) {
    Session s(2);
    const EprHalves e = s.distribute_epr();
    EXPECT_THROW(s.apply_unitary(Party::Alice, e.bob, Unitary2::pauli_x(), "X"), AccessError);
    EXPECT_THROW(s.measure_computational(Party::Bob, e.alice), AccessError);
    const std::array<QubitHandle, 1> q{e.alice};
    const auto effects = hv_effects();
    EXPECT_THROW(s.measure_effects(Party::Bob, q, effects, "HV"), AccessError);
    EXPECT_THROW(s.apply_unitary(Party::Alice, QubitHandle{9, Party::Alice}, Unitary2::pauli_x(), "X"), AccessError);
}

TEST(Session, ForcedZeroProbabilityBranchIsRejected) {
    Session s(3);
    const QubitHandle q = s.prepare_local(Party::Bob, PureQubit::h(), "H");
    EXPECT_THROW(s.measure_computational(Party::Bob, q, Bit::V), DomainError);
    EXPECT_EQ(s.measure_computational(Party::Bob, q, Bit::H), Bit::H);
}

TEST(Session, MeasureEffectsValidatesTheMeasurement) {
    Session s(4);
    const QubitHandle q = s.prepare_local(Party::Bob, PureQubit::normalized(1.0, 1.0), "D");
    const std::array<QubitHandle, 1> one{q};
    auto effects = hv_effects();
    effects[1](1, 1) = 0.5;
    EXPECT_THROW(s.measure_effects(Party::Bob, one, effects, "bad"), DomainError);
    // Three outcomes: |H><H| split in half, plus |V><V|.
    effects = hv_effects();
    effects[0](0, 0) = 0.5;
    effects.push_back(effects[0]);
    EXPECT_NO_THROW(s.measure_effects(Party::Bob, one, effects, "three"));
    EXPECT_THROW(s.measure_effects(Party::Bob, std::span<const QubitHandle>{}, effects, "none"), DimensionError);
    const std::vector<Eigen::MatrixXcd> wrong_size{Eigen::MatrixXcd::Identity(4, 4)};
    EXPECT_THROW(s.measure_effects(Party::Bob, one, wrong_size, "4x4"), DimensionError);
    Eigen::MatrixXcd negative = Eigen::MatrixXcd::Identity(2, 2);
    negative(0, 0) = 2.0;
    Eigen::MatrixXcd other = Eigen::MatrixXcd::Zero(2, 2);
    other(0, 0) = -1.0;
    const std::vector<Eigen::MatrixXcd> not_psd{negative, other};
    EXPECT_THROW(s.measure_effects(Party::Bob, one, not_psd, "neg"), DomainError);
}

TEST(Session, MeasureEffectsSamplesTheBornRule) {
    const PureQubit psi(std::sqrt(0.2), std::sqrt(0.8));
    const auto effects = hv_effects();
    int zeros = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        Session s(static_cast<std::uint64_t>(i));
        const std::array<QubitHandle, 1> q{s.prepare_local(Party::Bob, psi, "psi")};
        zeros += s.measure_effects(Party::Bob, q, effects, "HV") == 0 ? 1 : 0;
    }
    EXPECT_LT(std::abs(zeros - 0.2 * n) / std::sqrt(n * 0.2 * 0.8), 4.0);
}

TEST(Session, MessagesAndCorrections) {
    Session s(5);
    const EprHalves e = s.distribute_epr();
    const Message m = s.send_classical_bit(Party::Alice, Bit::V);
    EXPECT_EQ(m.to, Party::Bob);
    EXPECT_EQ(s.ledger(), (ResourceLedger{1, 1, 0}));
    const std::array<Message, 1> reads{m};
    EXPECT_THROW(s.apply_correction(Party::Alice, e.alice, Unitary2::identity(), "I", reads), AccessError);
    EXPECT_NO_THROW(s.apply_correction(Party::Bob, e.bob, Unitary2::identity(), "I", reads));
    const std::array<Message, 1> forged{Message{7, Party::Alice, Party::Bob, Bit::H}};
    EXPECT_THROW(s.apply_correction(Party::Bob, e.bob, Unitary2::identity(), "I", forged), AccessError);
    s.send_classical_bit(Party::Bob, Bit::H);
    EXPECT_EQ(s.ledger(), (ResourceLedger{1, 1, 1}));
}

TEST(Session, FinishFreezesTheRun) {
    Session s(6);
    s.distribute_epr();
    s.finish();
    EXPECT_TRUE(s.finished());
    EXPECT_THROW(s.distribute_epr(), Error);
    EXPECT_THROW(s.send_classical_bit(Party::Alice, Bit::H), Error);
    EXPECT_EQ(s.ledger().ebits, 1u);
}

TEST(Transcript, TextFormat) {
    Session s(17);
    const EprHalves e = s.distribute_epr();
    s.apply_unitary(Party::Alice, e.alice, Unitary2::pauli_z(), "Z");
    s.measure_computational(Party::Alice, e.alice, Bit::H);
    const Message m = s.send_classical_bit(Party::Alice, Bit::H);
    const std::array<Message, 1> reads{m};
    s.apply_correction(Party::Bob, e.bob, Unitary2::i_sigma_y(), "i*sigma_y", reads);
    EXPECT_EQ(s.transcript().to_text(),
              "seed 17\n"
              "0 source prepare-epr singlet (HV-VH)/sqrt2 q0->Alice q1->Bob\n"
              "1 Alice local-unitary q0 Z\n"
              "2 Alice measurement q0 basis=HV outcome=H\n"
              "3 Alice classical-send Alice->Bob msg=0 bit=0\n"
              "4 Bob correction q1 i*sigma_y reads=0\n");
    EXPECT_TRUE(enforce_locality(s.transcript()).pass);
}

TEST(Locality, FlagsForeignPhotonAndEarlyCorrection) {
    Transcript t(0);
    Event prep;
    prep.action = Action::PrepareEpr;
    prep.touched = {{0, Party::Alice}, {1, Party::Bob}};
    t.append(prep);
    Event bad;
    bad.actor = Party::Alice;
    bad.action = Action::LocalUnitary;
    bad.touched = {{1, Party::Bob}};
    t.append(bad);
    const LocalityReport r = enforce_locality(t);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.first_violation, 1u);

    Transcript early(0);
    early.append(prep);
    Event corr;
    corr.actor = Party::Bob;
    corr.action = Action::Correction;
    corr.touched = {{1, Party::Bob}};
    corr.reads = {0};
    early.append(corr);
    EXPECT_FALSE(enforce_locality(early).pass);

    Transcript misdirected(0);
    misdirected.append(prep);
    Event send;
    send.actor = Party::Bob;
    send.action = Action::ClassicalSend;
    send.message = Message{0, Party::Bob, Party::Alice, Bit::H};
    misdirected.append(send);
    misdirected.append(corr);
    const LocalityReport m = enforce_locality(misdirected);
    EXPECT_FALSE(m.pass);
    EXPECT_EQ(m.first_violation, 2u);
}
