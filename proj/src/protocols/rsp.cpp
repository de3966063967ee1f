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

#include "rspm/protocols/rsp.hpp"

#include "rspm/protocols/singlet.hpp"

#include <cmath>

namespace rspm {

const char *to_string(EnsembleKind k) {
    switch (k) {
        case EnsembleKind::PolarCircle:
            return "polar";
        case EnsembleKind::EquatorialCircle:
            return "equatorial";
        case EnsembleKind::Arbitrary:
            return "arbitrary";
    }
    return "unknown";
}

std::optional<EnsembleKind> parse_ensemble_kind(std::string_view s) {
    if (s == "polar") return EnsembleKind::PolarCircle;
    if (s == "equatorial") return EnsembleKind::EquatorialCircle;
    if (s == "arbitrary") return EnsembleKind::Arbitrary;
    return std::nullopt;
}

PureQubit polar_state(double theta) { return PureQubit::normalized(std::cos(theta), std::sin(theta)); }

PureQubit equatorial_state(double phi) { return PureQubit::normalized(1.0, std::polar(1.0, phi)); }

bool belongs_to(const PureQubit &psi, EnsembleKind kind) {
    const PureQubit c = psi.canonical();
    switch (kind) {
        case EnsembleKind::PolarCircle:
            return std::abs(c.aV().imag()) <= kRoundTripTol;
        case EnsembleKind::EquatorialCircle:
            return std::abs(c.aH().real() - 1.0 / std::sqrt(2.0)) <= kRoundTripTol;
        case EnsembleKind::Arbitrary:
            return true;
    }
    return false;
}

const char *to_string(Correction c) {
    switch (c) {
        case Correction::Identity:
            return "I";
        case Correction::ISigmaY:
            return "i*sigma_y";
        case Correction::SigmaZ:
            return "sigma_z";
    }
    return "unknown";
}

Unitary2 correction_unitary(Correction c) {
    switch (c) {
        case Correction::ISigmaY:
            return Unitary2::i_sigma_y();
        case Correction::SigmaZ:
            return Unitary2::pauli_z();
        case Correction::Identity:
            break;
    }
    return Unitary2::identity();
}

Correction correction_for(EnsembleKind kind, Bit received) {
    if (received == Bit::V) {
        return Correction::Identity;
    }
    switch (kind) {
        case EnsembleKind::PolarCircle:
            return Correction::ISigmaY;
        case EnsembleKind::EquatorialCircle:
            return Correction::SigmaZ;
        case EnsembleKind::Arbitrary:
            break;
    }
    // No fixed unitary maps every unknown state to its complement.
    return Correction::Identity;
}

namespace {

Unitary2 preparation_unitary(const PureQubit &target) {
    const PureQubit c = target.canonical();
    return make_su2(c.aH().real(), c.aV());
}

}  // namespace

TwoQubitState rsp_post_rotation_state(const PureQubit &target) {
    const Unitary2 u = preparation_unitary(target);
    return apply_operator(tensor(u.adjoint().matrix(), Matrix2::Identity()), epr_singlet());
}

RemotePreparation prepare_remote(Session &session, const PureQubit &target, std::optional<Bit> forced) {
    const EprHalves halves = session.distribute_epr();
    session.apply_unitary(Party::Alice, halves.alice, preparation_unitary(target).adjoint(), "U(alpha,beta)^dagger");
    const Bit outcome = session.measure_computational(Party::Alice, halves.alice, forced);
    const Message msg = session.send_classical_bit(Party::Alice, outcome);
    return {halves, outcome, msg};
}

RspRunResult rsp_run(const PureQubit &target, EnsembleKind kind, Session &session, std::optional<Bit> forced) {
    if (!belongs_to(target, kind)) {
        throw EnsembleViolation(std::string("target state is not on the ") + to_string(kind) + " circle");
    }
    const RemotePreparation prep = prepare_remote(session, target, forced);
    const PureQubit before = session.peek_state(prep.halves.bob);

    const Correction corr = correction_for(kind, prep.message.bit);
    session.apply_correction(Party::Bob, prep.halves.bob, correction_unitary(corr), to_string(corr),
                             std::span(&prep.message, 1));
    const PureQubit after = session.peek_state(prep.halves.bob);
    session.finish();
    return {prep.alice_outcome, before, after, corr, session.ledger(), fidelity(after, target)};
}

RspRunResult rsp_run(const PureQubit &target, EnsembleKind kind, std::uint64_t seed) {
    Session session(seed);
    return rsp_run(target, kind, session);
}

double rsp_average_fidelity(const PureQubit &target, EnsembleKind kind, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw DomainError("shots must be at least 1");
    }
    double sum = 0.0;
    for (std::uint64_t i = 0; i < shots; ++i) {
        sum += rsp_run(target, kind, derive_seed(seed, i)).fidelity;
    }
    return sum / static_cast<double>(shots);
}

}  // namespace rspm
