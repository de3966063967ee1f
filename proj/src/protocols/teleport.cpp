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

#include "rspm/protocols/teleport.hpp"

#include <cmath>

namespace rspm {

const char *to_string(BellOutcome b) {
    switch (b) {
        case BellOutcome::PhiPlus:
            return "Phi+";
        case BellOutcome::PhiMinus:
            return "Phi-";
        case BellOutcome::PsiPlus:
            return "Psi+";
        case BellOutcome::PsiMinus:
            return "Psi-";
    }
    return "unknown";
}

TwoQubitState bell_state(BellOutcome b) {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    switch (b) {
        case BellOutcome::PhiPlus:
            v << s, 0, 0, s;
            break;
        case BellOutcome::PhiMinus:
            v << s, 0, 0, -s;
            break;
        case BellOutcome::PsiPlus:
            v << 0, s, s, 0;
            break;
        case BellOutcome::PsiMinus:
            v << 0, s, -s, 0;
            break;
    }
    return TwoQubitState(v);
}

// With a singlet resource Bob holds (sigma_x sigma_z) sigma_k |psi>, where
// sigma_k is I, Z, X, XZ for Phi+, Phi-, Psi+, Psi-.
Unitary2 teleport_correction(BellOutcome b) {
    switch (b) {
        case BellOutcome::PhiPlus:
            return Unitary2::i_sigma_y();
        case BellOutcome::PhiMinus:
            return Unitary2::pauli_x();
        case BellOutcome::PsiPlus:
            return Unitary2::pauli_z();
        case BellOutcome::PsiMinus:
            break;
    }
    return Unitary2::identity();
}

const char *teleport_correction_label(BellOutcome b) {
    switch (b) {
        case BellOutcome::PhiPlus:
            return "i*sigma_y";
        case BellOutcome::PhiMinus:
            return "sigma_x";
        case BellOutcome::PsiPlus:
            return "sigma_z";
        case BellOutcome::PsiMinus:
            break;
    }
    return "I";
}

TeleportResult teleport(const PureQubit &psi, Session &session, std::optional<BellOutcome> forced) {
    const QubitHandle input = session.prepare_local(Party::Alice, psi, "input");
    const EprHalves halves = session.distribute_epr();

    std::vector<Eigen::MatrixXcd> effects;
    for (int k = 0; k < 4; ++k) {
        effects.emplace_back(density(bell_state(static_cast<BellOutcome>(k))).matrix());
    }
    const std::array<QubitHandle, 2> measured{input, halves.alice};
    std::optional<std::size_t> forced_index;
    if (forced) {
        forced_index = static_cast<std::size_t>(*forced);
    }
    const auto k = session.measure_effects(Party::Alice, measured, effects, "bell-basis", forced_index);
    const auto outcome = static_cast<BellOutcome>(k);

    const std::array<Message, 2> msgs{session.send_classical_bit(Party::Alice, bit_from_int(static_cast<int>(k >> 1))),
                                      session.send_classical_bit(Party::Alice, bit_from_int(static_cast<int>(k & 1)))};
    const auto decoded = static_cast<BellOutcome>((to_int(msgs[0].bit) << 1) | to_int(msgs[1].bit));
    session.apply_correction(Party::Bob, halves.bob, teleport_correction(decoded), teleport_correction_label(decoded),
                             msgs);
    const PureQubit bob = session.peek_state(halves.bob);
    session.finish();
    return {outcome, bob, session.ledger(), fidelity(bob, psi)};
}

TeleportResult teleport(const PureQubit &psi, std::uint64_t seed) {
    Session session(seed);
    return teleport(psi, session);
}

}  // namespace rspm
