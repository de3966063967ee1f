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

#ifndef RSPM_PROTOCOLS_TELEPORT_HPP
#define RSPM_PROTOCOLS_TELEPORT_HPP

#include "rspm/engine.hpp"

#include <array>
#include <optional>

namespace rspm {

enum class BellOutcome : std::uint8_t { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

const char *to_string(BellOutcome b);
TwoQubitState bell_state(BellOutcome b);

/// Bob's Pauli correction for a singlet resource.
Unitary2 teleport_correction(BellOutcome b);
const char *teleport_correction_label(BellOutcome b);

struct TeleportResult {
    BellOutcome outcome;
    PureQubit bob_state;
    ResourceLedger ledger;
    double fidelity;
};

/// Standard teleportation over one singlet: Bell measurement on (input,
/// Alice's half), two bits sent, Pauli correction. Finishes the session.
TeleportResult teleport(const PureQubit &psi, Session &session, std::optional<BellOutcome> forced = std::nullopt);
TeleportResult teleport(const PureQubit &psi, std::uint64_t seed);

}  // namespace rspm

#endif  // RSPM_PROTOCOLS_TELEPORT_HPP
