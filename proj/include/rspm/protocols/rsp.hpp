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

#ifndef RSPM_PROTOCOLS_RSP_HPP
#define RSPM_PROTOCOLS_RSP_HPP

#include "rspm/engine.hpp"

#include <optional>
#include <string_view>

namespace rspm {

/// Family a remotely prepared state is drawn from; known to both parties.
enum class EnsembleKind : std::uint8_t { PolarCircle, EquatorialCircle, Arbitrary };

const char *to_string(EnsembleKind k);
std::optional<EnsembleKind> parse_ensemble_kind(std::string_view s);

class EnsembleViolation : public Error {
   public:
    using Error::Error;
};

/// cos(theta)|H> + sin(theta)|V>.
PureQubit polar_state(double theta);
/// (|H> + e^{i phi}|V>) / sqrt(2).
PureQubit equatorial_state(double phi);

/// Polar: real amplitudes up to global phase. Equatorial: equal-magnitude
/// amplitudes. Arbitrary: everything. Tolerance kRoundTripTol.
bool belongs_to(const PureQubit &psi, EnsembleKind kind);

enum class Correction : std::uint8_t { Identity, ISigmaY, SigmaZ };

const char *to_string(Correction c);
Unitary2 correction_unitary(Correction c);

/// Bob's rule on receiving Alice's bit. Bit V means he already holds the
/// target; on bit H he holds the orthogonal state and can only undo that for
/// the two great-circle families.
Correction correction_for(EnsembleKind kind, Bit received);

/// (U(alpha, beta)^dagger (x) I)|singlet> = (|H>|target_perp> - |V>|target>)/sqrt(2).
TwoQubitState rsp_post_rotation_state(const PureQubit &target);

/// The part of a run shared with the measurement-simulation protocols:
/// singlet distribution, Alice's rotation and measurement, one bit sent.
struct RemotePreparation {
    EprHalves halves;
    Bit alice_outcome;
    Message message;
};

RemotePreparation prepare_remote(Session &session, const PureQubit &target, std::optional<Bit> forced = std::nullopt);

struct RspRunResult {
    Bit alice_outcome;
    PureQubit bob_state_before_correction;
    PureQubit bob_state_after_correction;
    Correction correction_applied;
    ResourceLedger ledger;
    double fidelity;
};

/// Full remote state preparation run; finishes the session.
/// Throws EnsembleViolation if target is not in the declared family.
RspRunResult rsp_run(const PureQubit &target, EnsembleKind kind, Session &session,
                     std::optional<Bit> forced = std::nullopt);
RspRunResult rsp_run(const PureQubit &target, EnsembleKind kind, std::uint64_t seed);

/// Mean post-correction fidelity over independent runs seeded from seed.
double rsp_average_fidelity(const PureQubit &target, EnsembleKind kind, std::uint64_t shots, std::uint64_t seed);

}  // namespace rspm

#endif  // RSPM_PROTOCOLS_RSP_HPP
