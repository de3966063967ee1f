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

#ifndef RSPM_HARNESS_KERNELS_HPP
#define RSPM_HARNESS_KERNELS_HPP

#include "rspm/harness/experiment.hpp"

#include <optional>
#include <vector>

namespace rspm {

struct ShotRecord {
    std::uint32_t outcome = 0;
    /// Protocol-specific scalar: Bob's fidelity (rsp, teleport) or the Bloch
    /// inversion error (nogo); zero otherwise.
    double value = 0.0;
    ResourceLedger ledger;
};

/// One shot in a fresh session seeded derive_seed(seed, index). `forced`
/// pins Alice's computational-basis outcome for the remote-measurement
/// protocols. `session_out` receives the finished session when non-null.
ShotRecord run_shot(const ExperimentSpec &spec, std::uint64_t seed, std::uint64_t index,
                    std::optional<Bit> forced = std::nullopt, Session *session_out = nullptr);

/// Reference loop, shot order 0..n-1.
std::vector<ShotRecord> run_shots_serial(const ExperimentSpec &spec, std::uint64_t seed,
                                         std::optional<Bit> forced = std::nullopt);
/// OpenMP loop; element i is identical to the serial result.
std::vector<ShotRecord> run_shots_parallel(const ExperimentSpec &spec, std::uint64_t seed,
                                           std::optional<Bit> forced = std::nullopt);

std::vector<ShotRecord> run_shots(const ExperimentSpec &spec, std::uint64_t seed, Execution exec,
                                  std::optional<Bit> forced = std::nullopt);

int worker_threads();

}  // namespace rspm

#endif  // RSPM_HARNESS_KERNELS_HPP
