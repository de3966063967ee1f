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

#ifndef RSPM_HARNESS_EXPERIMENT_HPP
#define RSPM_HARNESS_EXPERIMENT_HPP

#include "rspm/protocols.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace rspm {

enum class Protocol : std::uint8_t { Rsp, RsmProjective, RsmPovm, Joint, Teleport, NoGo };

const char *to_string(Protocol p);
std::optional<Protocol> parse_protocol(std::string_view s);

struct RspParams {
    PureQubit target;
    EnsembleKind kind;
};

struct RsmProjectiveParams {
    PoincareVector target_n;
    PoincareVector b;
};

struct RsmPovmParams {
    PoincareVector target_n;
    PovmSet povm;
};

struct JointParams {
    PoincareVector target_n;
    JointOperator pi;
    PoincareVector m;
    EqualizationStrategy strategy = EqualizationStrategy::None;
};

struct TeleportParams {
    PureQubit input;
};

/// Each shot draws a random pure state, applies the complement map and
/// measures along the inverted Bloch vector.
struct NoGoParams {};

using ExperimentParams =
    std::variant<RspParams, RsmProjectiveParams, RsmPovmParams, JointParams, TeleportParams, NoGoParams>;

inline constexpr std::uint64_t kDefaultShots = 100000;
inline constexpr double kDefaultToleranceSigma = 4.0;

struct ExperimentSpec {
    ExperimentParams params;
    std::uint64_t shots = kDefaultShots;
    std::uint64_t seed = 0;
    double tolerance_sigma = kDefaultToleranceSigma;

    Protocol protocol() const;
    /// Throws the underlying protocol error for invalid parameters.
    void validate() const;
};

struct OutcomeStat {
    std::string label;
    std::uint64_t count = 0;
    double frequency = 0.0;
    /// Closed-form probability from the Bloch-vector formulas.
    double analytic = 0.0;
    /// The same probability from explicit matrix traces.
    double analytic_trace = 0.0;
    double std_error = 0.0;
    double z = 0.0;
    bool pass = false;
};

struct Metric {
    std::string name;
    double value = 0.0;
    std::optional<double> expected;
    bool pass = true;
};

struct FrequencyReport {
    Protocol protocol = Protocol::Rsp;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    double tolerance_sigma = kDefaultToleranceSigma;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<OutcomeStat> outcomes;
    std::vector<Metric> metrics;
    /// Ledger of a single run; every shot must match it.
    ResourceLedger per_run;
    ResourceLedger totals;
    /// Every outcome within tolerance_sigma and every metric check passed.
    bool pass = false;

    const Metric *metric(std::string_view name) const;
    const OutcomeStat *outcome(std::string_view label) const;
};

enum class Execution : std::uint8_t { Serial, Parallel };

/// Runs spec.shots independent sessions seeded derive_seed(spec.seed, i) and
/// compares the outcome frequencies to the analytic distribution. The report
/// does not depend on the execution mode.
FrequencyReport run_experiment(const ExperimentSpec &spec, Execution exec = Execution::Parallel);

/// Transcript of shot `index`, replayed from its derived seed.
Transcript shot_transcript(const ExperimentSpec &spec, std::uint64_t index = 0);

/// |z| bound check with the degenerate zero-variance case handled exactly.
double z_score(double frequency, double probability, std::uint64_t shots);

}  // namespace rspm

#endif  // RSPM_HARNESS_EXPERIMENT_HPP
