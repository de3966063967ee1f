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


#include "rspm/harness/compare.hpp"

#include "rspm/harness/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rspm {

double two_sample_z(std::uint64_t count_a, std::uint64_t n_a, std::uint64_t count_b, std::uint64_t n_b) {
    const double na = static_cast<double>(n_a);
    const double nb = static_cast<double>(n_b);
    const double pa = static_cast<double>(count_a) / na;
    const double pb = static_cast<double>(count_b) / nb;
    const double pooled = static_cast<double>(count_a + count_b) / (na + nb);
    const double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / na + 1.0 / nb));
    if (se == 0.0) {
        // Both samples all-or-nothing at the same value.
        return pa == pb ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), pa - pb);
    }
    return (pa - pb) / se;
}

BranchComparison compare_branches(const ExperimentSpec &spec, Execution exec) {
    const Protocol p = spec.protocol();
    if (p != Protocol::RsmProjective && p != Protocol::RsmPovm) {
        throw DomainError(std::string("compare_branches needs a remote-measurement spec, got ") + to_string(p));
    }
    spec.validate();

    std::vector<double> analytic_v;
    std::vector<double> analytic_h;
    std::vector<std::string> labels;
    if (p == Protocol::RsmProjective) {
        const auto &params = std::get<RsmProjectiveParams>(spec.params);
        const auto v = rsm_projective(params.target_n, params.b, Bit::V).probabilities;
        const auto h = rsm_projective(params.target_n, params.b, Bit::H).probabilities;
        analytic_v.assign(v.begin(), v.end());
        analytic_h.assign(h.begin(), h.end());
        labels = {"+", "-"};
    } else {
        const auto &params = std::get<RsmPovmParams>(spec.params);
        analytic_v = rsm_povm(params.target_n, params.povm, Bit::V);
        analytic_h = rsm_povm(params.target_n, params.povm, Bit::H);
        for (std::size_t i = 0; i < params.povm.size(); ++i) {
            labels.push_back("f" + std::to_string(i));
        }
    }

    const auto shots_v = run_shots(spec, derive_seed(spec.seed, to_int(Bit::V)), exec, Bit::V);
    const auto shots_h = run_shots(spec, derive_seed(spec.seed, to_int(Bit::H)), exec, Bit::H);
    std::vector<std::uint64_t> counts_v(labels.size(), 0);
    std::vector<std::uint64_t> counts_h(labels.size(), 0);
    for (const ShotRecord &s : shots_v) {
        counts_v.at(s.outcome) += 1;
    }
    for (const ShotRecord &s : shots_h) {
        counts_h.at(s.outcome) += 1;
    }

    BranchComparison c;
    c.shots_per_branch = spec.shots;
    c.tolerance_sigma = spec.tolerance_sigma;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        BranchOutcome o;
        o.label = labels[k];
        o.count_v = counts_v[k];
        o.count_h = counts_h[k];
        o.analytic_v = analytic_v[k];
        o.analytic_h = analytic_h[k];
        o.z = two_sample_z(o.count_v, spec.shots, o.count_h, spec.shots);
        o.pass = std::abs(o.z) <= spec.tolerance_sigma;
        c.analytic_max_deviation = std::max(c.analytic_max_deviation, std::abs(o.analytic_v - o.analytic_h));
        c.outcomes.push_back(std::move(o));
    }
    c.analytic_equal = c.analytic_max_deviation == 0.0;
    c.pass = c.analytic_equal && std::all_of(c.outcomes.begin(), c.outcomes.end(),
                                             [](const BranchOutcome &o) { return o.pass; });
    return c;
}

}  // namespace rspm
