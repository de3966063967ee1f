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

#ifndef RSPM_HARNESS_SUMMARY_HPP
#define RSPM_HARNESS_SUMMARY_HPP

#include "rspm/harness/experiment.hpp"

#include <span>
#include <string>
#include <vector>

namespace rspm {

/// Average classical communication of the hidden-variable simulations of
/// Cerf, Gisin and Massar (classical teleportation of a qubit, 2000). Cited
/// figures only; nothing here simulates those protocols.
inline constexpr double kClassicalProjectiveBits = 2.19;
inline constexpr double kClassicalPovmBits = 6.38;
inline constexpr const char *kClassicalCitation = "Cerf, Gisin & Massar 2000, classical teleportation of a qubit";

struct ResourceRow {
    std::string protocol;
    double ebits = 0.0;
    double cbits_forward = 0.0;
    double cbits_backward = 0.0;
    bool simulated = true;
    std::string note;
};

struct ResourceTable {
    std::vector<ResourceRow> rows;
    /// Bits saved by the entanglement-assisted POVM simulation relative to
    /// the cited classical figure (total classical bits minus one cbit).
    double povm_saving_bits = 0.0;

    std::string to_text() const;
};

/// Rows for each report plus cited literature rows. Throws DomainError for an
/// empty list.
ResourceTable resource_summary(std::span<const FrequencyReport> reports);

}  // namespace rspm

#endif  // RSPM_HARNESS_SUMMARY_HPP
