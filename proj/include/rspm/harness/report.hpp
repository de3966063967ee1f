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

#ifndef RSPM_HARNESS_REPORT_HPP
#define RSPM_HARNESS_REPORT_HPP

#include "rspm/harness/compare.hpp"
#include "rspm/harness/experiment.hpp"

#include <string>
#include <string_view>

namespace rspm {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);
double parse_double(std::string_view s);

/// Key/value lines, one per field, outcomes as indexed arrays. Field names are
/// documented in docs/report-format.md and form a stable interface.
std::string to_structured(const FrequencyReport &r);
/// Inverse of to_structured. Stops at a "# transcript" line.
FrequencyReport parse_structured(std::string_view text);

/// Header plus one row per outcome.
std::string to_csv(const FrequencyReport &r);

/// Human-readable summary.
std::string to_text(const FrequencyReport &r);
std::string to_text(const BranchComparison &c);
std::string to_structured(const BranchComparison &c);
std::string to_csv(const BranchComparison &c);

}  // namespace rspm

#endif  // RSPM_HARNESS_REPORT_HPP
