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


#include "rspm/harness/summary.hpp"

#include "rspm/harness/report.hpp"

#include <algorithm>
#include <sstream>

namespace rspm {

namespace {

std::string row_name(const FrequencyReport &r) {
    std::string name = to_string(r.protocol);
    for (const auto &[k, v] : r.parameters) {
        if (k == "kind" || k == "strategy") {
            name += " (" + v + ")";
        }
    }
    return name;
}

const ResourceRow *find_row(const std::vector<ResourceRow> &rows, std::string_view prefix) {
    const auto it = std::find_if(rows.begin(), rows.end(),
                                 [&](const ResourceRow &r) { return r.simulated && r.protocol.rfind(prefix, 0) == 0; });
    return it == rows.end() ? nullptr : &*it;
}

}  // namespace

ResourceTable resource_summary(std::span<const FrequencyReport> reports) {
    if (reports.empty()) {
        throw DomainError("resource_summary needs at least one report");
    }
    ResourceTable t;
    t.povm_saving_bits = kClassicalPovmBits - 1.0;
    for (const FrequencyReport &r : reports) {
        ResourceRow row;
        row.protocol = row_name(r);
        row.ebits = static_cast<double>(r.per_run.ebits);
        row.cbits_forward = static_cast<double>(r.per_run.cbits_forward);
        row.cbits_backward = static_cast<double>(r.per_run.cbits_backward);
        if (r.protocol == Protocol::RsmPovm) {
            row.note = "saves " + format_double(t.povm_saving_bits) + " bits vs cited classical protocol";
        }
        t.rows.push_back(std::move(row));
    }
    t.rows.push_back({"classical simulation, projective", 0.0, kClassicalProjectiveBits, 0.0, false,
                      std::string("cited, not simulated: ") + kClassicalCitation});
    t.rows.push_back({"classical simulation, POVM", 0.0, kClassicalPovmBits, 0.0, false,
                      std::string("cited, not simulated: ") + kClassicalCitation});
    return t;
}

std::string ResourceTable::to_text() const {
    std::ostringstream out;
    out << "protocol | ebits | cbits forward | cbits backward | note\n";
    for (const ResourceRow &r : rows) {
        out << r.protocol << " | " << format_double(r.ebits) << " | " << format_double(r.cbits_forward) << " | "
            << format_double(r.cbits_backward) << " | " << r.note << '\n';
    }
    out << "POVM saving: " << format_double(kClassicalPovmBits) << " - 1 = " << format_double(povm_saving_bits)
        << " bits\n";
    const ResourceRow *rsp = find_row(rows, "rsp");
    const ResourceRow *tele = find_row(rows, "teleport");
    if (rsp != nullptr && tele != nullptr) {
        out << "RSP vs teleport: " << format_double(tele->cbits_forward - rsp->cbits_forward)
            << " cbit fewer at equal entanglement\n";
    }
    return out.str();
}

}  // namespace rspm
