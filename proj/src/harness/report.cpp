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


#include "rspm/harness/report.hpp"

#include "rspm/harness/summary.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace rspm {

namespace {

constexpr int kReportVersion = 1;

const char *bool_str(bool b) { return b ? "true" : "false"; }

bool parse_bool(std::string_view s) {
    if (s == "true") {
        return true;
    }
    if (s == "false") {
        return false;
    }
    throw DomainError("expected true or false, got '" + std::string(s) + "'");
}

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DomainError("expected an unsigned integer, got '" + std::string(s) + "'");
    }
    return v;
}

void put_ledger(std::ostringstream &out, const std::string &prefix, const ResourceLedger &l) {
    out << prefix << ".ebits = " << l.ebits << '\n';
    out << prefix << ".cbits_forward = " << l.cbits_forward << '\n';
    out << prefix << ".cbits_backward = " << l.cbits_backward << '\n';
}

class Fields {
   public:
    explicit Fields(std::string_view text) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            const std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            if (line == "# transcript") {
                break;
            }
            if (line.empty() || line.front() == '#') {
                continue;
            }
            const std::size_t eq = line.find(" = ");
            if (eq == std::string_view::npos) {
                throw DomainError("malformed report line: '" + std::string(line) + "'");
            }
            keys_.emplace_back(line.substr(0, eq));
            values_.emplace(std::string(line.substr(0, eq)), std::string(line.substr(eq + 3)));
        }
    }

    const std::string &get(const std::string &key) const {
        const auto it = values_.find(key);
        if (it == values_.end()) {
            throw DomainError("report is missing field '" + key + "'");
        }
        return it->second;
    }
    double real(const std::string &key) const { return parse_double(get(key)); }
    std::uint64_t count(const std::string &key) const { return parse_u64(get(key)); }
    bool flag(const std::string &key) const { return parse_bool(get(key)); }
    const std::vector<std::string> &keys() const { return keys_; }

   private:
    std::vector<std::string> keys_;
    std::map<std::string, std::string> values_;
};

ResourceLedger get_ledger(const Fields &f, const std::string &prefix) {
    return {f.count(prefix + ".ebits"), f.count(prefix + ".cbits_forward"), f.count(prefix + ".cbits_backward")};
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DomainError("expected a number, got '" + std::string(s) + "'");
    }
    return v;
}

std::string to_structured(const FrequencyReport &r) {
    std::ostringstream out;
    out << "report.version = " << kReportVersion << '\n';
    out << "protocol = " << to_string(r.protocol) << '\n';
    out << "shots = " << r.shots << '\n';
    out << "seed = " << r.seed << '\n';
    out << "tolerance_sigma = " << format_double(r.tolerance_sigma) << '\n';
    out << "pass = " << bool_str(r.pass) << '\n';
    for (const auto &[k, v] : r.parameters) {
        out << "param." << k << " = " << v << '\n';
    }
    put_ledger(out, "ledger.per_run", r.per_run);
    put_ledger(out, "ledger.totals", r.totals);
    out << "outcome.count = " << r.outcomes.size() << '\n';
    for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
        const OutcomeStat &o = r.outcomes[i];
        const std::string p = "outcome[" + std::to_string(i) + "].";
        out << p << "label = " << o.label << '\n';
        out << p << "count = " << o.count << '\n';
        out << p << "frequency = " << format_double(o.frequency) << '\n';
        out << p << "analytic = " << format_double(o.analytic) << '\n';
        out << p << "analytic_trace = " << format_double(o.analytic_trace) << '\n';
        out << p << "std_error = " << format_double(o.std_error) << '\n';
        out << p << "z = " << format_double(o.z) << '\n';
        out << p << "pass = " << bool_str(o.pass) << '\n';
    }
    out << "metric.count = " << r.metrics.size() << '\n';
    for (std::size_t i = 0; i < r.metrics.size(); ++i) {
        const Metric &m = r.metrics[i];
        const std::string p = "metric[" + std::to_string(i) + "].";
        out << p << "name = " << m.name << '\n';
        out << p << "value = " << format_double(m.value) << '\n';
        out << p << "expected = " << (m.expected ? format_double(*m.expected) : "none") << '\n';
        out << p << "pass = " << bool_str(m.pass) << '\n';
    }
    out << "literature.classical_projective_bits = " << format_double(kClassicalProjectiveBits) << '\n';
    out << "literature.classical_povm_bits = " << format_double(kClassicalPovmBits) << '\n';
    out << "literature.citation = " << kClassicalCitation << '\n';
    out << "literature.status = cited, not simulated\n";
    return out.str();
}

FrequencyReport parse_structured(std::string_view text) {
    const Fields f(text);
    if (f.count("report.version") != kReportVersion) {
        throw DomainError("unsupported report.version " + f.get("report.version"));
    }
    FrequencyReport r;
    const auto protocol = parse_protocol(f.get("protocol"));
    if (!protocol) {
        throw DomainError("unknown protocol '" + f.get("protocol") + "'");
    }
    r.protocol = *protocol;
    r.shots = f.count("shots");
    r.seed = f.count("seed");
    r.tolerance_sigma = f.real("tolerance_sigma");
    r.pass = f.flag("pass");
    for (const std::string &k : f.keys()) {
        if (k.rfind("param.", 0) == 0) {
            r.parameters.emplace_back(k.substr(6), f.get(k));
        }
    }
    r.per_run = get_ledger(f, "ledger.per_run");
    r.totals = get_ledger(f, "ledger.totals");
    const std::uint64_t n_outcomes = f.count("outcome.count");
    for (std::uint64_t i = 0; i < n_outcomes; ++i) {
        const std::string p = "outcome[" + std::to_string(i) + "].";
        OutcomeStat o;
        o.label = f.get(p + "label");
        o.count = f.count(p + "count");
        o.frequency = f.real(p + "frequency");
        o.analytic = f.real(p + "analytic");
        o.analytic_trace = f.real(p + "analytic_trace");
        o.std_error = f.real(p + "std_error");
        o.z = f.real(p + "z");
        o.pass = f.flag(p + "pass");
        r.outcomes.push_back(std::move(o));
    }
    const std::uint64_t n_metrics = f.count("metric.count");
    for (std::uint64_t i = 0; i < n_metrics; ++i) {
        const std::string p = "metric[" + std::to_string(i) + "].";
        Metric m;
        m.name = f.get(p + "name");
        m.value = f.real(p + "value");
        const std::string &expected = f.get(p + "expected");
        if (expected != "none") {
            m.expected = parse_double(expected);
        }
        m.pass = f.flag(p + "pass");
        r.metrics.push_back(std::move(m));
    }
    return r;
}

std::string to_csv(const FrequencyReport &r) {
    std::ostringstream out;
    out << "protocol,seed,shots,label,count,frequency,analytic,analytic_trace,std_error,z,pass\n";
    for (const OutcomeStat &o : r.outcomes) {
        out << to_string(r.protocol) << ',' << r.seed << ',' << r.shots << ',' << o.label << ',' << o.count << ','
            << format_double(o.frequency) << ',' << format_double(o.analytic) << ','
            << format_double(o.analytic_trace) << ',' << format_double(o.std_error) << ',' << format_double(o.z)
            << ',' << bool_str(o.pass) << '\n';
    }
    return out.str();
}

std::string to_text(const FrequencyReport &r) {
    std::ostringstream out;
    out << to_string(r.protocol) << ": " << r.shots << " shots, seed " << r.seed << ", tolerance "
        << format_double(r.tolerance_sigma) << " sigma\n";
    for (const auto &[k, v] : r.parameters) {
        out << "  " << k << " = " << v << '\n';
    }
    out << "outcomes:\n";
    for (const OutcomeStat &o : r.outcomes) {
        out << "  " << o.label << "  count " << o.count << "  freq " << format_double(o.frequency) << "  analytic "
            << format_double(o.analytic) << "  z " << format_double(o.z) << (o.pass ? "  ok" : "  FAIL") << '\n';
    }
    out << "metrics:\n";
    for (const Metric &m : r.metrics) {
        out << "  " << m.name << " = " << format_double(m.value);
        if (m.expected) {
            out << " (expected " << format_double(*m.expected) << ")";
        }
        out << (m.pass ? "  ok" : "  FAIL") << '\n';
    }
    out << "ledger per run: " << r.per_run.ebits << " ebit, " << r.per_run.cbits_forward << " cbit forward, "
        << r.per_run.cbits_backward << " cbit backward\n";
    out << "literature (cited, not simulated): " << format_double(kClassicalProjectiveBits) << " and "
        << format_double(kClassicalPovmBits) << " bits, " << kClassicalCitation << '\n';
    out << "result: " << (r.pass ? "pass" : "FAIL") << '\n';
    return out.str();
}

std::string to_structured(const BranchComparison &c) {
    std::ostringstream out;
    out << "comparison.version = " << kReportVersion << '\n';
    out << "shots_per_branch = " << c.shots_per_branch << '\n';
    out << "tolerance_sigma = " << format_double(c.tolerance_sigma) << '\n';
    out << "analytic_max_deviation = " << format_double(c.analytic_max_deviation) << '\n';
    out << "analytic_equal = " << bool_str(c.analytic_equal) << '\n';
    out << "pass = " << bool_str(c.pass) << '\n';
    out << "outcome.count = " << c.outcomes.size() << '\n';
    for (std::size_t i = 0; i < c.outcomes.size(); ++i) {
        const BranchOutcome &o = c.outcomes[i];
        const std::string p = "outcome[" + std::to_string(i) + "].";
        out << p << "label = " << o.label << '\n';
        out << p << "count_v = " << o.count_v << '\n';
        out << p << "count_h = " << o.count_h << '\n';
        out << p << "analytic_v = " << format_double(o.analytic_v) << '\n';
        out << p << "analytic_h = " << format_double(o.analytic_h) << '\n';
        out << p << "z = " << format_double(o.z) << '\n';
        out << p << "pass = " << bool_str(o.pass) << '\n';
    }
    return out.str();
}

std::string to_csv(const BranchComparison &c) {
    std::ostringstream out;
    out << "label,count_v,count_h,analytic_v,analytic_h,z,pass\n";
    for (const BranchOutcome &o : c.outcomes) {
        out << o.label << ',' << o.count_v << ',' << o.count_h << ',' << format_double(o.analytic_v) << ','
            << format_double(o.analytic_h) << ',' << format_double(o.z) << ',' << bool_str(o.pass) << '\n';
    }
    return out.str();
}

std::string to_text(const BranchComparison &c) {
    std::ostringstream out;
    out << "branch comparison: " << c.shots_per_branch << " shots per branch, tolerance "
        << format_double(c.tolerance_sigma) << " sigma\n";
    for (const BranchOutcome &o : c.outcomes) {
        out << "  " << o.label << "  V " << o.count_v << "  H " << o.count_h << "  analytic "
            << format_double(o.analytic_v) << " / " << format_double(o.analytic_h) << "  z " << format_double(o.z)
            << (o.pass ? "  ok" : "  FAIL") << '\n';
    }
    out << "analytic max deviation: " << format_double(c.analytic_max_deviation) << '\n';
    out << "result: " << (c.pass ? "pass" : "FAIL") << '\n';
    return out.str();
}

}  // namespace rspm
