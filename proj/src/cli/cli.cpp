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


#include "rspm/cli.hpp"

#include "rspm/harness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

namespace rspm {

namespace {

class UsageError : public Error {
   public:
    using Error::Error;
};

struct CommonArgs {
    std::uint64_t shots = kDefaultShots;
    std::optional<std::uint64_t> seed;
    double sigma = kDefaultToleranceSigma;
    std::string output;
    std::string format = "text";
    bool transcript = false;
};

struct StateArgs {
    std::optional<double> alpha;
    std::optional<double> beta_re;
    std::optional<double> beta_im;
    std::optional<double> theta;
    std::optional<double> phi;

    bool amplitude_form() const { return alpha || beta_re || beta_im; }
};

struct Args {
    CommonArgs common;
    StateArgs state;
    std::string kind = "arbitrary";
    std::vector<double> b;
    std::string povm;
    bool trine = false;
    bool compare = false;
    std::vector<double> pi;
    bool singlet_projector = false;
    std::vector<double> m;
    std::string strategy = "none";
    std::uint64_t trials = 100;
    std::vector<std::string> files;
};

const CLI::Validator kFinite(
    [](std::string &s) -> std::string {
        try {
            if (!std::isfinite(parse_double(s))) {
                return "value must be finite";
            }
        } catch (const Error &) {
            return "expected a number, got '" + s + "'";
        }
        return {};
    },
    "FINITE", "finite");

void add_common(CLI::App *app, CommonArgs &c, bool shots) {
    if (shots) {
        app->add_option("--shots", c.shots, "Independent runs (default 100000)")->check(CLI::Range(1ULL, ~0ULL));
        app->add_option("--sigma", c.sigma, "Tolerance in standard errors (default 4)")
            ->check(kFinite)
            ->check(CLI::PositiveNumber);
        app->add_flag("--transcript", c.transcript, "Append the transcript of shot 0");
    }
    app->add_option("--seed", c.seed, "Base seed (default $RSPM_SEED, else 0)");
    app->add_option("--output,-o", c.output, "Write the report to this file instead of stdout");
    app->add_option("--format", c.format, "text, structured or csv")
        ->check(CLI::IsMember({"text", "structured", "csv"}));
}

void add_state(CLI::App *app, StateArgs &s, const std::string &what) {
    app->add_option("--alpha", s.alpha, "Amplitude of |H> for the " + what)->check(kFinite);
    app->add_option("--beta-re", s.beta_re, "Real part of the |V> amplitude")->check(kFinite);
    app->add_option("--beta-im", s.beta_im, "Imaginary part of the |V> amplitude")->check(kFinite);
    app->add_option("--theta", s.theta, "Polar angle on the Poincare sphere, radians")->check(kFinite);
    app->add_option("--phi", s.phi, "Azimuth on the Poincare sphere, radians; alone, an equatorial state")
        ->check(kFinite);
}

PureQubit resolve_state(const StateArgs &s, std::optional<EnsembleKind> kind) {
    if (kind == EnsembleKind::EquatorialCircle) {
        if (s.amplitude_form()) {
            throw UsageError("--alpha/--beta-re/--beta-im are not allowed with --kind equatorial; give --phi");
        }
        if (s.theta) {
            throw UsageError("--theta is not allowed with --kind equatorial; give --phi");
        }
        if (!s.phi) {
            throw UsageError("--kind equatorial requires --phi");
        }
    }
    if (s.amplitude_form()) {
        if (s.theta || s.phi) {
            throw UsageError("--alpha/--beta-re/--beta-im cannot be combined with --theta/--phi");
        }
        const Complex beta(s.beta_re.value_or(0.0), s.beta_im.value_or(0.0));
        try {
            return PureQubit::normalized(s.alpha.value_or(0.0), beta).canonical();
        } catch (const Error &) {
            throw UsageError("--alpha/--beta-re/--beta-im describe the zero vector");
        }
    }
    if (s.theta) {
        return state_from_bloch(PoincareVector::from_angles(*s.theta, s.phi.value_or(0.0)));
    }
    if (s.phi) {
        return equatorial_state(*s.phi).canonical();
    }
    throw UsageError("a state is required: --alpha/--beta-re/--beta-im, --theta/--phi, or --phi");
}

PoincareVector resolve_direction(const std::vector<double> &v, const char *flag) {
    try {
        return PoincareVector::direction(v.at(0), v.at(1), v.at(2));
    } catch (const Error &) {
        throw UsageError(std::string(flag) + " must be a nonzero direction");
    }
}

PovmSet parse_povm(const std::string &text) {
    std::vector<Vector3> vectors;
    std::stringstream elements(text);
    std::string element;
    while (std::getline(elements, element, ';')) {
        std::stringstream parts(element);
        std::string part;
        std::vector<double> xyz;
        while (std::getline(parts, part, ',')) {
            double v = 0.0;
            try {
                v = parse_double(part);
            } catch (const Error &) {
                throw UsageError("--povm: '" + part + "' is not a number");
            }
            if (!std::isfinite(v)) {
                throw UsageError("--povm: components must be finite");
            }
            xyz.push_back(v);
        }
        if (xyz.size() != 3) {
            throw UsageError("--povm: each element needs three components x,y,z");
        }
        vectors.emplace_back(xyz[0], xyz[1], xyz[2]);
    }
    if (vectors.empty()) {
        throw UsageError("--povm: no elements given");
    }
    try {
        return PovmSet(vectors);
    } catch (const Error &e) {
        throw UsageError(std::string("--povm: ") + e.what());
    }
}

JointOperator resolve_pi(const Args &a) {
    if (a.singlet_projector == !a.pi.empty()) {
        throw UsageError("joint needs exactly one of --pi or --singlet-projector");
    }
    if (a.singlet_projector) {
        return JointOperator::singlet_projector();
    }
    Eigen::Matrix3d t;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            t(i, j) = a.pi[static_cast<std::size_t>(6 + 3 * i + j)];
        }
    }
    try {
        const JointOperator pi(PoincareVector(a.pi[0], a.pi[1], a.pi[2]), PoincareVector(a.pi[3], a.pi[4], a.pi[5]),
                               t);
        pi.require_valid_effect();
        return pi;
    } catch (const Error &e) {
        throw UsageError(std::string("--pi: ") + e.what());
    }
}

std::uint64_t resolve_seed(const CommonArgs &c) {
    if (c.seed) {
        return *c.seed;
    }
    const char *env = std::getenv("RSPM_SEED");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw UsageError("RSPM_SEED must be an unsigned integer, got '" + std::string(s) + "'");
    }
    return v;
}

struct Output {
    std::string body;
    bool pass = true;
};

Output render(const FrequencyReport &r, const std::string &format) {
    if (format == "structured") {
        return {to_structured(r), r.pass};
    }
    if (format == "csv") {
        return {to_csv(r), r.pass};
    }
    return {to_text(r), r.pass};
}

Output run_spec(const ExperimentSpec &spec, const CommonArgs &c) {
    Output o = render(run_experiment(spec), c.format);
    if (c.transcript) {
        o.body += "# transcript\n" + shot_transcript(spec).to_text();
    }
    return o;
}

ExperimentSpec make_spec(ExperimentParams params, const CommonArgs &c) {
    return ExperimentSpec{std::move(params), c.shots, resolve_seed(c), c.sigma};
}

Output cmd_rsp(const Args &a) {
    const auto kind = parse_ensemble_kind(a.kind);
    if (!kind) {
        throw UsageError("--kind must be polar, equatorial or arbitrary");
    }
    const PureQubit target = resolve_state(a.state, *kind);
    if (!belongs_to(target, *kind)) {
        throw UsageError(std::string("target state is not on the ") + to_string(*kind) + " circle (--kind)");
    }
    return run_spec(make_spec(RspParams{target, *kind}, a.common), a.common);
}

Output cmd_rsm(const Args &a) {
    const int chosen = static_cast<int>(!a.b.empty()) + static_cast<int>(!a.povm.empty()) + static_cast<int>(a.trine);
    if (chosen != 1) {
        throw UsageError("rsm needs exactly one of --b, --povm or --trine");
    }
    const PoincareVector n = bloch_from_state(resolve_state(a.state, std::nullopt));
    ExperimentSpec spec = !a.b.empty()
                              ? make_spec(RsmProjectiveParams{n, resolve_direction(a.b, "--b")}, a.common)
                              : make_spec(RsmPovmParams{n, a.trine ? PovmSet::trine() : parse_povm(a.povm)}, a.common);
    if (!a.compare) {
        return run_spec(spec, a.common);
    }
    const BranchComparison c = compare_branches(spec);
    Output o;
    o.pass = c.pass;
    if (a.common.format == "structured") {
        o.body = to_structured(c);
    } else if (a.common.format == "csv") {
        o.body = to_csv(c);
    } else {
        o.body = to_text(c);
    }
    if (a.common.transcript) {
        o.body += "# transcript\n" + shot_transcript(spec).to_text();
    }
    return o;
}

Output cmd_joint(const Args &a) {
    const auto strategy = parse_equalization_strategy(a.strategy);
    if (!strategy) {
        throw UsageError("--strategy must be none, literal or exact");
    }
    if (a.m.empty()) {
        throw UsageError("joint requires --m");
    }
    const PoincareVector n = bloch_from_state(resolve_state(a.state, std::nullopt));
    return run_spec(make_spec(JointParams{n, resolve_pi(a), resolve_direction(a.m, "--m"), *strategy}, a.common),
                    a.common);
}

Output cmd_teleport(const Args &a) {
    return run_spec(make_spec(TeleportParams{resolve_state(a.state, std::nullopt)}, a.common), a.common);
}

Output cmd_nogo(const Args &a) { return run_spec(make_spec(NoGoParams{}, a.common), a.common); }

Output cmd_identities(const Args &a) {
    Rng rng(resolve_seed(a.common));
    double invariance = 0.0;
    double evolution = 0.0;
    for (std::uint64_t i = 0; i < a.trials; ++i) {
        const Unitary2 u = random_su2(rng);
        invariance = std::max(invariance, check_singlet_invariance(u));
        evolution = std::max(evolution, check_evolution_deevolution(u));
    }
    const double min_ev = universal_not_choi().min_eigenvalue;
    const bool inv_ok = invariance < kAlgebraicTol;
    const bool evo_ok = evolution < kAlgebraicTol;
    const bool choi_ok = std::abs(min_ev + 1.0) <= kAlgebraicTol;

    Output o;
    o.pass = inv_ok && evo_ok && choi_ok;
    std::ostringstream out;
    if (a.common.format == "structured") {
        out << "identities.trials = " << a.trials << '\n';
        out << "identities.singlet_invariance_max_deviation = " << format_double(invariance) << '\n';
        out << "identities.evolution_max_deviation = " << format_double(evolution) << '\n';
        out << "identities.choi_min_eigenvalue = " << format_double(min_ev) << '\n';
        out << "pass = " << (o.pass ? "true" : "false") << '\n';
    } else if (a.common.format == "csv") {
        out << "check,value,pass\n";
        out << "singlet_invariance_max_deviation," << format_double(invariance) << ',' << inv_ok << '\n';
        out << "evolution_max_deviation," << format_double(evolution) << ',' << evo_ok << '\n';
        out << "choi_min_eigenvalue," << format_double(min_ev) << ',' << choi_ok << '\n';
    } else {
        out << (inv_ok ? "Eq4 max deviation < 1e-12" : "Eq4 max deviation = " + format_double(invariance)) << "; "
            << (evo_ok ? "Eq5 max deviation < 1e-12" : "Eq5 max deviation = " + format_double(evolution)) << "; "
            << "Choi min eigenvalue = " << (choi_ok ? "-1" : format_double(min_ev)) << '\n';
    }
    o.body = out.str();
    return o;
}

std::vector<ExperimentSpec> default_report_specs(const CommonArgs &c) {
    const std::uint64_t seed = resolve_seed(c);
    const PoincareVector n = PoincareVector::from_angles(1.1, 0.7);
    std::vector<ExperimentParams> params = {
        RspParams{equatorial_state(std::numbers::pi / 2).canonical(), EnsembleKind::EquatorialCircle},
        RspParams{polar_state(0.4).canonical(), EnsembleKind::PolarCircle},
        RsmProjectiveParams{n, PoincareVector(0.0, 0.0, 1.0)},
        RsmPovmParams{n, PovmSet::trine()},
        TeleportParams{state_from_bloch(n)},
    };
    std::vector<ExperimentSpec> specs;
    for (std::size_t i = 0; i < params.size(); ++i) {
        specs.push_back(ExperimentSpec{params[i], c.shots, derive_seed(seed, i), c.sigma});
    }
    return specs;
}

std::string csv_quote(const std::string &s) {
    std::string out = "\"";
    for (char ch : s) {
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return out + "\"";
}

Output cmd_report(const Args &a) {
    std::vector<FrequencyReport> reports;
    if (a.files.empty()) {
        for (const ExperimentSpec &spec : default_report_specs(a.common)) {
            reports.push_back(run_experiment(spec));
        }
    } else {
        for (const std::string &path : a.files) {
            std::ifstream in(path);
            std::stringstream text;
            text << in.rdbuf();
            try {
                reports.push_back(parse_structured(text.str()));
            } catch (const Error &e) {
                throw UsageError(path + ": " + e.what());
            }
        }
    }
    const ResourceTable table = resource_summary(reports);
    Output o;
    o.pass = std::all_of(reports.begin(), reports.end(), [](const FrequencyReport &r) { return r.pass; });
    std::ostringstream out;
    if (a.common.format == "structured") {
        out << "table.version = 1\n";
        out << "row.count = " << table.rows.size() << '\n';
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const ResourceRow &r = table.rows[i];
            const std::string p = "row[" + std::to_string(i) + "].";
            out << p << "protocol = " << r.protocol << '\n';
            out << p << "ebits = " << format_double(r.ebits) << '\n';
            out << p << "cbits_forward = " << format_double(r.cbits_forward) << '\n';
            out << p << "cbits_backward = " << format_double(r.cbits_backward) << '\n';
            out << p << "simulated = " << (r.simulated ? "true" : "false") << '\n';
            out << p << "note = " << r.note << '\n';
        }
        out << "povm_saving_bits = " << format_double(table.povm_saving_bits) << '\n';
        out << "pass = " << (o.pass ? "true" : "false") << '\n';
    } else if (a.common.format == "csv") {
        out << "protocol,ebits,cbits_forward,cbits_backward,simulated,note\n";
        for (const ResourceRow &r : table.rows) {
            out << csv_quote(r.protocol) << ',' << format_double(r.ebits) << ',' << format_double(r.cbits_forward)
                << ',' << format_double(r.cbits_backward) << ',' << (r.simulated ? "true" : "false") << ','
                << csv_quote(r.note) << '\n';
        }
    } else {
        out << table.to_text();
    }
    o.body = out.str();
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app("Remote state preparation and measurement simulator. Angles are in radians.", "rspm");
    app.require_subcommand(1);
    Args a;

    CLI::App *rsp = app.add_subcommand("rsp", "Remote state preparation with one ebit and one cbit");
    add_common(rsp, a.common, true);
    add_state(rsp, a.state, "target state");
    rsp->add_option("--kind", a.kind, "polar, equatorial or arbitrary (default arbitrary)")
        ->check(CLI::IsMember({"polar", "equatorial", "arbitrary"}));

    CLI::App *rsm = app.add_subcommand("rsm", "Remote measurement of a remotely prepared state");
    add_common(rsm, a.common, true);
    add_state(rsm, a.state, "remotely prepared state");
    rsm->add_option("--b", a.b, "Projective measurement direction x y z")->expected(3)->check(kFinite);
    rsm->add_option("--povm", a.povm, "POVM vectors 'x,y,z;x,y,z;...' (weights are the norms)");
    rsm->add_flag("--trine", a.trine, "Use the trine POVM");
    rsm->add_flag("--compare-branches", a.compare, "Compare both of Alice's outcome branches");

    CLI::App *joint = app.add_subcommand("joint", "Joint measurement on the remote photon and one of Bob's own");
    add_common(joint, a.common, true);
    add_state(joint, a.state, "remotely prepared state");
    joint->add_option("--pi", a.pi, "Effect as 15 numbers: r (3), s (3), t row-major (9)")
        ->expected(15)
        ->check(kFinite);
    joint->add_flag("--singlet-projector", a.singlet_projector, "Use the singlet projector as the effect");
    joint->add_option("--m", a.m, "Bloch direction x y z of Bob's own photon")->expected(3)->check(kFinite);
    joint->add_option("--strategy", a.strategy, "Bit-H response: none, literal or exact (default none)")
        ->check(CLI::IsMember({"none", "literal", "exact"}));

    CLI::App *teleport = app.add_subcommand("teleport", "Teleportation with one ebit and two cbits");
    add_common(teleport, a.common, true);
    add_state(teleport, a.state, "input state");

    CLI::App *nogo = app.add_subcommand("nogo", "Universal-NOT check on random states");
    add_common(nogo, a.common, true);

    CLI::App *identities = app.add_subcommand("identities", "Singlet identities and the universal-NOT Choi check");
    add_common(identities, a.common, false);
    identities->add_option("--trials", a.trials, "Random SU(2) elements (default 100)")
        ->check(CLI::Range(1ULL, ~0ULL));

    CLI::App *report = app.add_subcommand("report", "Resource table from structured reports, or from default runs");
    add_common(report, a.common, true);
    report->add_option("files", a.files, "Structured report files")->check(CLI::ExistingFile);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Output result;
    try {
        if (rsp->parsed()) {
            result = cmd_rsp(a);
        } else if (rsm->parsed()) {
            result = cmd_rsm(a);
        } else if (joint->parsed()) {
            result = cmd_joint(a);
        } else if (teleport->parsed()) {
            result = cmd_teleport(a);
        } else if (nogo->parsed()) {
            result = cmd_nogo(a);
        } else if (identities->parsed()) {
            result = cmd_identities(a);
        } else {
            result = cmd_report(a);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (a.common.output.empty()) {
        out << result.body;
    } else {
        std::ofstream file(a.common.output, std::ios::binary);
        file << result.body;
        if (!file) {
            err << "error: cannot write --output " << a.common.output << '\n';
            return kExitUsage;
        }
    }
    if (!result.pass) {
        err << "check failed\n";
        return kExitInvariant;
    }
    return kExitOk;
}

}  // namespace rspm
