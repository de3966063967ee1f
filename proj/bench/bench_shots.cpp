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


// Times the serial reference shot loop against the OpenMP loop and checks
// that both produce the same report.
//
// usage: rspm_bench [shots] [repeats]

#include "rspm/harness.hpp"
#include "rspm/harness/kernels.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numbers>

namespace {

double seconds_for(const rspm::ExperimentSpec &spec, rspm::Execution exec, int repeats, std::string &report) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) {
        report = rspm::to_structured(rspm::run_experiment(spec, exec));
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count() / repeats;
}

}  // namespace

int main(int argc, char **argv) {
    const std::uint64_t shots = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 100000;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    if (shots == 0 || repeats <= 0) {
        std::cerr << "usage: rspm_bench [shots >= 1] [repeats >= 1]\n";
        return 2;
    }

    const rspm::PoincareVector n = rspm::PoincareVector::from_angles(1.1, 0.7);
    const std::pair<const char *, rspm::ExperimentParams> cases[] = {
        {"rsp", rspm::RspParams{rspm::equatorial_state(std::numbers::pi / 3), rspm::EnsembleKind::EquatorialCircle}},
        {"rsm-povm", rspm::RsmPovmParams{n, rspm::PovmSet::trine()}},
        {"joint", rspm::JointParams{n, rspm::JointOperator::singlet_projector(), rspm::PoincareVector(0, 0, 1),
                                    rspm::EqualizationStrategy::Exact}},
        {"teleport", rspm::TeleportParams{rspm::state_from_bloch(n)}},
    };

    std::cout << "threads " << rspm::worker_threads() << ", shots " << shots << ", repeats " << repeats << '\n';
    std::cout << "protocol serial_s parallel_s speedup identical\n";
    bool all_identical = true;
    for (const auto &[name, params] : cases) {
        const rspm::ExperimentSpec spec{params, shots, 12345};
        std::string serial_report;
        std::string parallel_report;
        const double ts = seconds_for(spec, rspm::Execution::Serial, repeats, serial_report);
        const double tp = seconds_for(spec, rspm::Execution::Parallel, repeats, parallel_report);
        const bool identical = serial_report == parallel_report;
        all_identical = all_identical && identical;
        std::cout << name << ' ' << ts << ' ' << tp << ' ' << ts / tp << ' ' << (identical ? "yes" : "no") << '\n';
    }
    return all_identical ? 0 : 1;
}
