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


#include "rspm/harness/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <variant>

namespace rspm {

namespace {

template <typename... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

ShotRecord nogo_shot(Session &session) {
    const PoincareVector n = random_unit_vector(session.rng());
    const Matrix2 image = complement_map(density_from_bloch(n).matrix());
    // Throws if the image is not a state; it always is on product inputs.
    const DensityMatrix2 rho(image);
    const double error = (bloch_from_density(rho).vec() + n.vec()).cwiseAbs().maxCoeff();
    const double p_plus = std::clamp((projector(-n, Sign::Plus) * image).trace().real(), 0.0, 1.0);
    const std::uint32_t outcome = session.rng().uniform() < p_plus ? 0 : 1;
    session.finish();
    return {outcome, error, session.ledger()};
}

}  // namespace

ShotRecord run_shot(const ExperimentSpec &spec, std::uint64_t seed, std::uint64_t index, std::optional<Bit> forced,
                    Session *session_out) {
    Session session(derive_seed(seed, index));
    const ShotRecord rec = std::visit(
        Overloaded{
            [&](const RspParams &p) {
                const RspRunResult r = rsp_run(p.target, p.kind, session, forced);
                return ShotRecord{static_cast<std::uint32_t>(to_int(r.alice_outcome)), r.fidelity, r.ledger};
            },
            [&](const RsmProjectiveParams &p) {
                const RsmShot s = rsm_projective_shot(session, state_from_bloch(p.target_n), p.b, forced);
                return ShotRecord{static_cast<std::uint32_t>(s.bob_outcome), 0.0, session.ledger()};
            },
            [&](const RsmPovmParams &p) {
                const RsmShot s = rsm_povm_shot(session, state_from_bloch(p.target_n), p.povm, forced);
                return ShotRecord{static_cast<std::uint32_t>(s.bob_outcome), 0.0, session.ledger()};
            },
            [&](const JointParams &p) {
                const JointShot s = joint_shot(session, state_from_bloch(p.target_n), p.pi, p.m, p.strategy, forced);
                const auto k = static_cast<std::uint32_t>(2 * to_int(s.alice_outcome) + s.bob_outcome);
                return ShotRecord{k, 0.0, session.ledger()};
            },
            [&](const TeleportParams &p) {
                const TeleportResult r = teleport(p.input, session);
                return ShotRecord{static_cast<std::uint32_t>(r.outcome), r.fidelity, r.ledger};
            },
            [&](const NoGoParams &) { return nogo_shot(session); },
        },
        spec.params);
    if (session_out) {
        *session_out = std::move(session);
    }
    return rec;
}

std::vector<ShotRecord> run_shots_serial(const ExperimentSpec &spec, std::uint64_t seed, std::optional<Bit> forced) {
    std::vector<ShotRecord> out;
    out.reserve(spec.shots);
    for (std::uint64_t i = 0; i < spec.shots; ++i) {
        out.push_back(run_shot(spec, seed, i, forced));
    }
    return out;
}

std::vector<ShotRecord> run_shots_parallel(const ExperimentSpec &spec, std::uint64_t seed,
                                           std::optional<Bit> forced) {
    std::vector<ShotRecord> out(spec.shots);
    const auto n = static_cast<std::int64_t>(spec.shots);
    std::exception_ptr error;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = run_shot(spec, seed, static_cast<std::uint64_t>(i), forced);
        } catch (...) {
#pragma omp critical(rspm_shot_error)
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

std::vector<ShotRecord> run_shots(const ExperimentSpec &spec, std::uint64_t seed, Execution exec,
                                  std::optional<Bit> forced) {
    return exec == Execution::Serial ? run_shots_serial(spec, seed, forced) : run_shots_parallel(spec, seed, forced);
}

int worker_threads() { return omp_get_max_threads(); }

}  // namespace rspm
