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

#include "rspm/random.hpp"

#include <cmath>
#include <numbers>

namespace rspm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Two independent standard normals would need std::normal_distribution, whose
// output is implementation-defined. Marsaglia's disk sampling gives a uniform
// point on S^3 from uniforms only.
std::array<double, 4> random_point_s3(Rng &rng) {
    double x1, y1, s1;
    do {
        x1 = rng.uniform(-1.0, 1.0);
        y1 = rng.uniform(-1.0, 1.0);
        s1 = x1 * x1 + y1 * y1;
    } while (s1 >= 1.0);
    double x2, y2, s2;
    do {
        x2 = rng.uniform(-1.0, 1.0);
        y2 = rng.uniform(-1.0, 1.0);
        s2 = x2 * x2 + y2 * y2;
    } while (s2 >= 1.0 || s2 == 0.0);
    const double k = std::sqrt((1.0 - s1) / s2);
    return {x1, y1, x2 * k, y2 * k};
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (index + 0x632be59bd9b4e019ULL));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

PoincareVector random_unit_vector(Rng &rng) {
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    return PoincareVector::direction(rho * std::cos(phi), rho * std::sin(phi), z);
}

PureQubit random_pure_qubit(Rng &rng) { return state_from_bloch(random_unit_vector(rng)); }

Unitary2 random_su2(Rng &rng) {
    const PureQubit psi = random_pure_qubit(rng);
    return make_su2(psi.aH().real(), psi.aV());
}

Unitary2 random_unitary(Rng &rng) {
    const auto q = random_point_s3(rng);
    const Complex a(q[0], q[1]);
    const Complex b(q[2], q[3]);
    const double gamma = rng.uniform(0.0, 2.0 * std::numbers::pi);
    Matrix2 m;
    m << a, -std::conj(b), b, std::conj(a);
    return Unitary2(std::polar(1.0, gamma) * m);
}

TwoQubitState random_two_qubit_state(Rng &rng) {
    const auto p = random_point_s3(rng);
    const auto q = random_point_s3(rng);
    Eigen::Vector4cd v;
    v << Complex(p[0], p[1]), Complex(p[2], p[3]), Complex(q[0], q[1]), Complex(q[2], q[3]);
    return TwoQubitState::normalized(v);
}

}  // namespace rspm
