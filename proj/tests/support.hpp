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


#ifndef RSPM_TESTS_SUPPORT_HPP
#define RSPM_TESTS_SUPPORT_HPP

#include "generators.hpp"
#include "oracles.hpp"
#include "rspm/qmath.hpp"

namespace support {

inline rspm::PureQubit qubit(const std::pair<double, oracle::C> &ab) { return rspm::PureQubit(ab.first, ab.second); }

inline oracle::Vec2 amplitudes(const rspm::PureQubit &psi) { return {psi.aH(), psi.aV()}; }

inline rspm::PoincareVector vec(const oracle::Real3 &v) { return rspm::PoincareVector(v[0], v[1], v[2]); }

inline oracle::Real3 real3(const rspm::PoincareVector &v) { return {v.x(), v.y(), v.z()}; }

inline oracle::Mat2 mat(const rspm::Matrix2 &m) { return {{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}}; }

inline oracle::Mat4 mat(const rspm::Matrix4 &m) {
    oracle::Mat4 out{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out[i][j] = m(i, j);
        }
    }
    return out;
}

inline double max_diff(const oracle::Mat4 &a, const oracle::Mat4 &b) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            d = std::max(d, std::abs(a[i][j] - b[i][j]));
        }
    }
    return d;
}

inline double max_diff(const oracle::Mat2 &a, const oracle::Mat2 &b) {
    double d = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            d = std::max(d, std::abs(a[i][j] - b[i][j]));
        }
    }
    return d;
}

}  // namespace support

#endif  // RSPM_TESTS_SUPPORT_HPP
