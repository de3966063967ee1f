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

#ifndef RSPM_PROTOCOLS_UNIVERSAL_NOT_HPP
#define RSPM_PROTOCOLS_UNIVERSAL_NOT_HPP

#include "rspm/qmath.hpp"

#include <functional>

namespace rspm {

using QubitMap = std::function<Matrix2(const Matrix2 &)>;

/// Unnormalized Choi matrix sum_ij |i><j| (x) map(|i><j|).
class ChoiMatrix {
   public:
    explicit ChoiMatrix(const QubitMap &map);

    const Matrix4 &matrix() const { return m_; }
    double min_eigenvalue() const;
    bool completely_positive() const { return min_eigenvalue() >= -kEigenTol; }

   private:
    Matrix4 m_;
};

/// rho -> I tr(rho) - rho, which sends the Bloch vector n to -n.
Matrix2 complement_map(const Matrix2 &rho);

struct UniversalNotCheck {
    ChoiMatrix choi;
    double min_eigenvalue;
};

/// Choi matrix of the complement map; min eigenvalue -1 shows it is not
/// completely positive.
UniversalNotCheck universal_not_choi();

}  // namespace rspm

#endif  // RSPM_PROTOCOLS_UNIVERSAL_NOT_HPP
