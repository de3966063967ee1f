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

#include "rspm/protocols/universal_not.hpp"

namespace rspm {

ChoiMatrix::ChoiMatrix(const QubitMap &map) : m_(Matrix4::Zero()) {
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Matrix2 unit = Matrix2::Zero();
            unit(i, j) = 1.0;
            m_ += tensor(unit, map(unit));
        }
    }
    if (!is_hermitian(m_)) {
        throw DomainError("Choi matrix of a Hermiticity-preserving map must be Hermitian");
    }
}

double ChoiMatrix::min_eigenvalue() const { return hermitian_eigenvalues(m_).minCoeff(); }

Matrix2 complement_map(const Matrix2 &rho) { return rho.trace() * Matrix2::Identity() - rho; }

UniversalNotCheck universal_not_choi() {
    ChoiMatrix choi(complement_map);
    const double min_ev = choi.min_eigenvalue();
    return {std::move(choi), min_ev};
}

}  // namespace rspm
