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

#include "rspm/protocols/singlet.hpp"

#include <cmath>

namespace rspm {

TwoQubitState epr_singlet() {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Vector4cd v;
    v << 0.0, s, -s, 0.0;
    return TwoQubitState(v);
}

TwoQubitState apply_operator(const Matrix4 &op, const TwoQubitState &psi) {
    return TwoQubitState(Eigen::Vector4cd(op * psi.amplitudes()));
}

double check_singlet_invariance(const Unitary2 &u) {
    const TwoQubitState singlet = epr_singlet();
    return 1.0 - fidelity(singlet, apply_operator(tensor(u.matrix(), u.matrix()), singlet));
}

double check_evolution_deevolution(const Unitary2 &u) {
    const TwoQubitState singlet = epr_singlet();
    const TwoQubitState forward = apply_operator(tensor(u.matrix(), Matrix2::Identity()), singlet);
    const TwoQubitState backward = apply_operator(tensor(Matrix2::Identity(), u.adjoint().matrix()), singlet);
    return 1.0 - fidelity(forward, backward);
}

}  // namespace rspm
