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

#ifndef RSPM_PROTOCOLS_SINGLET_HPP
#define RSPM_PROTOCOLS_SINGLET_HPP

#include "rspm/qmath.hpp"

namespace rspm {

/// (|H>_A |V>_B - |V>_A |H>_B) / sqrt(2).
TwoQubitState epr_singlet();

TwoQubitState apply_operator(const Matrix4 &op, const TwoQubitState &psi);

/// 1 - |<singlet| (U (x) U) |singlet>|^2. Zero for every unitary U.
double check_singlet_invariance(const Unitary2 &u);

/// 1 - |<a|b>|^2 with a = (U (x) I)|singlet>, b = (I (x) U^dagger)|singlet>:
/// rotating one half forward equals rotating the other half backward.
double check_evolution_deevolution(const Unitary2 &u);

}  // namespace rspm

#endif  // RSPM_PROTOCOLS_SINGLET_HPP
