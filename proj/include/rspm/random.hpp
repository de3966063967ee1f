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

#ifndef RSPM_RANDOM_HPP
#define RSPM_RANDOM_HPP

#include "rspm/qmath.hpp"

#include <cstdint>
#include <random>

namespace rspm {

/// Mixes a base seed with a stream index (SplitMix64 finalizer). Used for
/// per-shot and per-trial seeds so that draws never depend on execution order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Seedable, splittable random stream.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the standard;
/// doubles are built from the top 53 bits rather than through
/// std::uniform_real_distribution so sequences are identical across standard
/// library implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Independent child stream; does not advance this stream.
    Rng split(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

PoincareVector random_unit_vector(Rng &rng);
/// Uniform (Haar) pure qubit in canonical phase.
PureQubit random_pure_qubit(Rng &rng);
/// make_su2(alpha, beta) for a Haar-random target state.
Unitary2 random_su2(Rng &rng);
/// Haar-random element of U(2), including a random global phase.
Unitary2 random_unitary(Rng &rng);
/// Random two-qubit pure state; generically entangled.
TwoQubitState random_two_qubit_state(Rng &rng);

}  // namespace rspm

#endif  // RSPM_RANDOM_HPP
