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

#ifndef RSPM_PROTOCOLS_RSM_HPP
#define RSPM_PROTOCOLS_RSM_HPP

#include "rspm/engine.hpp"

#include <array>
#include <optional>
#include <vector>

namespace rspm {

class CompletenessError : public Error {
   public:
    using Error::Error;
};

enum class Sign : std::uint8_t { Plus, Minus };

inline double sign_value(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

/// P_{+/-}(b) = (I +/- b.sigma) / 2.
Matrix2 projector(const PoincareVector &b, Sign sign);

/// (1 +/- b.n) / 2. Throws DomainError unless b is a unit vector.
double projective_probability(const PoincareVector &b, const PoincareVector &n, Sign sign);

struct RsmProjectiveResult {
    PoincareVector effective_b;
    /// {P_+, P_-} for the state Bob holds, measured along effective_b.
    std::array<double, 2> probabilities;
};

/// Bob's apparatus choice given Alice's bit: on bit H he holds the state with
/// Bloch vector -n and measures along -b, reproducing (1 +/- b.n)/2.
RsmProjectiveResult rsm_projective(const PoincareVector &target_n, const PoincareVector &b, Bit alice_outcome);

struct PovmElement {
    double weight;
    PoincareVector direction;
};

/// Qubit POVM with elements F = (|f| I + f.sigma) / 2.
class PovmSet {
   public:
    /// Weights are the vector norms. Throws CompletenessError unless the
    /// weights sum to 2 and the vectors sum to 0 (within kAlgebraicTol).
    explicit PovmSet(const std::vector<Vector3> &vectors);
    /// Explicit weights must equal the vector norms.
    explicit PovmSet(std::vector<PovmElement> elements);

    /// Three weight-2/3 vectors at 120 degrees in the x-z plane, the first
    /// along +z.
    static PovmSet trine();
    /// {P_+(b), P_-(b)} written as a POVM.
    static PovmSet projective(const PoincareVector &b);

    std::size_t size() const { return elements_.size(); }
    const std::vector<PovmElement> &elements() const { return elements_; }
    const PovmElement &operator[](std::size_t i) const { return elements_[i]; }

    /// Same weights, every vector negated; still complete.
    PovmSet flipped() const;
    Matrix2 effect(std::size_t i) const;
    std::vector<Eigen::MatrixXcd> effects() const;

   private:
    void validate() const;
    std::vector<PovmElement> elements_;
};

/// (|f_mu| + f_mu.n) / 2 for each element.
std::vector<double> povm_distribution(const PovmSet &povm, const PoincareVector &n);

/// Distribution Bob observes given Alice's bit, flipping every f_mu on bit H.
std::vector<double> rsm_povm(const PoincareVector &target_n, const PovmSet &povm, Bit alice_outcome);

struct RsmShot {
    Bit alice_outcome;
    std::size_t bob_outcome;
};

/// One full-stack run: Alice prepares the target remotely without
/// correction, Bob measures along b or -b depending on the received bit.
RsmShot rsm_projective_shot(Session &session, const PureQubit &target, const PoincareVector &b,
                            std::optional<Bit> forced = std::nullopt);
RsmShot rsm_povm_shot(Session &session, const PureQubit &target, const PovmSet &povm,
                      std::optional<Bit> forced = std::nullopt);

}  // namespace rspm

#endif  // RSPM_PROTOCOLS_RSM_HPP
