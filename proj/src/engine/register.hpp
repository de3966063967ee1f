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

#ifndef RSPM_ENGINE_REGISTER_HPP
#define RSPM_ENGINE_REGISTER_HPP

#include "rspm/qmath.hpp"

#include <span>
#include <vector>

namespace rspm {

// Dense state vector over the few photons of one session. Qubit 0 is the
// most significant index bit, so a pair appended as (A, B) keeps the
// (HH, HV, VH, VV) ordering.
class QuantumRegister {
   public:
    static constexpr std::size_t kMaxQubits = 6;

    std::size_t qubits() const { return qubits_; }

    // Appends the qubits of `state` (length 2^k); returns the first new index.
    std::size_t append(const Eigen::VectorXcd &state);

    void apply(const Eigen::MatrixXcd &op, std::span<const std::size_t> targets);
    double expectation(const Eigen::MatrixXcd &op, std::span<const std::size_t> targets) const;
    void renormalize();

    Matrix2 reduced(std::size_t q) const;

   private:
    std::size_t bit(std::size_t q) const { return std::size_t{1} << (qubits_ - 1 - q); }
    void check_targets(const Eigen::MatrixXcd &op, std::span<const std::size_t> targets) const;

    template <typename Fn>
    void for_each_block(std::span<const std::size_t> targets, Fn &&fn) const;

    std::size_t qubits_ = 0;
    Eigen::VectorXcd amps_ = Eigen::VectorXcd::Ones(1);
};

}  // namespace rspm

#endif  // RSPM_ENGINE_REGISTER_HPP
