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

#include "register.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace rspm {

std::size_t QuantumRegister::append(const Eigen::VectorXcd &state) {
    const auto n = static_cast<std::size_t>(state.size());
    if (n < 2 || (n & (n - 1)) != 0) {
        throw DimensionError("register append expects a state of length 2^k");
    }
    const auto k = static_cast<std::size_t>(std::countr_zero(n));
    if (qubits_ + k > kMaxQubits) {
        throw DimensionError("session register is limited to a handful of photons");
    }
    Eigen::VectorXcd out(amps_.size() * state.size());
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        out.segment(i * state.size(), state.size()) = amps_(i) * state;
    }
    amps_ = std::move(out);
    const std::size_t first = qubits_;
    qubits_ += k;
    return first;
}

void QuantumRegister::check_targets(const Eigen::MatrixXcd &op, std::span<const std::size_t> targets) const {
    const std::size_t dim = std::size_t{1} << targets.size();
    if (targets.empty() || static_cast<std::size_t>(op.rows()) != dim || static_cast<std::size_t>(op.cols()) != dim) {
        throw DimensionError("operator size does not match the number of target photons");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] >= qubits_) {
            throw DimensionError("target photon does not exist");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw DimensionError("duplicate target photon");
            }
        }
    }
}

template <typename Fn>
void QuantumRegister::for_each_block(std::span<const std::size_t> targets, Fn &&fn) const {
    std::size_t mask = 0;
    for (auto t : targets) {
        mask |= bit(t);
    }
    const std::size_t dim = std::size_t{1} << targets.size();
    std::vector<Eigen::Index> idx(dim);
    const auto total = static_cast<std::size_t>(amps_.size());
    for (std::size_t base = 0; base < total; ++base) {
        if (base & mask) {
            continue;
        }
        for (std::size_t s = 0; s < dim; ++s) {
            std::size_t i = base;
            for (std::size_t j = 0; j < targets.size(); ++j) {
                if (s & (std::size_t{1} << (targets.size() - 1 - j))) {
                    i |= bit(targets[j]);
                }
            }
            idx[s] = static_cast<Eigen::Index>(i);
        }
        fn(idx);
    }
}

void QuantumRegister::apply(const Eigen::MatrixXcd &op, std::span<const std::size_t> targets) {
    check_targets(op, targets);
    Eigen::VectorXcd sub(op.rows());
    for_each_block(targets, [&](const std::vector<Eigen::Index> &idx) {
        for (std::size_t s = 0; s < idx.size(); ++s) {
            sub(static_cast<Eigen::Index>(s)) = amps_(idx[s]);
        }
        const Eigen::VectorXcd out = op * sub;
        for (std::size_t s = 0; s < idx.size(); ++s) {
            amps_(idx[s]) = out(static_cast<Eigen::Index>(s));
        }
    });
}

double QuantumRegister::expectation(const Eigen::MatrixXcd &op, std::span<const std::size_t> targets) const {
    check_targets(op, targets);
    Eigen::VectorXcd sub(op.rows());
    Complex acc = 0.0;
    for_each_block(targets, [&](const std::vector<Eigen::Index> &idx) {
        for (std::size_t s = 0; s < idx.size(); ++s) {
            sub(static_cast<Eigen::Index>(s)) = amps_(idx[s]);
        }
        acc += sub.dot(op * sub);
    });
    return acc.real();
}

void QuantumRegister::renormalize() {
    const double n = amps_.norm();
    if (n == 0.0) {
        throw NormalizationError("register collapsed onto a zero-probability branch");
    }
    amps_ /= n;
}

Matrix2 QuantumRegister::reduced(std::size_t q) const {
    if (q >= qubits_) {
        throw DimensionError("photon does not exist");
    }
    Matrix2 rho = Matrix2::Zero();
    const std::size_t b = bit(q);
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (ui & b) {
            continue;
        }
        const Complex a0 = amps_(i);
        const Complex a1 = amps_(static_cast<Eigen::Index>(ui | b));
        rho(0, 0) += a0 * std::conj(a0);
        rho(0, 1) += a0 * std::conj(a1);
        rho(1, 0) += a1 * std::conj(a0);
        rho(1, 1) += a1 * std::conj(a1);
    }
    return rho;
}

}  // namespace rspm
