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

#include "rspm/protocols/rsm.hpp"

#include "rspm/protocols/rsp.hpp"

#include <cmath>
#include <numbers>

namespace rspm {

Matrix2 projector(const PoincareVector &b, Sign sign) {
    return 0.5 * (Matrix2::Identity() + sign_value(sign) * b.dot_sigma());
}

double projective_probability(const PoincareVector &b, const PoincareVector &n, Sign sign) {
    if (!b.is_unit()) {
        throw DomainError("measurement direction b must be a unit vector");
    }
    return 0.5 * (1.0 + sign_value(sign) * b.dot(n));
}

RsmProjectiveResult rsm_projective(const PoincareVector &target_n, const PoincareVector &b, Bit alice_outcome) {
    if (!target_n.is_unit() || !b.is_unit()) {
        throw DomainError("remote measurement needs unit target and apparatus vectors");
    }
    // Bit H leaves Bob with the complement, Bloch vector -n.
    const bool complement = alice_outcome == Bit::H;
    const PoincareVector held = complement ? -target_n : target_n;
    const PoincareVector effective_b = complement ? -b : b;
    return {effective_b,
            {projective_probability(effective_b, held, Sign::Plus), projective_probability(effective_b, held, Sign::Minus)}};
}

PovmSet::PovmSet(const std::vector<Vector3> &vectors) {
    elements_.reserve(vectors.size());
    for (const auto &v : vectors) {
        if (!v.allFinite() || v.norm() > 1.0 + kAlgebraicTol) {
            throw CompletenessError("POVM vector must be finite with norm at most 1");
        }
        elements_.push_back({v.norm(), PoincareVector(v)});
    }
    validate();
}

PovmSet::PovmSet(std::vector<PovmElement> elements) : elements_(std::move(elements)) { validate(); }

void PovmSet::validate() const {
    if (elements_.empty()) {
        throw CompletenessError("POVM needs at least one element");
    }
    double weight_sum = 0.0;
    Vector3 vector_sum = Vector3::Zero();
    for (const auto &e : elements_) {
        if (!std::isfinite(e.weight) || std::abs(e.weight - e.direction.norm()) > kAlgebraicTol) {
            throw CompletenessError("POVM weight must equal |f_mu|");
        }
        weight_sum += e.weight;
        vector_sum += e.direction.vec();
    }
    if (std::abs(weight_sum - 2.0) > kAlgebraicTol) {
        throw CompletenessError("POVM weights must sum to 2");
    }
    if (vector_sum.cwiseAbs().maxCoeff() > kAlgebraicTol) {
        throw CompletenessError("POVM vectors must sum to zero");
    }
}

PovmSet PovmSet::trine() {
    const double w = 2.0 / 3.0;
    const double c = std::cos(2.0 * std::numbers::pi / 3.0);
    const double s = std::sin(2.0 * std::numbers::pi / 3.0);
    return PovmSet(std::vector<Vector3>{Vector3(0.0, 0.0, w), Vector3(w * s, 0.0, w * c), Vector3(-w * s, 0.0, w * c)});
}

PovmSet PovmSet::projective(const PoincareVector &b) {
    if (!b.is_unit()) {
        throw DomainError("projective POVM needs a unit direction");
    }
    return PovmSet(std::vector<Vector3>{b.vec(), -b.vec()});
}

PovmSet PovmSet::flipped() const {
    std::vector<PovmElement> out;
    out.reserve(elements_.size());
    for (const auto &e : elements_) {
        out.push_back({e.weight, -e.direction});
    }
    return PovmSet(std::move(out));
}

Matrix2 PovmSet::effect(std::size_t i) const {
    const auto &e = elements_.at(i);
    return 0.5 * (e.weight * Matrix2::Identity() + e.direction.dot_sigma());
}

std::vector<Eigen::MatrixXcd> PovmSet::effects() const {
    std::vector<Eigen::MatrixXcd> out;
    out.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        out.emplace_back(effect(i));
    }
    return out;
}

std::vector<double> povm_distribution(const PovmSet &povm, const PoincareVector &n) {
    std::vector<double> out;
    out.reserve(povm.size());
    for (const auto &e : povm.elements()) {
        out.push_back(0.5 * (e.weight + e.direction.dot(n)));
    }
    return out;
}

std::vector<double> rsm_povm(const PoincareVector &target_n, const PovmSet &povm, Bit alice_outcome) {
    if (alice_outcome == Bit::H) {
        return povm_distribution(povm.flipped(), -target_n);
    }
    return povm_distribution(povm, target_n);
}

RsmShot rsm_projective_shot(Session &session, const PureQubit &target, const PoincareVector &b,
                            std::optional<Bit> forced) {
    if (!b.is_unit()) {
        throw DomainError("measurement direction b must be a unit vector");
    }
    const RemotePreparation prep = prepare_remote(session, target, forced);
    const PoincareVector effective_b = prep.message.bit == Bit::H ? -b : b;
    const std::vector<Eigen::MatrixXcd> effects{projector(effective_b, Sign::Plus),
                                                projector(effective_b, Sign::Minus)};
    const std::size_t result = session.measure_effects(Party::Bob, std::span(&prep.halves.bob, 1), effects,
                                                       prep.message.bit == Bit::H ? "P(-b)" : "P(b)");
    session.finish();
    return {prep.alice_outcome, result};
}

RsmShot rsm_povm_shot(Session &session, const PureQubit &target, const PovmSet &povm, std::optional<Bit> forced) {
    const RemotePreparation prep = prepare_remote(session, target, forced);
    const PovmSet device = prep.message.bit == Bit::H ? povm.flipped() : povm;
    const std::size_t result = session.measure_effects(Party::Bob, std::span(&prep.halves.bob, 1), device.effects(),
                                                       prep.message.bit == Bit::H ? "POVM(-f)" : "POVM(f)");
    session.finish();
    return {prep.alice_outcome, result};
}

}  // namespace rspm
