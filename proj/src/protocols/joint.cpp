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

#include "rspm/protocols/joint.hpp"

#include "rspm/protocols/rsp.hpp"

#include <cmath>
#include <numbers>

namespace rspm {

namespace {

Matrix4 pauli_pair(int i, int j) { return tensor(pauli(i), pauli(j)); }

// Eq.-12 style expansion without any validity requirement on (r, s, t).
double expansion(const Vector3 &r, const Vector3 &s, const Eigen::Matrix3d &t, const Vector3 &n, const Vector3 &m) {
    return 0.25 * (1.0 + r.dot(n) + s.dot(m) + n.dot(t * m));
}

}  // namespace

JointOperator::JointOperator(const PoincareVector &r, const PoincareVector &s, const Eigen::Matrix3d &t)
    : r_(r), s_(s), t_(t) {
    if (!t_.allFinite()) {
        throw DomainError("correlation matrix t must be finite");
    }
}

JointOperator JointOperator::from_matrix(const Matrix4 &m) {
    if (!is_hermitian(m)) {
        throw InvalidEffect("joint operator must be Hermitian");
    }
    if (std::abs(m.trace() - Complex(1.0, 0.0)) > kAlgebraicTol) {
        throw InvalidEffect("joint operator must have unit trace");
    }
    Vector3 r, s;
    Eigen::Matrix3d t;
    for (int i = 1; i <= 3; ++i) {
        r(i - 1) = (m * pauli_pair(i, 0)).trace().real();
        s(i - 1) = (m * pauli_pair(0, i)).trace().real();
        for (int j = 1; j <= 3; ++j) {
            t(i - 1, j - 1) = (m * pauli_pair(i, j)).trace().real();
        }
    }
    return JointOperator(PoincareVector(r), PoincareVector(s), t);
}

JointOperator JointOperator::singlet_projector() {
    return JointOperator(PoincareVector(), PoincareVector(), -Eigen::Matrix3d::Identity());
}

JointOperator JointOperator::identity_quarter() {
    return JointOperator(PoincareVector(), PoincareVector(), Eigen::Matrix3d::Zero());
}

JointOperator JointOperator::product_effect(const PoincareVector &b) {
    return JointOperator(b, PoincareVector(), Eigen::Matrix3d::Zero());
}

JointOperator JointOperator::projector_onto(const TwoQubitState &psi) {
    return from_matrix(density(psi).matrix());
}

Matrix4 JointOperator::matrix() const {
    Matrix4 m = pauli_pair(0, 0);
    for (int i = 1; i <= 3; ++i) {
        m += r_.vec()(i - 1) * pauli_pair(i, 0) + s_.vec()(i - 1) * pauli_pair(0, i);
        for (int j = 1; j <= 3; ++j) {
            m += t_(i - 1, j - 1) * pauli_pair(i, j);
        }
    }
    return 0.25 * m;
}

bool JointOperator::is_valid_effect() const {
    const Eigen::VectorXd ev = hermitian_eigenvalues(matrix());
    return ev.minCoeff() >= -kEigenTol && ev.maxCoeff() <= 1.0 + kEigenTol;
}

void JointOperator::require_valid_effect() const {
    if (!is_valid_effect()) {
        throw InvalidEffect("joint operator is not a measurement effect (eigenvalues outside [0, 1])");
    }
}

JointOperator JointOperator::with_signs(Sign r_sign, Sign s_sign) const {
    return JointOperator(r_sign == Sign::Plus ? r_ : -r_, s_sign == Sign::Plus ? s_ : -s_, t_);
}

double joint_expansion(const JointOperator &pi, const PoincareVector &n, const PoincareVector &m) {
    return expansion(pi.r().vec(), pi.s().vec(), pi.t(), n.vec(), m.vec());
}

double joint_probability(const JointOperator &pi, const PoincareVector &n, const PoincareVector &m) {
    pi.require_valid_effect();
    return joint_expansion(pi, n, m);
}

double joint_probability_trace(const JointOperator &pi, const PoincareVector &n, const PoincareVector &m) {
    const Matrix4 rho = tensor(density_from_bloch(n).matrix(), density_from_bloch(m).matrix());
    return (pi.matrix() * rho).trace().real();
}

std::array<double, 2> joint_branch_probabilities(const JointOperator &pi, const PoincareVector &n,
                                                 const PoincareVector &m) {
    return {joint_probability(pi, n, m), joint_probability(pi, -n, m)};
}

double joint_discrepancy(const JointOperator &pi, const PoincareVector &n, const PoincareVector &m) {
    const auto p = joint_branch_probabilities(pi, n, m);
    return std::abs(p[0] - p[1]);
}

std::array<double, 4> sign_flip_discrepancies(const JointOperator &pi, const PoincareVector &n,
                                              const PoincareVector &m) {
    const double target = joint_probability(pi, n, m);
    std::array<double, 4> out{};
    std::size_t k = 0;
    for (Sign rs : {Sign::Plus, Sign::Minus}) {
        for (Sign ss : {Sign::Plus, Sign::Minus}) {
            const Vector3 r = sign_value(rs) * pi.r().vec();
            const Vector3 s = sign_value(ss) * pi.s().vec();
            out[k++] = std::abs(target - expansion(r, s, pi.t(), -n.vec(), m.vec()));
        }
    }
    return out;
}

JointOperator double_spin_flip(const JointOperator &pi) {
    const Matrix4 yy = pauli_pair(2, 2);
    return JointOperator::from_matrix(yy * pi.matrix().conjugate() * yy);
}

const char *to_string(EqualizationStrategy s) {
    switch (s) {
        case EqualizationStrategy::None:
            return "none";
        case EqualizationStrategy::Literal:
            return "literal";
        case EqualizationStrategy::Exact:
            return "exact";
    }
    return "unknown";
}

std::optional<EqualizationStrategy> parse_equalization_strategy(std::string_view s) {
    if (s == "none") return EqualizationStrategy::None;
    if (s == "literal") return EqualizationStrategy::Literal;
    if (s == "exact") return EqualizationStrategy::Exact;
    return std::nullopt;
}

std::vector<PoincareVector> sphere_grid(std::size_t k) {
    std::vector<PoincareVector> out;
    out.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        const double theta = std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(k);
        for (std::size_t j = 0; j < k; ++j) {
            const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k);
            out.push_back(PoincareVector::from_angles(theta, phi));
        }
    }
    return out;
}

namespace {

EqualizationCertificate certify(const JointOperator &pi, const JointOperator &flipped, const PoincareVector &m,
                                const PoincareVector &m_flipped, std::size_t grid_k) {
    EqualizationCertificate cert;
    // P(Pi', -n, m') - P(Pi, n, m), with m' = -m, expands to
    //   [ (-(r' + r) + (t' - t) m) . n  -  (s' + s) . m ] / 4.
    const Vector3 n_coeff = -(flipped.r().vec() + pi.r().vec()) + (flipped.t() - pi.t()) * m.vec();
    const double constant = (flipped.s().vec() + pi.s().vec()).dot(m.vec());
    const bool m_negated = (m_flipped.vec() + m.vec()).cwiseAbs().maxCoeff() <= kAlgebraicTol;
    cert.symbolic_residual = std::max(n_coeff.cwiseAbs().maxCoeff(), std::abs(constant));
    if (!m_negated) {
        cert.symbolic_residual = std::max(cert.symbolic_residual, (m_flipped.vec() + m.vec()).cwiseAbs().maxCoeff());
    }

    for (const auto &n : sphere_grid(grid_k)) {
        const double want = joint_probability_trace(pi, n, m);
        const double got = joint_probability_trace(flipped, -n, m_flipped);
        cert.max_grid_deviation = std::max(cert.max_grid_deviation, std::abs(got - want));
        ++cert.grid_points;
    }
    cert.pass = cert.symbolic_residual <= kAlgebraicTol && cert.max_grid_deviation <= kAlgebraicTol &&
                flipped.is_valid_effect();
    return cert;
}

}  // namespace

Equalization joint_equalize_known_phi(const JointOperator &pi, const PoincareVector &m, std::size_t grid_k) {
    pi.require_valid_effect();
    JointOperator flipped = double_spin_flip(pi);
    const PoincareVector m_flipped = -m;
    EqualizationCertificate cert = certify(pi, flipped, m, m_flipped, grid_k);
    return {std::move(flipped), m_flipped, cert};
}

Equalization joint_equalize_literal(const JointOperator &pi, const PoincareVector &m, std::size_t grid_k) {
    pi.require_valid_effect();
    JointOperator flipped = pi.with_signs(Sign::Minus, Sign::Plus);
    const PoincareVector m_flipped = -m;
    EqualizationCertificate cert = certify(pi, flipped, m, m_flipped, grid_k);
    return {std::move(flipped), m_flipped, cert};
}

JointShot joint_shot(Session &session, const PureQubit &target, const JointOperator &pi, const PoincareVector &m,
                     EqualizationStrategy strategy, std::optional<Bit> forced) {
    pi.require_valid_effect();
    if (!m.is_unit()) {
        throw DomainError("Bob's photon must be a pure state (unit m)");
    }
    const RemotePreparation prep = prepare_remote(session, target, forced);

    JointOperator device = pi;
    PoincareVector phi = m;
    std::string label = "Pi";
    if (prep.message.bit == Bit::H && strategy != EqualizationStrategy::None) {
        device = strategy == EqualizationStrategy::Exact ? double_spin_flip(pi) : pi.with_signs(Sign::Minus, Sign::Plus);
        phi = -m;
        label = strategy == EqualizationStrategy::Exact ? "Pi'(exact)" : "Pi'(literal)";
    }
    const QubitHandle own = session.prepare_local(Party::Bob, state_from_bloch(phi), "phi");
    const Matrix4 effect = device.matrix();
    const std::vector<Eigen::MatrixXcd> effects{effect, Matrix4::Identity() - effect};
    const std::array<QubitHandle, 2> qubits{prep.halves.bob, own};
    const std::size_t result = session.measure_effects(Party::Bob, qubits, effects, label);
    session.finish();
    return {prep.alice_outcome, result};
}

}  // namespace rspm
