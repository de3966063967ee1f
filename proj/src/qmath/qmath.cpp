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

#include "rspm/qmath.hpp"

#include "rspm/random.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace rspm {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_finite(const Eigen::MatrixXcd &m, const char *what) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        if (!finite(m.data()[i])) {
            throw DomainError(std::string(what) + ": non-finite entry");
        }
    }
}

Matrix2 make_pauli(int i) {
    Matrix2 m;
    switch (i) {
        case 0:
            m << 1, 0, 0, 1;
            break;
        case 1:
            m << 0, 1, 1, 0;
            break;
        case 2:
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        default:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

}  // namespace

const char *to_string(Bit b) { return b == Bit::H ? "H" : "V"; }

const Matrix2 &pauli(int i) {
    static const std::array<Matrix2, 4> table = {make_pauli(0), make_pauli(1), make_pauli(2), make_pauli(3)};
    if (i < 0 || i > 3) {
        throw DimensionError("pauli index out of range");
    }
    return table[static_cast<std::size_t>(i)];
}

// --- PoincareVector -----------------------------------------------------------

PoincareVector::PoincareVector(double x, double y, double z) : PoincareVector(Vector3(x, y, z)) {}

PoincareVector::PoincareVector(const Vector3 &v) : v_(v) {
    if (!v_.allFinite()) {
        throw DomainError("Poincare vector has non-finite components");
    }
    if (v_.norm() > 1.0 + kAlgebraicTol) {
        throw DomainError("Poincare vector lies outside the unit ball");
    }
}

PoincareVector PoincareVector::unit(double x, double y, double z) {
    PoincareVector p(x, y, z);
    if (!p.is_unit()) {
        throw DomainError("expected a unit Poincare vector");
    }
    return p;
}

PoincareVector PoincareVector::direction(double x, double y, double z) {
    const Vector3 v(x, y, z);
    const double n = v.norm();
    if (!std::isfinite(n) || n == 0.0) {
        throw DomainError("direction must be finite and nonzero");
    }
    return PoincareVector(v / n);
}

PoincareVector PoincareVector::from_angles(double theta, double phi) {
    return PoincareVector::direction(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                                     std::cos(theta));
}

bool PoincareVector::is_unit(double tol) const { return std::abs(v_.norm() - 1.0) <= tol; }

Matrix2 PoincareVector::dot_sigma() const { return v_.x() * pauli(1) + v_.y() * pauli(2) + v_.z() * pauli(3); }

// --- PureQubit ----------------------------------------------------------------

PureQubit::PureQubit(Complex aH, Complex aV) : amps_(aH, aV) {
    if (!finite(aH) || !finite(aV)) {
        throw DomainError("qubit amplitudes must be finite");
    }
    if (std::abs(amps_.squaredNorm() - 1.0) > kAlgebraicTol) {
        throw NormalizationError("qubit amplitudes are not normalized");
    }
}

PureQubit PureQubit::normalized(Complex aH, Complex aV) {
    const double n = std::sqrt(std::norm(aH) + std::norm(aV));
    if (!std::isfinite(n) || n == 0.0) {
        throw NormalizationError("cannot normalize a zero or non-finite vector");
    }
    return PureQubit(aH / n, aV / n);
}

PureQubit PureQubit::canonical() const {
    const double mh = std::abs(aH());
    if (mh > 0.0) {
        const Complex phase = std::conj(aH()) / mh;
        return PureQubit(Complex(mh, 0.0), aV() * phase);
    }
    return PureQubit(Complex(0.0, 0.0), Complex(std::abs(aV()), 0.0));
}

PureQubit PureQubit::orthogonal() const { return PureQubit(-std::conj(aV()), std::conj(aH())); }

// --- Unitary2 -----------------------------------------------------------------

Unitary2::Unitary2(const Matrix2 &m) : m_(m) {
    require_finite(m_, "unitary");
    if (max_abs_entry(m_.adjoint() * m_ - Matrix2::Identity()) > kAlgebraicTol) {
        throw DomainError("matrix is not unitary");
    }
}

Unitary2 Unitary2::identity() { return Unitary2(pauli(0)); }
Unitary2 Unitary2::pauli_x() { return Unitary2(pauli(1)); }
Unitary2 Unitary2::pauli_y() { return Unitary2(pauli(2)); }
Unitary2 Unitary2::pauli_z() { return Unitary2(pauli(3)); }
Unitary2 Unitary2::i_sigma_y() { return Unitary2(Complex(0, 1) * pauli(2)); }

Unitary2 Unitary2::adjoint() const { return Unitary2(Matrix2(m_.adjoint())); }
Unitary2 Unitary2::operator*(const Unitary2 &o) const { return Unitary2(Matrix2(m_ * o.m_)); }

PureQubit Unitary2::operator*(const PureQubit &psi) const {
    const Eigen::Vector2cd out = m_ * psi.amplitudes();
    return PureQubit(out(0), out(1));
}

// --- TwoQubitState ------------------------------------------------------------

TwoQubitState::TwoQubitState(const Eigen::Vector4cd &amps) : amps_(amps) {
    require_finite(amps_, "two-qubit state");
    if (std::abs(amps_.squaredNorm() - 1.0) > kAlgebraicTol) {
        throw NormalizationError("two-qubit amplitudes are not normalized");
    }
}

TwoQubitState TwoQubitState::normalized(const Eigen::Vector4cd &amps) {
    const double n = amps.norm();
    if (!std::isfinite(n) || n == 0.0) {
        throw NormalizationError("cannot normalize a zero or non-finite vector");
    }
    return TwoQubitState(amps / n);
}

// --- DensityMatrix ------------------------------------------------------------

template <int D>
DensityMatrix<D>::DensityMatrix(const MatrixType &m) : m_(m) {
    require_finite(m_, "density matrix");
    if (!is_hermitian(m_)) {
        throw DomainError("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0, 0.0)) > kAlgebraicTol) {
        throw DomainError("density matrix does not have unit trace");
    }
    if (min_eigenvalue() < -kEigenTol) {
        throw DomainError("density matrix has a negative eigenvalue");
    }
}

template <int D>
double DensityMatrix<D>::min_eigenvalue() const {
    return hermitian_eigenvalues(m_).minCoeff();
}

template class DensityMatrix<2>;
template class DensityMatrix<4>;

// --- Helpers --------------------------------------------------------------------

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    Eigen::VectorXd ev = solver.eigenvalues();
    if (ev.minCoeff() < -kEigenTol) {
        throw DomainError("square root of a matrix that is not positive semidefinite");
    }
    ev = ev.cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * ev.cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();
}

double max_abs_entry(const Eigen::MatrixXcd &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool is_hermitian(const Eigen::MatrixXcd &m, double tol) {
    return m.rows() == m.cols() && max_abs_entry(m - m.adjoint()) <= tol;
}

// --- Operations -------------------------------------------------------------------

Unitary2 make_su2(double alpha, Complex beta) {
    if (!std::isfinite(alpha) || !finite(beta)) {
        throw DomainError("su2 parameters must be finite");
    }
    if (std::abs(alpha * alpha + std::norm(beta) - 1.0) > kAlgebraicTol) {
        throw NormalizationError("alpha^2 + |beta|^2 must equal 1");
    }
    Matrix2 m;
    m << alpha, -std::conj(beta), beta, alpha;
    return Unitary2(m);
}

PoincareVector bloch_from_state(const PureQubit &psi) {
    const Complex a = psi.aH();
    const Complex b = psi.aV();
    const Complex c = std::conj(a) * b;
    const double norm = std::norm(a) + std::norm(b);
    return PoincareVector(2.0 * c.real() / norm, 2.0 * c.imag() / norm, (std::norm(a) - std::norm(b)) / norm);
}

PoincareVector bloch_from_density(const DensityMatrix2 &rho) {
    const Matrix2 &m = rho.matrix();
    return PoincareVector((m * pauli(1)).trace().real(), (m * pauli(2)).trace().real(),
                          (m * pauli(3)).trace().real());
}

PureQubit state_from_bloch(const PoincareVector &n) {
    if (!n.is_unit()) {
        throw DomainError("pure states need a unit Bloch vector");
    }
    const double z = std::clamp(n.z() / n.norm(), -1.0, 1.0);
    const double phi = std::atan2(n.y(), n.x());
    const double alpha = std::sqrt((1.0 + z) / 2.0);
    const double beta = std::sqrt((1.0 - z) / 2.0);
    return PureQubit::normalized(alpha, std::polar(beta, phi)).canonical();
}

DensityMatrix2 density(const PureQubit &psi) {
    const Eigen::Vector2cd &v = psi.amplitudes();
    return DensityMatrix2(v * v.adjoint());
}

DensityMatrix4 density(const TwoQubitState &psi) {
    const Eigen::Vector4cd &v = psi.amplitudes();
    return DensityMatrix4(v * v.adjoint());
}

DensityMatrix2 density_from_bloch(const PoincareVector &n) {
    return DensityMatrix2(0.5 * (pauli(0) + n.dot_sigma()));
}

TwoQubitState tensor(const PureQubit &a, const PureQubit &b) {
    Eigen::Vector4cd v;
    v << a.aH() * b.aH(), a.aH() * b.aV(), a.aV() * b.aH(), a.aV() * b.aV();
    return TwoQubitState(v);
}

Matrix4 tensor(const Matrix2 &a, const Matrix2 &b) {
    Matrix4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

DensityMatrix4 tensor(const DensityMatrix2 &a, const DensityMatrix2 &b) {
    return DensityMatrix4(tensor(a.matrix(), b.matrix()));
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    const bool a_vec = a.cols() == 1;
    const bool b_vec = b.cols() == 1;
    if (a.rows() != 2 || b.rows() != 2 || a_vec != b_vec || (!a_vec && (a.cols() != 2 || b.cols() != 2))) {
        throw DimensionError("tensor expects two qubit states or two 2x2 operators");
    }
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DensityMatrix2 partial_trace(const DensityMatrix4 &rho, int keep) {
    if (keep != 0 && keep != 1) {
        throw DimensionError("subsystem index must be 0 (A) or 1 (B)");
    }
    const Matrix4 &m = rho.matrix();
    Matrix2 out = Matrix2::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                out(i, j) += keep == 0 ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
            }
        }
    }
    return DensityMatrix2(out);
}

QubitMeasurement measure_computational(const PureQubit &psi, Rng &rng) {
    const double p_h = std::norm(psi.aH());
    if (rng.uniform() < p_h) {
        return {Bit::H, PureQubit::h()};
    }
    return {Bit::V, PureQubit::v()};
}

PairMeasurement measure_computational(const TwoQubitState &psi, Rng &rng) {
    const Eigen::Vector4cd &v = psi.amplitudes();
    const double p_h = std::norm(v(0)) + std::norm(v(1));
    Eigen::Vector4cd post = Eigen::Vector4cd::Zero();
    Bit outcome;
    if (rng.uniform() < p_h) {
        outcome = Bit::H;
        post.head<2>() = v.head<2>();
    } else {
        outcome = Bit::V;
        post.tail<2>() = v.tail<2>();
    }
    return {outcome, TwoQubitState::normalized(post)};
}

double fidelity(const PureQubit &a, const PureQubit &b) {
    return std::clamp(std::norm(a.amplitudes().dot(b.amplitudes())), 0.0, 1.0);
}

double fidelity(const TwoQubitState &a, const TwoQubitState &b) {
    return std::clamp(std::norm(a.amplitudes().dot(b.amplitudes())), 0.0, 1.0);
}

std::string format_state(const PureQubit &psi) {
    std::ostringstream os;
    os << std::setprecision(6) << "(" << psi.aH().real() << (psi.aH().imag() < 0 ? "-" : "+")
       << std::abs(psi.aH().imag()) << "i)|H> + (" << psi.aV().real() << (psi.aV().imag() < 0 ? "-" : "+")
       << std::abs(psi.aV().imag()) << "i)|V>";
    return os.str();
}

}  // namespace rspm
