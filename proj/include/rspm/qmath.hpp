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

#ifndef RSPM_QMATH_HPP
#define RSPM_QMATH_HPP

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rspm {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector3 = Eigen::Vector3d;

/// Tolerance for algebraic identities (unitarity, normalization, hermiticity).
inline constexpr double kAlgebraicTol = 1e-12;
/// Tolerance for round trips through transcendental functions.
inline constexpr double kRoundTripTol = 1e-9;
/// Lower bound accepted for eigenvalues of positive semidefinite operators.
inline constexpr double kEigenTol = 1e-10;

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};
class NormalizationError : public Error {
   public:
    using Error::Error;
};
class DomainError : public Error {
   public:
    using Error::Error;
};
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// Computational-basis measurement result. The numeric value doubles as the
/// classical bit Alice sends: 0 for |H>, 1 for |V>.
enum class Bit : std::uint8_t { H = 0, V = 1 };

inline int to_int(Bit b) { return static_cast<int>(b); }
inline Bit bit_from_int(int v) { return v == 0 ? Bit::H : Bit::V; }
const char *to_string(Bit b);

/// Real 3-vector on or inside the Poincare sphere.
class PoincareVector {
   public:
    PoincareVector() = default;
    PoincareVector(double x, double y, double z);
    explicit PoincareVector(const Vector3 &v);

    /// Throws DomainError unless | |v| - 1 | <= kAlgebraicTol.
    static PoincareVector unit(double x, double y, double z);
    /// Normalizes a nonzero direction.
    static PoincareVector direction(double x, double y, double z);
    static PoincareVector from_angles(double theta, double phi);

    double x() const { return v_.x(); }
    double y() const { return v_.y(); }
    double z() const { return v_.z(); }
    const Vector3 &vec() const { return v_; }
    double norm() const { return v_.norm(); }
    bool is_unit(double tol = kAlgebraicTol) const;
    double dot(const PoincareVector &o) const { return v_.dot(o.v_); }
    PoincareVector operator-() const { return PoincareVector(-v_); }

    /// sum_i v_i sigma_i.
    Matrix2 dot_sigma() const;

   private:
    Vector3 v_ = Vector3::Zero();
};

/// Normalized qubit state aH|H> + aV|V>.
class PureQubit {
   public:
    /// Throws NormalizationError if |aH|^2 + |aV|^2 differs from 1 by more
    /// than kAlgebraicTol, DomainError on non-finite input.
    PureQubit(Complex aH, Complex aV);
    /// Rescales a nonzero vector to unit norm.
    static PureQubit normalized(Complex aH, Complex aV);

    static PureQubit h() { return PureQubit(1.0, 0.0); }
    static PureQubit v() { return PureQubit(0.0, 1.0); }

    Complex aH() const { return amps_(0); }
    Complex aV() const { return amps_(1); }
    const Eigen::Vector2cd &amplitudes() const { return amps_; }

    /// Global phase fixed so aH is real and >= 0 (aV real >= 0 when aH = 0).
    PureQubit canonical() const;
    /// The orthogonal state -conj(aV)|H> + conj(aH)|V>.
    PureQubit orthogonal() const;

   private:
    Eigen::Vector2cd amps_;
};

class Unitary2 {
   public:
    /// Throws DomainError unless U^dagger U = I entrywise within kAlgebraicTol.
    explicit Unitary2(const Matrix2 &m);

    static Unitary2 identity();
    static Unitary2 pauli_x();
    static Unitary2 pauli_y();
    static Unitary2 pauli_z();
    /// i sigma_y = [[0, 1], [-1, 0]].
    static Unitary2 i_sigma_y();

    const Matrix2 &matrix() const { return m_; }
    Unitary2 adjoint() const;
    Complex determinant() const { return m_.determinant(); }
    Unitary2 operator*(const Unitary2 &o) const;
    PureQubit operator*(const PureQubit &psi) const;

   private:
    Matrix2 m_;
};

/// Two-qubit pure state with amplitudes ordered (HH, HV, VH, VV); the first
/// factor is subsystem A.
class TwoQubitState {
   public:
    explicit TwoQubitState(const Eigen::Vector4cd &amps);
    static TwoQubitState normalized(const Eigen::Vector4cd &amps);

    const Eigen::Vector4cd &amplitudes() const { return amps_; }
    Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

   private:
    Eigen::Vector4cd amps_;
};

/// Hermitian, unit-trace, positive semidefinite d x d matrix.
template <int D>
class DensityMatrix {
    static_assert(D == 2 || D == 4);

   public:
    using MatrixType = Eigen::Matrix<Complex, D, D>;

    explicit DensityMatrix(const MatrixType &m);

    const MatrixType &matrix() const { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }
    double min_eigenvalue() const;
    double purity() const { return (m_ * m_).trace().real(); }

   private:
    MatrixType m_;
};

using DensityMatrix2 = DensityMatrix<2>;
using DensityMatrix4 = DensityMatrix<4>;

extern template class DensityMatrix<2>;
extern template class DensityMatrix<4>;

// --- Pauli matrices and small helpers ---------------------------------------

const Matrix2 &pauli(int i);  // i in {0: I, 1: X, 2: Y, 3: Z}

/// Ascending eigenvalues of a Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd &m);
/// Principal square root of a Hermitian positive semidefinite matrix.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd &m);
double max_abs_entry(const Eigen::MatrixXcd &m);
bool is_hermitian(const Eigen::MatrixXcd &m, double tol = kAlgebraicTol);

// --- Operations --------------------------------------------------------------

/// U(alpha, beta) with U|H> = alpha|H> + beta|V> and
/// U|V> = alpha|V> - conj(beta)|H>.
Unitary2 make_su2(double alpha, Complex beta);

PoincareVector bloch_from_state(const PureQubit &psi);
PoincareVector bloch_from_density(const DensityMatrix2 &rho);
PureQubit state_from_bloch(const PoincareVector &n);

DensityMatrix2 density(const PureQubit &psi);
DensityMatrix4 density(const TwoQubitState &psi);
/// (I + n.sigma) / 2, for |n| <= 1.
DensityMatrix2 density_from_bloch(const PoincareVector &n);

TwoQubitState tensor(const PureQubit &a, const PureQubit &b);
Matrix4 tensor(const Matrix2 &a, const Matrix2 &b);
DensityMatrix4 tensor(const DensityMatrix2 &a, const DensityMatrix2 &b);
/// Kronecker product of two 2 x 2 operators given at runtime size.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// Reduces a two-qubit density matrix onto subsystem `keep` (0 = A, 1 = B).
DensityMatrix2 partial_trace(const DensityMatrix4 &rho, int keep);

class Rng;

struct QubitMeasurement {
    Bit outcome;
    PureQubit post;
};

struct PairMeasurement {
    Bit outcome;
    TwoQubitState post;
};

/// Projects onto {|H>, |V>}; outcome H with probability |aH|^2.
QubitMeasurement measure_computational(const PureQubit &psi, Rng &rng);
/// Measures subsystem A of a two-qubit state in {|H>, |V>}.
PairMeasurement measure_computational(const TwoQubitState &psi, Rng &rng);

/// |<a|b>|^2, clamped to [0, 1].
double fidelity(const PureQubit &a, const PureQubit &b);
double fidelity(const TwoQubitState &a, const TwoQubitState &b);

std::string format_state(const PureQubit &psi);

}  // namespace rspm

#endif  // RSPM_QMATH_HPP
