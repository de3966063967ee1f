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

#ifndef RSPM_PROTOCOLS_JOINT_HPP
#define RSPM_PROTOCOLS_JOINT_HPP

#include "rspm/engine.hpp"
#include "rspm/protocols/rsm.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace rspm {

class InvalidEffect : public Error {
   public:
    using Error::Error;
};

/// Two-photon measurement operator
///   Pi = (I(x)I + r.sigma(x)I + I(x)s.sigma + sum_ij t_ij sigma_i(x)sigma_j) / 4.
/// The first factor is the remotely prepared photon, the second Bob's own.
class JointOperator {
   public:
    JointOperator(const PoincareVector &r, const PoincareVector &s, const Eigen::Matrix3d &t);

    /// Pauli decomposition of a Hermitian, unit-trace 4x4 matrix.
    static JointOperator from_matrix(const Matrix4 &m);
    /// |singlet><singlet|: r = s = 0, t = -I.
    static JointOperator singlet_projector();
    /// (I(x)I)/4.
    static JointOperator identity_quarter();
    /// P_+(b) (x) I / 2: r = b, s = 0, t = 0.
    static JointOperator product_effect(const PoincareVector &b);
    /// |psi><psi| for a two-photon pure state.
    static JointOperator projector_onto(const TwoQubitState &psi);

    const PoincareVector &r() const { return r_; }
    const PoincareVector &s() const { return s_; }
    const Eigen::Matrix3d &t() const { return t_; }

    Matrix4 matrix() const;
    /// Eigenvalues within [-kEigenTol, 1 + kEigenTol].
    bool is_valid_effect() const;
    /// Throws InvalidEffect unless is_valid_effect().
    void require_valid_effect() const;

    JointOperator with_signs(Sign r_sign, Sign s_sign) const;

   private:
    PoincareVector r_;
    PoincareVector s_;
    Eigen::Matrix3d t_;
};

/// (1 + r.n + s.m + sum_ij t_ij n_i m_j) / 4 = tr(Pi rho_n (x) rho_m).
double joint_probability(const JointOperator &pi, const PoincareVector &n, const PoincareVector &m);
/// The expansion alone, without requiring Pi to be a valid effect.
double joint_expansion(const JointOperator &pi, const PoincareVector &n, const PoincareVector &m);
/// The same probability through the explicit 4x4 trace.
double joint_probability_trace(const JointOperator &pi, const PoincareVector &n, const PoincareVector &m);

/// {tr(Pi rho_psi (x) rho_phi), tr(Pi rho_psi_perp (x) rho_phi)}.
std::array<double, 2> joint_branch_probabilities(const JointOperator &pi, const PoincareVector &n,
                                                 const PoincareVector &m);

/// |P(rho_psi (x) rho_phi) - P(rho_psi_perp (x) rho_phi)| = |r.n + n^T t m| / 2.
double joint_discrepancy(const JointOperator &pi, const PoincareVector &n, const PoincareVector &m);

/// Discrepancy left when Bob answers bit H by flipping the signs of r and s
/// only, in the order (+r,+s), (+r,-s), (-r,+s), (-r,-s).
std::array<double, 4> sign_flip_discrepancies(const JointOperator &pi, const PoincareVector &n,
                                              const PoincareVector &m);

/// Pi' = (sigma_y (x) sigma_y) conj(Pi) (sigma_y (x) sigma_y): r -> -r,
/// s -> -s, t -> t, spectrum unchanged.
JointOperator double_spin_flip(const JointOperator &pi);

enum class EqualizationStrategy : std::uint8_t {
    None,     // device and photon untouched
    Literal,  // flip r and m
    Exact,    // flip r, s and m via double_spin_flip
};

const char *to_string(EqualizationStrategy s);
std::optional<EqualizationStrategy> parse_equalization_strategy(std::string_view s);

struct EqualizationCertificate {
    /// Closed-form residual of P(Pi', -n, m') - P(Pi, n, m) as a function of n:
    /// max(|r' + r|, |(s' - s_target).m|, |(t' - t) m|) component-wise.
    double symbolic_residual = 0.0;
    double max_grid_deviation = 0.0;
    std::size_t grid_points = 0;
    bool pass = false;
};

struct Equalization {
    JointOperator pi_flipped;
    PoincareVector m_flipped;
    EqualizationCertificate certificate;
};

/// n directions theta_i = pi (i + 1/2) / k, phi_j = 2 pi j / k.
std::vector<PoincareVector> sphere_grid(std::size_t k);

/// Bob knows phi: he re-prepares it as phi_perp and switches to Pi'. The
/// certificate checks P(Pi', -n, -m) = P(Pi, n, m) symbolically and on a
/// grid_k x grid_k grid of n.
Equalization joint_equalize_known_phi(const JointOperator &pi, const PoincareVector &m, std::size_t grid_k = 10);
/// Flip r and m only. Fails whenever s.m != 0.
Equalization joint_equalize_literal(const JointOperator &pi, const PoincareVector &m, std::size_t grid_k = 10);

struct JointShot {
    Bit alice_outcome;
    /// 0: Pi fired, 1: I - Pi fired.
    std::size_t bob_outcome;
};

/// Full-stack run: remote preparation of the target, Bob prepares phi (state
/// with Bloch vector m) and measures {Pi, I - Pi} on his two photons, using
/// the strategy's device and photon on bit H.
JointShot joint_shot(Session &session, const PureQubit &target, const JointOperator &pi, const PoincareVector &m,
                     EqualizationStrategy strategy, std::optional<Bit> forced = std::nullopt);

}  // namespace rspm

#endif  // RSPM_PROTOCOLS_JOINT_HPP
