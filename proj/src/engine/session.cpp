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

#include "rspm/engine.hpp"

#include "register.hpp"

#include <algorithm>
#include <cmath>

namespace rspm {

namespace {

// Below this a forced branch is treated as impossible.
constexpr double kMinForcedProbability = 1e-14;

std::string qubit_list(std::span<const QubitHandle> qs) {
    std::string out;
    for (const auto &q : qs) {
        if (!out.empty()) {
            out += ',';
        }
        out += 'q' + std::to_string(q.index);
    }
    return out;
}

}  // namespace

Session::Session(std::uint64_t seed) : rng_(seed), transcript_(seed), reg_(std::make_unique<QuantumRegister>()) {}
Session::~Session() = default;
Session::Session(Session &&) noexcept = default;
Session &Session::operator=(Session &&) noexcept = default;

void Session::require_active() const {
    if (finished_) {
        throw Error("session already finished");
    }
}

void Session::require_owner(Party actor, QubitHandle q) const {
    if (q.index >= reg_->qubits()) {
        throw AccessError("unknown photon handle");
    }
    if (q.owner != actor) {
        throw AccessError(std::string(to_string(actor)) + " cannot act on a photon held by " + to_string(q.owner));
    }
}

EprHalves Session::distribute_epr() {
    require_active();
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::VectorXcd singlet(4);
    singlet << 0.0, s, -s, 0.0;
    const std::size_t first = reg_->append(singlet);
    EprHalves halves{{first, Party::Alice}, {first + 1, Party::Bob}};
    ledger_.ebits += 1;

    Event e;
    e.action = Action::PrepareEpr;
    e.touched = {halves.alice, halves.bob};
    e.payload = "singlet (HV-VH)/sqrt2 q" + std::to_string(halves.alice.index) + "->Alice q" +
                std::to_string(halves.bob.index) + "->Bob";
    transcript_.append(std::move(e));
    return halves;
}

QubitHandle Session::prepare_local(Party owner, const PureQubit &state, std::string_view label) {
    require_active();
    const QubitHandle q{reg_->append(state.amplitudes()), owner};
    Event e;
    e.actor = owner;
    e.action = Action::Prepare;
    e.touched = {q};
    e.payload = qubit_list(e.touched) + " " + std::string(label);
    transcript_.append(std::move(e));
    return q;
}

void Session::apply_unitary(Party actor, QubitHandle q, const Unitary2 &u, std::string_view label) {
    require_active();
    require_owner(actor, q);
    const std::size_t target = q.index;
    reg_->apply(u.matrix(), std::span(&target, 1));
    Event e;
    e.actor = actor;
    e.action = Action::LocalUnitary;
    e.touched = {q};
    e.payload = qubit_list(e.touched) + " " + std::string(label);
    transcript_.append(std::move(e));
}

Bit Session::measure_computational(Party actor, QubitHandle q, std::optional<Bit> forced) {
    require_active();
    require_owner(actor, q);
    const std::size_t target = q.index;
    const Matrix2 proj_h = (Matrix2() << 1, 0, 0, 0).finished();
    const double p_h = std::clamp(reg_->expectation(proj_h, std::span(&target, 1)), 0.0, 1.0);

    Bit outcome;
    if (forced) {
        const double p = *forced == Bit::H ? p_h : 1.0 - p_h;
        if (p <= kMinForcedProbability) {
            throw DomainError("forced measurement branch has zero probability");
        }
        outcome = *forced;
    } else {
        outcome = rng_.uniform() < p_h ? Bit::H : Bit::V;
    }
    const Matrix2 proj = outcome == Bit::H ? proj_h : Matrix2((Matrix2() << 0, 0, 0, 1).finished());
    reg_->apply(proj, std::span(&target, 1));
    reg_->renormalize();

    Event e;
    e.actor = actor;
    e.action = Action::Measurement;
    e.touched = {q};
    e.payload = qubit_list(e.touched) + " basis=HV outcome=" + to_string(outcome);
    transcript_.append(std::move(e));
    return outcome;
}

std::size_t Session::measure_effects(Party actor, std::span<const QubitHandle> qubits,
                                     std::span<const Eigen::MatrixXcd> effects, std::string_view label,
                                     std::optional<std::size_t> forced) {
    require_active();
    if (qubits.empty() || qubits.size() > 2) {
        throw DimensionError("measurements act on one or two photons");
    }
    std::vector<std::size_t> targets;
    for (const auto &q : qubits) {
        require_owner(actor, q);
        targets.push_back(q.index);
    }
    if (effects.empty()) {
        throw DomainError("measurement needs at least one effect");
    }
    const Eigen::Index dim = Eigen::Index{1} << qubits.size();
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &f : effects) {
        if (f.rows() != dim || f.cols() != dim) {
            throw DimensionError("effect size does not match the measured photons");
        }
        if (!is_hermitian(f) || hermitian_eigenvalues(f).minCoeff() < -kEigenTol) {
            throw DomainError("measurement effect is not positive semidefinite");
        }
        total += f;
    }
    if (max_abs_entry(total - Eigen::MatrixXcd::Identity(dim, dim)) > kEigenTol) {
        throw DomainError("measurement effects do not sum to the identity");
    }

    std::vector<double> probs;
    probs.reserve(effects.size());
    for (const auto &f : effects) {
        probs.push_back(std::max(0.0, reg_->expectation(f, targets)));
    }

    std::size_t outcome = 0;
    if (forced) {
        if (*forced >= effects.size() || probs[*forced] <= kMinForcedProbability) {
            throw DomainError("forced measurement branch has zero probability");
        }
        outcome = *forced;
    } else {
        const double u = rng_.uniform();
        double acc = 0.0;
        outcome = effects.size();
        for (std::size_t i = 0; i < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) {
                outcome = i;
                break;
            }
        }
        if (outcome == effects.size()) {
            // u landed in the rounding gap above the cumulative sum.
            for (std::size_t i = probs.size(); i-- > 0;) {
                if (probs[i] > 0.0) {
                    outcome = i;
                    break;
                }
            }
        }
    }
    reg_->apply(psd_sqrt(effects[outcome]), targets);
    reg_->renormalize();

    Event e;
    e.actor = actor;
    e.action = Action::Measurement;
    e.touched.assign(qubits.begin(), qubits.end());
    e.payload = qubit_list(e.touched) + " " + std::string(label) + " outcome=" + std::to_string(outcome);
    transcript_.append(std::move(e));
    return outcome;
}

Message Session::send_classical_bit(Party from, Bit bit) {
    require_active();
    const Message m{sent_.size(), from, other(from), bit};
    sent_.push_back(m);
    if (from == Party::Alice) {
        ledger_.cbits_forward += 1;
    } else {
        ledger_.cbits_backward += 1;
    }
    Event e;
    e.actor = from;
    e.action = Action::ClassicalSend;
    e.message = m;
    e.payload = std::string(to_string(from)) + "->" + to_string(m.to) + " msg=" + std::to_string(m.id) +
                " bit=" + std::to_string(to_int(bit));
    transcript_.append(std::move(e));
    return m;
}

void Session::apply_correction(Party actor, QubitHandle q, const Unitary2 &u, std::string_view label,
                               std::span<const Message> reads) {
    require_active();
    require_owner(actor, q);
    Event e;
    e.actor = actor;
    e.action = Action::Correction;
    e.touched = {q};
    std::string read_ids;
    for (const auto &m : reads) {
        if (m.id >= sent_.size() || sent_[m.id].to != actor) {
            throw AccessError("correction reads a message that was not delivered to " + std::string(to_string(actor)));
        }
        e.reads.push_back(m.id);
        read_ids += (read_ids.empty() ? "" : ",") + std::to_string(m.id);
    }
    const std::size_t target = q.index;
    reg_->apply(u.matrix(), std::span(&target, 1));
    e.payload = qubit_list(e.touched) + " " + std::string(label) + " reads=" + read_ids;
    transcript_.append(std::move(e));
}

DensityMatrix2 Session::peek_reduced(QubitHandle q) const {
    if (q.index >= reg_->qubits()) {
        throw AccessError("unknown photon handle");
    }
    return DensityMatrix2(reg_->reduced(q.index));
}

PureQubit Session::peek_state(QubitHandle q) const {
    const DensityMatrix2 rho = peek_reduced(q);
    if (rho.purity() < 1.0 - kRoundTripTol) {
        throw DomainError("photon is entangled with another photon");
    }
    const Matrix2 &m = rho.matrix();
    const int col = std::norm(m(0, 0)) >= std::norm(m(1, 1)) ? 0 : 1;
    return PureQubit::normalized(m(0, col), m(1, col)).canonical();
}

}  // namespace rspm
