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

#ifndef RSPM_ENGINE_HPP
#define RSPM_ENGINE_HPP

#include "rspm/qmath.hpp"
#include "rspm/random.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rspm {

enum class Party : std::uint8_t { Alice, Bob };

const char *to_string(Party p);
inline Party other(Party p) { return p == Party::Alice ? Party::Bob : Party::Alice; }

class AccessError : public Error {
   public:
    using Error::Error;
};

/// Per-run resource counters. Alice -> Bob is the forward direction.
struct ResourceLedger {
    std::uint64_t ebits = 0;
    std::uint64_t cbits_forward = 0;
    std::uint64_t cbits_backward = 0;

    ResourceLedger &operator+=(const ResourceLedger &o) {
        ebits += o.ebits;
        cbits_forward += o.cbits_forward;
        cbits_backward += o.cbits_backward;
        return *this;
    }
    friend bool operator==(const ResourceLedger &, const ResourceLedger &) = default;
};

/// Opaque reference to one photon held by one party.
struct QubitHandle {
    std::size_t index = 0;
    Party owner = Party::Alice;
    friend bool operator==(const QubitHandle &, const QubitHandle &) = default;
};

struct EprHalves {
    QubitHandle alice;
    QubitHandle bob;
};

struct Message {
    std::size_t id = 0;
    Party from = Party::Alice;
    Party to = Party::Bob;
    Bit bit = Bit::H;
};

enum class Action : std::uint8_t { PrepareEpr, Prepare, LocalUnitary, Measurement, ClassicalSend, Correction };

const char *to_string(Action a);

struct Event {
    std::size_t index = 0;
    /// Empty for the shared entanglement source.
    std::optional<Party> actor;
    Action action = Action::Prepare;
    std::vector<QubitHandle> touched;
    /// Set for ClassicalSend.
    std::optional<Message> message;
    /// Message ids a Correction depends on.
    std::vector<std::size_t> reads;
    std::string payload;
};

class Transcript {
   public:
    explicit Transcript(std::uint64_t seed = 0) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    const std::vector<Event> &events() const { return events_; }
    std::size_t size() const { return events_.size(); }

    /// Appends an event, overwriting its index with the next position.
    const Event &append(Event e);

    /// One header line `seed <n>`, then one line per event:
    /// `<index> <party> <action> <payload>`.
    std::string to_text() const;

   private:
    std::uint64_t seed_;
    std::vector<Event> events_;
};

struct LocalityReport {
    bool pass = true;
    std::optional<std::size_t> first_violation;
    std::string reason;
};

/// Checks that every unitary, measurement and correction touches only the
/// acting party's photons, and that every correction is preceded by the
/// classical messages it reads, addressed to the correcting party.
LocalityReport enforce_locality(const Transcript &t);

class QuantumRegister;

/// One run of a two-party protocol.
///
/// The joint quantum state lives here; parties act on it only through handles
/// they own. No method moves a qubit between parties.
class Session {
   public:
    explicit Session(std::uint64_t seed);
    ~Session();
    Session(Session &&) noexcept;
    Session &operator=(Session &&) noexcept;

    std::uint64_t seed() const { return transcript_.seed(); }
    Rng &rng() { return rng_; }
    const ResourceLedger &ledger() const { return ledger_; }
    const Transcript &transcript() const { return transcript_; }

    /// Adds a singlet (|HV> - |VH>)/sqrt(2); A half to Alice, B half to Bob.
    EprHalves distribute_epr();
    /// A locally prepared photon (no resource cost).
    QubitHandle prepare_local(Party owner, const PureQubit &state, std::string_view label);

    void apply_unitary(Party actor, QubitHandle q, const Unitary2 &u, std::string_view label);

    /// {|H>, |V>} projection. `forced` selects the branch (it must have
    /// nonzero probability) instead of sampling.
    Bit measure_computational(Party actor, QubitHandle q, std::optional<Bit> forced = std::nullopt);

    /// Generic measurement on one or two of the actor's photons. `effects`
    /// must be positive semidefinite and sum to the identity on the touched
    /// space; the post-measurement state uses the square-root Kraus operator.
    std::size_t measure_effects(Party actor, std::span<const QubitHandle> qubits,
                                std::span<const Eigen::MatrixXcd> effects, std::string_view label,
                                std::optional<std::size_t> forced = std::nullopt);

    Message send_classical_bit(Party from, Bit bit);

    /// A unitary conditioned on received messages. Each message must have
    /// been sent to `actor` earlier in this session.
    void apply_correction(Party actor, QubitHandle q, const Unitary2 &u, std::string_view label,
                          std::span<const Message> reads);

    /// Simulator-side inspection of a photon's state; not a protocol action.
    /// Throws DomainError if the photon is entangled with others.
    PureQubit peek_state(QubitHandle q) const;
    DensityMatrix2 peek_reduced(QubitHandle q) const;

    /// Freezes the ledger and transcript; later actions throw.
    void finish() { finished_ = true; }
    bool finished() const { return finished_; }

   private:
    void require_active() const;
    void require_owner(Party actor, QubitHandle q) const;

    Rng rng_;
    Transcript transcript_;
    ResourceLedger ledger_;
    std::unique_ptr<QuantumRegister> reg_;
    std::vector<Message> sent_;
    bool finished_ = false;
};

}  // namespace rspm

#endif  // RSPM_ENGINE_HPP
