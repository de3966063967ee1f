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

#include <algorithm>
#include <sstream>

namespace rspm {

const char *to_string(Party p) { return p == Party::Alice ? "Alice" : "Bob"; }

const char *to_string(Action a) {
    switch (a) {
        case Action::PrepareEpr:
            return "prepare-epr";
        case Action::Prepare:
            return "prepare";
        case Action::LocalUnitary:
            return "local-unitary";
        case Action::Measurement:
            return "measurement";
        case Action::ClassicalSend:
            return "classical-send";
        case Action::Correction:
            return "correction";
    }
    return "unknown";
}

const Event &Transcript::append(Event e) {
    e.index = events_.size();
    events_.push_back(std::move(e));
    return events_.back();
}

std::string Transcript::to_text() const {
    std::ostringstream os;
    os << "seed " << seed_ << '\n';
    for (const auto &e : events_) {
        os << e.index << ' ' << (e.actor ? to_string(*e.actor) : "source") << ' ' << to_string(e.action) << ' '
           << e.payload << '\n';
    }
    return os.str();
}

LocalityReport enforce_locality(const Transcript &t) {
    // message id -> recipient, for sends seen so far
    std::vector<std::pair<std::size_t, Party>> delivered;
    auto fail = [](const Event &e, std::string reason) {
        return LocalityReport{false, e.index, std::move(reason)};
    };

    for (const auto &e : t.events()) {
        switch (e.action) {
            case Action::PrepareEpr:
                break;
            case Action::Prepare:
            case Action::LocalUnitary:
            case Action::Measurement:
            case Action::Correction: {
                if (!e.actor) {
                    return fail(e, "local action without an acting party");
                }
                for (const auto &q : e.touched) {
                    if (q.owner != *e.actor) {
                        return fail(e, std::string(to_string(*e.actor)) + " touched photon q" +
                                           std::to_string(q.index) + " held by " + to_string(q.owner));
                    }
                }
                if (e.action == Action::Correction) {
                    for (auto id : e.reads) {
                        const auto it = std::find_if(delivered.begin(), delivered.end(),
                                                     [id](const auto &d) { return d.first == id; });
                        if (it == delivered.end()) {
                            return fail(e, "correction precedes classical message " + std::to_string(id));
                        }
                        if (it->second != *e.actor) {
                            return fail(e, "correction reads message " + std::to_string(id) +
                                               " addressed to the other party");
                        }
                    }
                }
                break;
            }
            case Action::ClassicalSend:
                if (!e.message || !e.actor || e.message->from != *e.actor) {
                    return fail(e, "classical send not issued by its sender");
                }
                delivered.emplace_back(e.message->id, e.message->to);
                break;
        }
    }
    return {};
}

}  // namespace rspm
