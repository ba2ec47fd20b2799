/*
 * Copyright 2026 The omegajump Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include <cstdint>
#include <random>

#include "omega/automaton.hpp"
#include "omega/game.hpp"

namespace omega::oracle {

enum class AcceptanceKind { Reach, Safety, Buchi, CoBuchi, Parity, Muller };

inline constexpr AcceptanceKind kAllAcceptanceKinds[] = {
    AcceptanceKind::Reach,   AcceptanceKind::Safety, AcceptanceKind::Buchi,
    AcceptanceKind::CoBuchi, AcceptanceKind::Parity, AcceptanceKind::Muller,
};

/// Seeded random instances. Same seed, same sequence.
class Generator
{
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [lo, hi].
    std::size_t uniform(std::size_t lo, std::size_t hi);
    bool coin(double p = 0.5);

    /// Complete transition structure with initial state 0.
    DetOmegaAutomaton automaton(const Alphabet& alphabet, std::size_t states, AcceptanceKind kind);
    /// Random acceptance of the given kind for a's transition structure.
    Acceptance acceptance(const DetOmegaAutomaton& a, AcceptanceKind kind);

    UPWord word(const Alphabet& alphabet, std::size_t max_prefix, std::size_t max_period);

    /// Every vertex gets 1..max_out successors and a random owner.
    GameGraph arena(std::size_t vertices, std::size_t max_out);
    objective::Parity parity(const GameGraph& g, unsigned priorities);
    objective::Muller muller(const GameGraph& g);
    VertexSet subset(std::size_t n);

private:
    std::mt19937_64 rng_;
};

} // namespace omega::oracle
