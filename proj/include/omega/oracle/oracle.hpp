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

// Brute-force reference implementations. They share no code with the
// library algorithms beyond the data types and are only meant for small
// inputs.

#include <vector>

#include "omega/automaton.hpp"
#include "omega/classifier.hpp"
#include "omega/game.hpp"

namespace omega::oracle {

/// Membership by stepping the run until a period boundary state repeats.
bool accepts(const DetOmegaAutomaton& a, const UPWord& w);

/// Every subset of the reachable states that is strongly connected through
/// its own edges. At most 16 reachable states.
std::vector<StateSet> loops(const DetOmegaAutomaton& a);
/// Same, over all states including unreachable ones.
std::vector<StateSet> all_loops(const DetOmegaAutomaton& a);

/// Memberships from loop-pair closure (sigma2, pi2) and from the accepting
/// loops avoiding universal / empty states (open, closed). Reach and Safety
/// inputs are latched first.
Memberships memberships(const DetOmegaAutomaton& a);
BorelLabel classify(const DetOmegaAutomaton& a);

struct Winners
{
    VertexSet win0;
    VertexSet win1;
    bool operator==(const Winners&) const = default;
};

/// Reach, safety, Buchi, co-Buchi and parity: enumerates all pairs of
/// positional strategies and evaluates the lasso from every vertex. Muller
/// objectives go to muller_winners. Throws GuardExceeded beyond 2^22 pairs.
Winners winners(const GameGraph& g, const Objective& o);

/// McNaughton's recursive algorithm on the arena itself.
Winners muller_winners(const GameGraph& g, const std::vector<VertexSet>& family);

} // namespace omega::oracle
