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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "omega/index_set.hpp"
#include "omega/words.hpp"

namespace omega {

using State = std::uint32_t;
using StateSet = IndexSet;

inline constexpr State kNoState = std::numeric_limits<State>::max();

/// Size caps for the exponential constructions.
struct Limits
{
    /// Largest strongly connected component whose loops are enumerated.
    std::size_t max_scc_states = 20;
    /// Largest arena turned into a latest-appearance-record game.
    std::size_t max_lar_vertices = 8;
};

// Acceptance conditions. Reach/Safety look at every visited state, the
// others only at the set of states visited infinitely often.
struct Reach   { StateSet states; bool operator==(const Reach&) const = default; };   // some visited state in F
struct Safety  { StateSet states; bool operator==(const Safety&) const = default; };  // every visited state in F
struct Buchi   { StateSet states; bool operator==(const Buchi&) const = default; };   // inf meets F
struct CoBuchi { StateSet states; bool operator==(const CoBuchi&) const = default; }; // inf inside F
struct Parity
{
    std::vector<unsigned> priority; // min priority in inf is even
    bool operator==(const Parity&) const = default;
};
struct Muller
{
    std::vector<StateSet> family; // inf is a member
    bool operator==(const Muller&) const = default;
};

using Acceptance = std::variant<Reach, Safety, Buchi, CoBuchi, Parity, Muller>;

std::string acceptance_name(const Acceptance& acc);

/// Deterministic complete omega-automaton. Transitions are stored row-major:
/// delta[q * |alphabet| + a]. Build one field by field, then pass it through
/// validate() before handing it to any other operation.
struct DetOmegaAutomaton
{
    Alphabet alphabet;
    std::size_t num_states = 0;
    State initial = 0;
    std::vector<State> delta;
    Acceptance acceptance = Muller{};

    /// Allocates an automaton with every transition missing.
    static DetOmegaAutomaton with_states(Alphabet alphabet, std::size_t n, Acceptance acc = Muller{});

    State next(State q, Letter a) const { return delta[q * alphabet.size() + a]; }
    void set(State q, Letter a, State to) { delta[q * alphabet.size() + a] = to; }

    bool operator==(const DetOmegaAutomaton&) const = default;
};

/// Returns the automaton with Muller members and state sets put in sorted
/// form iff all invariants hold; throws ValidationError naming the first
/// missing (state, symbol) pair or the offending state otherwise.
DetOmegaAutomaton validate(DetOmegaAutomaton a);

/// A possible set of infinitely visited states: reachable, strongly connected
/// and traversable using only its own edges.
struct Loop
{
    StateSet states;
    bool operator==(const Loop&) const = default;
    auto operator<=>(const Loop&) const = default;
};

struct LoopEntry
{
    StateSet states;
    bool accepting = false;
};

struct MullerNormalForm
{
    /// Muller automaton whose family is exactly the accepting loops.
    DetOmegaAutomaton automaton;
    /// Every loop of `automaton`, sorted by state set.
    std::vector<LoopEntry> loop_table;
    /// Whether a visited-bit latch was applied (Reach and Safety inputs).
    bool latched = false;

    bool accepting(const StateSet& loop) const;
};

/// All loops in lexicographic order. Throws GuardExceeded when a reachable
/// strongly connected component is larger than limits.max_scc_states.
std::vector<Loop> enumerate_loops(const DetOmegaAutomaton& a, const Limits& limits = {});

/// States reachable from the initial state, sorted.
StateSet reachable_states(const DetOmegaAutomaton& a);

/// Language-preserving conversion to Muller acceptance on the loop table.
/// Reach and Safety are not determined by the infinity set alone; they get
/// a one-bit latch first, state (q, flag) becoming 2q + flag.
MullerNormalForm to_muller_normal_form(const DetOmegaAutomaton& a, const Limits& limits = {});

/// Throws AlphabetMismatch when w is over another alphabet.
bool accepts(const DetOmegaAutomaton& a, const UPWord& w);

/// Automaton for the complement language. Parity shifts priorities, Reach
/// and Safety swap with the complementary state set, every other condition
/// goes through the normal form and complements the accepting loops.
DetOmegaAutomaton complement(const DetOmegaAutomaton& a, const Limits& limits = {});

enum class ProductMode { And, Or, Xor };

/// Synchronized product on reachable pairs with Muller acceptance over
/// product loops.
DetOmegaAutomaton product(const DetOmegaAutomaton& a1, const DetOmegaAutomaton& a2, ProductMode mode,
                          const Limits& limits = {});
MullerNormalForm product_normal_form(const DetOmegaAutomaton& a1, const DetOmegaAutomaton& a2, ProductMode mode,
                                     const Limits& limits = {});

struct EmptinessResult
{
    bool empty = true;
    /// Accepted word when non-empty; always re-checked with accepts().
    std::optional<UPWord> witness;
};

EmptinessResult is_empty(const DetOmegaAutomaton& a, const Limits& limits = {});
EmptinessResult is_empty(const MullerNormalForm& n);

struct EquivalenceResult
{
    bool equivalent = true;
    /// A word accepted by exactly one of the two automata.
    std::optional<UPWord> counterexample;
};

EquivalenceResult equivalent(const DetOmegaAutomaton& a1, const DetOmegaAutomaton& a2, const Limits& limits = {});

} // namespace omega
