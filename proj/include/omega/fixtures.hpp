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

#include "omega/automaton.hpp"
#include "omega/game.hpp"

/// Small named automata and arenas used by tests, the acceptance suite and
/// the CLI's built-in reference claims.
namespace omega::fixtures {

/// abcA^w over {a,b,c}.
DetOmegaAutomaton abc_open();
/// Words over {a,b,c} without the prefix abc.
DetOmegaAutomaton abc_closed();
/// abA^w u baA^w over {a,b,c}.
DetOmegaAutomaton ab_or_ba_open();

/// Union of the cones (ab)^n A^w, n >= 1, over {a,b}.
DetOmegaAutomaton alternating_prefix_open_set();
DetOmegaAutomaton alternating_prefix_closed_set();

/// Infinitely many a over {a,b} (Buchi).
DetOmegaAutomaton inf_many_a();
/// Finitely many a over {a,b} (co-Buchi).
DetOmegaAutomaton fin_many_a();

DetOmegaAutomaton empty_language(const Alphabet& alphabet);
DetOmegaAutomaton full_language(const Alphabet& alphabet);

/// Reachability arena: v0 (player 0) moves to v1 or v2, both (player 1)
/// lead to v3, and v3 returns to v0.
GameGraph reach_arena();
/// reach_arena with an extra player 1 vertex v4 on a detour v1 -> v4 -> v0.
GameGraph expanded_reach_arena();

} // namespace omega::fixtures
