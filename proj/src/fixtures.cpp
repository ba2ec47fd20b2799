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


#include "omega/fixtures.hpp"

#include <initializer_list>
#include <string>
#include <tuple>

namespace omega::fixtures {

namespace {

using Edge = std::tuple<State, char, State>;

DetOmegaAutomaton
build(const char* letters, std::size_t n, std::initializer_list<Edge> edges, State sink_from, Acceptance acc)
{
    auto a = DetOmegaAutomaton::with_states(Alphabet::of_chars(letters), n, std::move(acc));
    for (auto [from, letter, to] : edges) a.set(from, *a.alphabet.index_of(std::string(1, letter)), to);
    // every missing move goes to sink `sink_from` (or stays put for sinks)
    for (State q = 0; q < n; ++q) {
        for (Letter l = 0; l < a.alphabet.size(); ++l) {
            if (a.next(q, l) == kNoState) a.set(q, l, q >= sink_from ? q : static_cast<State>(n - 1));
        }
    }
    return validate(std::move(a));
}

} // namespace

// In the prefix automata below, the last two states are the accepting sink
// and the rejecting sink, in that order.

DetOmegaAutomaton
abc_open()
{
    return build("abc", 5, {{0, 'a', 1}, {1, 'b', 2}, {2, 'c', 3}}, 3, Reach{{3}});
}

DetOmegaAutomaton
abc_closed()
{
    return build("abc", 5, {{0, 'a', 1}, {1, 'b', 2}, {2, 'c', 3}}, 3, Safety{{0, 1, 2, 4}});
}

DetOmegaAutomaton
ab_or_ba_open()
{
    return build("abc", 5, {{0, 'a', 1}, {0, 'b', 2}, {1, 'b', 3}, {2, 'a', 3}}, 3, Reach{{3}});
}

DetOmegaAutomaton
alternating_prefix_open_set()
{
    return build("ab", 4, {{0, 'a', 1}, {1, 'b', 2}}, 2, Buchi{{2}});
}

DetOmegaAutomaton
alternating_prefix_closed_set()
{
    return build("ab", 4, {{0, 'a', 1}, {1, 'b', 2}}, 2, CoBuchi{{0, 1, 3}});
}

DetOmegaAutomaton
inf_many_a()
{
    return build("ab", 2, {{0, 'a', 1}, {0, 'b', 0}, {1, 'a', 1}, {1, 'b', 0}}, 2, Buchi{{1}});
}

DetOmegaAutomaton
fin_many_a()
{
    return build("ab", 2, {{0, 'a', 1}, {0, 'b', 0}, {1, 'a', 1}, {1, 'b', 0}}, 2, CoBuchi{{0}});
}

DetOmegaAutomaton
empty_language(const Alphabet& alphabet)
{
    auto a = DetOmegaAutomaton::with_states(alphabet, 1, Safety{});
    for (Letter l = 0; l < alphabet.size(); ++l) a.set(0, l, 0);
    return validate(std::move(a));
}

DetOmegaAutomaton
full_language(const Alphabet& alphabet)
{
    auto a = DetOmegaAutomaton::with_states(alphabet, 1, Safety{{0}});
    for (Letter l = 0; l < alphabet.size(); ++l) a.set(0, l, 0);
    return validate(std::move(a));
}

GameGraph
reach_arena()
{
    GameGraph g;
    g.add_vertex(Player::Zero, "v0");
    g.add_vertex(Player::One, "v1");
    g.add_vertex(Player::One, "v2");
    g.add_vertex(Player::One, "v3");
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.initial = 0;
    return validate(std::move(g));
}

GameGraph
expanded_reach_arena()
{
    auto g = reach_arena();
    g.add_vertex(Player::One, "v4");
    g.add_edge(1, 4);
    g.add_edge(4, 0);
    return validate(std::move(g));
}

} // namespace omega::fixtures
