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


#include "omega/oracle/generators.hpp"

#include <algorithm>

#include "omega/oracle/oracle.hpp"

namespace omega::oracle {

std::size_t
Generator::uniform(std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

bool
Generator::coin(double p)
{
    return std::bernoulli_distribution(p)(rng_);
}

VertexSet
Generator::subset(std::size_t n)
{
    VertexSet s;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (coin()) s.push_back(i);
    }
    return s;
}

Acceptance
Generator::acceptance(const DetOmegaAutomaton& a, AcceptanceKind kind)
{
    const auto n = a.num_states;
    switch (kind) {
    case AcceptanceKind::Reach: return Reach{subset(n)};
    case AcceptanceKind::Safety: return Safety{subset(n)};
    case AcceptanceKind::Buchi: return Buchi{subset(n)};
    case AcceptanceKind::CoBuchi: return CoBuchi{subset(n)};
    case AcceptanceKind::Parity: {
        Parity p;
        const auto top = uniform(1, 4);
        for (std::size_t q = 0; q < n; ++q) p.priority.push_back(static_cast<unsigned>(uniform(0, top)));
        return p;
    }
    case AcceptanceKind::Muller: break;
    }
    Muller m;
    for (auto& l : loops(a)) {
        if (coin()) m.family.push_back(std::move(l));
    }
    return m;
}

DetOmegaAutomaton
Generator::automaton(const Alphabet& alphabet, std::size_t states, AcceptanceKind kind)
{
    auto a = DetOmegaAutomaton::with_states(alphabet, states);
    for (State q = 0; q < states; ++q) {
        for (Letter l = 0; l < alphabet.size(); ++l) a.set(q, l, static_cast<State>(uniform(0, states - 1)));
    }
    a.acceptance = acceptance(a, kind);
    return validate(std::move(a));
}

UPWord
Generator::word(const Alphabet& alphabet, std::size_t max_prefix, std::size_t max_period)
{
    FiniteWord u, v;
    const auto k = alphabet.size();
    for (auto i = uniform(0, max_prefix); i > 0; --i) u.letters.push_back(static_cast<Letter>(uniform(0, k - 1)));
    for (auto i = uniform(1, max_period); i > 0; --i) v.letters.push_back(static_cast<Letter>(uniform(0, k - 1)));
    return canonicalize(alphabet, u, v);
}

GameGraph
Generator::arena(std::size_t vertices, std::size_t max_out)
{
    GameGraph g;
    for (std::size_t v = 0; v < vertices; ++v) g.add_vertex(coin() ? Player::Zero : Player::One);
    for (Vertex v = 0; v < vertices; ++v) {
        for (auto k = uniform(1, std::min(max_out, vertices)); k > 0; --k) {
            g.add_edge(v, static_cast<Vertex>(uniform(0, vertices - 1)));
        }
    }
    return validate(std::move(g));
}

objective::Parity
Generator::parity(const GameGraph& g, unsigned priorities)
{
    objective::Parity p;
    const unsigned base = coin() ? 0 : 1;
    for (std::size_t v = 0; v < g.size(); ++v) p.priority.push_back(base + static_cast<unsigned>(uniform(0, priorities - 1)));
    return p;
}

objective::Muller
Generator::muller(const GameGraph& g)
{
    objective::Muller m;
    const auto n = g.size();
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
        if (!coin()) continue;
        VertexSet s;
        for (Vertex v = 0; v < n; ++v) {
            if (bits >> v & 1) s.push_back(v);
        }
        m.family.push_back(std::move(s));
    }
    std::sort(m.family.begin(), m.family.end());
    return m;
}

} // namespace omega::oracle
