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


#include "omega/oracle/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

#include "omega/error.hpp"

namespace omega::oracle {

namespace {

using Bits = std::uint32_t;

bool
has(Bits s, std::uint32_t i)
{
    return (s >> i & 1u) != 0;
}

StateSet
to_set(Bits s)
{
    StateSet out;
    for (std::uint32_t i = 0; i < 32; ++i) {
        if (has(s, i)) out.push_back(i);
    }
    return out;
}

/// Whether the inf set and the visited set satisfy the condition.
bool
holds(const Acceptance& acc, const StateSet& visited, const StateSet& inf)
{
    auto meets = [](const StateSet& a, const StateSet& b) {
        return std::any_of(a.begin(), a.end(), [&](State q) { return std::find(b.begin(), b.end(), q) != b.end(); });
    };
    auto inside = [](const StateSet& a, const StateSet& b) {
        return std::all_of(a.begin(), a.end(), [&](State q) { return std::find(b.begin(), b.end(), q) != b.end(); });
    };
    if (auto* r = std::get_if<Reach>(&acc)) return meets(visited, r->states);
    if (auto* s = std::get_if<Safety>(&acc)) return inside(visited, s->states);
    if (auto* b = std::get_if<Buchi>(&acc)) return meets(inf, b->states);
    if (auto* c = std::get_if<CoBuchi>(&acc)) return inside(inf, c->states);
    if (auto* p = std::get_if<Parity>(&acc)) {
        unsigned least = ~0u;
        for (auto q : inf) least = std::min(least, p->priority[q]);
        return least % 2 == 0;
    }
    const auto& family = std::get<Muller>(acc).family;
    return std::find(family.begin(), family.end(), inf) != family.end();
}

/// Plain successor-table view with an accepting predicate on loops.
struct LoopView
{
    std::size_t n = 0;
    std::vector<std::vector<State>> succ;
    State initial = 0;
    std::function<bool(Bits)> accepting;
};

LoopView
view_of(const DetOmegaAutomaton& a, bool allow_latch = true)
{
    const auto k = a.alphabet.size();
    LoopView v;
    const bool latch = std::holds_alternative<Reach>(a.acceptance) || std::holds_alternative<Safety>(a.acceptance);
    if (!latch || !allow_latch) {
        v.n = a.num_states;
        v.succ.resize(v.n);
        for (State q = 0; q < v.n; ++q) {
            for (Letter l = 0; l < k; ++l) v.succ[q].push_back(a.delta[q * k + l]);
        }
        v.initial = a.initial;
        v.accepting = [acc = a.acceptance](Bits s) { return holds(acc, {}, to_set(s)); };
        return v;
    }
    // state (q, seen) at index q + n*seen; `seen` records a visit to a
    // target state (Reach) or to an unsafe one (Safety)
    const bool reach = std::holds_alternative<Reach>(a.acceptance);
    const auto& marked = reach ? std::get<Reach>(a.acceptance).states : std::get<Safety>(a.acceptance).states;
    const auto n = a.num_states;
    auto flagged = [&](State q) {
        const bool in = std::find(marked.begin(), marked.end(), q) != marked.end();
        return reach ? in : !in;
    };
    v.n = 2 * n;
    v.succ.resize(v.n);
    for (State q = 0; q < n; ++q) {
        for (int seen = 0; seen < 2; ++seen) {
            for (Letter l = 0; l < k; ++l) {
                const auto t = a.delta[q * k + l];
                v.succ[q + n * seen].push_back(t + n * ((seen || flagged(t)) ? 1 : 0));
            }
        }
    }
    v.initial = a.initial + static_cast<State>(n) * (flagged(a.initial) ? 1 : 0);
    v.accepting = [n, reach](Bits s) {
        const bool seen = (s >> n) != 0;
        return reach ? seen : !seen;
    };
    return v;
}

Bits
reach_closure(const LoopView& v, Bits from)
{
    Bits seen = from, frontier = from;
    while (frontier) {
        Bits next = 0;
        for (std::uint32_t q = 0; q < v.n; ++q) {
            if (!has(frontier, q)) continue;
            for (auto t : v.succ[q]) next |= 1u << t;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

bool
is_loop(const LoopView& v, Bits s)
{
    if (s == 0) return false;
    std::uint32_t first = 0;
    while (!has(s, first)) ++first;
    // forward and backward reachability inside s, using at least one edge
    Bits fwd = 0, frontier = 1u << first;
    while (frontier) {
        Bits next = 0;
        for (std::uint32_t q = 0; q < v.n; ++q) {
            if (!has(frontier, q)) continue;
            for (auto t : v.succ[q]) {
                if (has(s, t)) next |= 1u << t;
            }
        }
        frontier = next & ~fwd;
        fwd |= next;
    }
    if (fwd != s) return false;
    Bits bwd = 1u << first;
    for (bool grew = true; grew;) {
        grew = false;
        for (std::uint32_t q = 0; q < v.n; ++q) {
            if (!has(s, q) || has(bwd, q)) continue;
            for (auto t : v.succ[q]) {
                if (has(bwd, t)) {
                    bwd |= 1u << q;
                    grew = true;
                    break;
                }
            }
        }
    }
    return bwd == s;
}

std::vector<Bits>
loops_of(const LoopView& v)
{
    if (v.n > 20) throw GuardExceeded("oracle loop enumeration is limited to 20 states");
    const Bits reach = reach_closure(v, 1u << v.initial);
    std::vector<Bits> out;
    // enumerate subsets of the reachable states
    for (Bits s = reach; s; s = (s - 1) & reach) {
        if (is_loop(v, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// States from which every loop in reach satisfies `want`.
Bits
forced_states(const LoopView& v, const std::vector<std::pair<Bits, bool>>& all_loops, bool want)
{
    Bits out = 0;
    for (std::uint32_t q = 0; q < v.n; ++q) {
        const Bits r = reach_closure(v, 1u << q);
        bool ok = true;
        for (auto [s, acc] : all_loops) {
            if ((s & ~r) == 0 && acc != want) ok = false;
        }
        if (ok) out |= 1u << q;
    }
    return out;
}

Memberships
memberships_of_view(const LoopView& v)
{
    // loops of the whole state space, so that residual languages from any
    // state are covered
    std::vector<std::pair<Bits, bool>> all;
    const Bits everything = v.n == 32 ? ~0u : (1u << v.n) - 1;
    for (Bits s = everything; s; s = (s - 1) & everything) {
        if (is_loop(v, s)) all.emplace_back(s, v.accepting(s));
    }
    std::vector<std::pair<Bits, bool>> reachable;
    const Bits reach = reach_closure(v, 1u << v.initial);
    for (auto e : all) {
        if ((e.first & ~reach) == 0) reachable.push_back(e);
    }

    Memberships m;
    m.sigma2 = m.pi2 = true;
    for (auto [s, sa] : reachable) {
        for (auto [t, ta] : reachable) {
            if (s == t || (s & ~t) != 0) continue;
            if (sa && !ta) m.pi2 = false;
            if (!sa && ta) m.sigma2 = false;
        }
    }
    const Bits universal = forced_states(v, all, true);
    const Bits empty = forced_states(v, all, false);
    m.open = true;
    m.closed = true;
    for (auto [s, acc] : reachable) {
        if (acc && (s & universal) == 0) m.open = false;
        if (!acc && (s & empty) == 0) m.closed = false;
    }
    return m;
}

} // namespace

bool
accepts(const DetOmegaAutomaton& a, const UPWord& w)
{
    if (!(w.alphabet() == a.alphabet)) throw AlphabetMismatch("word and automaton use different alphabets");
    const auto k = a.alphabet.size();
    State q = a.initial;
    std::vector<State> visited{q};
    for (auto l : w.prefix().letters) {
        q = a.delta[q * k + l];
        visited.push_back(q);
    }
    std::map<State, std::size_t> boundary;  // boundary state -> index in visited
    while (!boundary.count(q)) {
        boundary[q] = visited.size() - 1;
        for (auto l : w.period().letters) {
            q = a.delta[q * k + l];
            visited.push_back(q);
        }
    }
    StateSet inf(visited.begin() + static_cast<std::ptrdiff_t>(boundary[q]) + 1, visited.end());
    std::sort(inf.begin(), inf.end());
    inf.erase(std::unique(inf.begin(), inf.end()), inf.end());
    std::sort(visited.begin(), visited.end());
    visited.erase(std::unique(visited.begin(), visited.end()), visited.end());
    return holds(a.acceptance, visited, inf);
}

std::vector<StateSet>
loops(const DetOmegaAutomaton& a)
{
    const auto v = view_of(a, false);
    std::vector<StateSet> out;
    for (auto s : loops_of(v)) out.push_back(to_set(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StateSet>
all_loops(const DetOmegaAutomaton& a)
{
    const auto v = view_of(a, false);
    if (v.n > 20) throw GuardExceeded("oracle loop enumeration is limited to 20 states");
    std::vector<StateSet> out;
    const Bits everything = (1u << v.n) - 1;
    for (Bits s = everything; s; s = (s - 1) & everything) {
        if (is_loop(v, s)) out.push_back(to_set(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Memberships
memberships(const DetOmegaAutomaton& a)
{
    const auto v = view_of(a);
    if (v.n > 20) throw GuardExceeded("oracle classification is limited to 20 states");
    return memberships_of_view(v);
}

BorelLabel
classify(const DetOmegaAutomaton& a)
{
    const auto m = memberships(a);
    if (m.open && m.closed) return BorelLabel::Clopen;
    if (m.open) return BorelLabel::OpenProper;
    if (m.closed) return BorelLabel::ClosedProper;
    if (m.sigma2 && m.pi2) return BorelLabel::Delta2Proper;
    if (m.sigma2) return BorelLabel::Sigma2Proper;
    if (m.pi2) return BorelLabel::Pi2Proper;
    return BorelLabel::Delta3Proper;
}

// ---------------------------------------------------------------------------
// games

namespace {

/// Whether player 0 wins the lasso `path` (cycle starting at `loop_start`).
bool
zero_wins(const GameGraph& g, const Objective& o, const std::vector<Vertex>& path, std::size_t loop_start)
{
    (void)g;
    StateSet visited(path.begin(), path.end());
    StateSet inf(path.begin() + static_cast<std::ptrdiff_t>(loop_start), path.end());
    for (auto* s : {&visited, &inf}) {
        std::sort(s->begin(), s->end());
        s->erase(std::unique(s->begin(), s->end()), s->end());
    }
    return std::visit([&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, objective::Reach>) return holds(Reach{x.target}, visited, inf);
        else if constexpr (std::is_same_v<T, objective::Safety>) return holds(Safety{x.safe}, visited, inf);
        else if constexpr (std::is_same_v<T, objective::Buchi>) return holds(Buchi{x.accepting}, visited, inf);
        else if constexpr (std::is_same_v<T, objective::CoBuchi>) return holds(CoBuchi{x.accepting}, visited, inf);
        else if constexpr (std::is_same_v<T, objective::Parity>) return holds(Parity{x.priority}, visited, inf);
        else return holds(Muller{x.family}, visited, inf);
    }, o);
}

/// All positional strategies of p, as choice vectors.
std::vector<std::vector<Vertex>>
strategies_of(const GameGraph& g, Player p)
{
    std::vector<std::vector<Vertex>> out{std::vector<Vertex>(g.size(), kNoVertex)};
    for (Vertex v = 0; v < g.size(); ++v) {
        if (g.owner[v] != p) continue;
        std::vector<std::vector<Vertex>> next;
        for (const auto& s : out) {
            for (auto w : g.succ[v]) {
                next.push_back(s);
                next.back()[v] = w;
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace

Winners
winners(const GameGraph& g, const Objective& o)
{
    if (auto* m = std::get_if<objective::Muller>(&o)) return muller_winners(g, m->family);
    const auto s0 = strategies_of(g, Player::Zero);
    const auto s1 = strategies_of(g, Player::One);
    if (s0.size() * s1.size() > (std::size_t{1} << 22)) throw GuardExceeded("too many positional strategy pairs");
    Winners w;
    for (Vertex start = 0; start < g.size(); ++start) {
        bool zero = false;
        for (const auto& a : s0) {
            bool all = true;
            for (const auto& b : s1) {
                std::vector<Vertex> path;
                std::vector<std::size_t> seen(g.size(), SIZE_MAX);
                Vertex v = start;
                while (seen[v] == SIZE_MAX) {
                    seen[v] = path.size();
                    path.push_back(v);
                    v = g.owner[v] == Player::Zero ? a[v] : b[v];
                }
                if (!zero_wins(g, o, path, seen[v])) {
                    all = false;
                    break;
                }
            }
            if (all) {
                zero = true;
                break;
            }
        }
        (zero ? w.win0 : w.win1).push_back(start);
    }
    return w;
}

namespace {

/// Attractor inside the subgame `in` (bitmask over at most 32 vertices).
Bits
attr(const GameGraph& g, Bits in, Player p, Bits target)
{
    Bits a = target & in;
    for (bool grew = true; grew;) {
        grew = false;
        for (Vertex v = 0; v < g.size(); ++v) {
            if (!has(in, v) || has(a, v)) continue;
            bool some = false, every = true;
            for (auto w : g.succ[v]) {
                if (!has(in, w)) continue;
                if (has(a, w)) some = true;
                else every = false;
            }
            if (g.owner[v] == p ? some : every) {
                a |= 1u << v;
                grew = true;
            }
        }
    }
    return a;
}

/// Returns player 0's winning region of the subgame `in`.
Bits
mcnaughton(const GameGraph& g, Bits in, const std::vector<Bits>& family)
{
    if (in == 0) return 0;
    const bool zero_owns = std::find(family.begin(), family.end(), in) != family.end();
    const auto p = zero_owns ? Player::Zero : Player::One;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!has(in, v)) continue;
        const Bits a = attr(g, in, p, 1u << v);
        const Bits sub = in & ~a;
        const Bits sub0 = mcnaughton(g, sub, family);
        const Bits lost = zero_owns ? sub & ~sub0 : sub0;  // opponent's region in the subgame
        if (lost == 0) continue;
        const Bits b = attr(g, in, opponent(p), lost);
        const Bits rest0 = mcnaughton(g, in & ~b, family);
        return zero_owns ? rest0 : rest0 | b;
    }
    return zero_owns ? in : 0;
}

} // namespace

Winners
muller_winners(const GameGraph& g, const std::vector<VertexSet>& family)
{
    if (g.size() > 16) throw GuardExceeded("oracle Muller solver is limited to 16 vertices");
    std::vector<Bits> fam;
    for (const auto& s : family) {
        Bits b = 0;
        for (auto v : s) b |= 1u << v;
        fam.push_back(b);
    }
    const Bits all = (1u << g.size()) - 1;
    const Bits w0 = mcnaughton(g, all, fam);
    Winners w;
    for (Vertex v = 0; v < g.size(); ++v) (has(w0, v) ? w.win0 : w.win1).push_back(v);
    return w;
}

} // namespace omega::oracle
