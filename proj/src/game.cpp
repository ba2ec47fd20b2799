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

#include "omega/game.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "graph_util.hpp"
#include "omega/error.hpp"

namespace omega {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };

using Mask = std::vector<char>;

Mask
mask_of(std::size_t n, const VertexSet& s)
{
    Mask m(n, 0);
    for (auto v : s) m[v] = 1;
    return m;
}

VertexSet
set_of(const Mask& m)
{
    VertexSet s;
    for (Vertex v = 0; v < m.size(); ++v) {
        if (m[v]) s.push_back(v);
    }
    return s;
}

struct Arena
{
    explicit Arena(const GameGraph& game) : g(game), pred(game.size())
    {
        for (Vertex v = 0; v < g.size(); ++v) {
            for (auto w : g.succ[v]) pred[w].push_back(v);
        }
    }

    const GameGraph& g;
    std::vector<std::vector<Vertex>> pred;
};

/// Attractor for `p` to `target` inside the subgame `in`. Writes attractor
/// moves for p's vertices into `strategy` and, if given, attraction rounds
/// into `rank`.
Mask
attract(const Arena& arena, const Mask& in, Player p, const Mask& target, std::vector<Vertex>& strategy,
        std::vector<unsigned>* rank = nullptr)
{
    const auto& g = arena.g;
    const auto n = g.size();
    Mask attr(n, 0);
    std::vector<unsigned> round(n, 0);
    std::vector<std::uint32_t> escapes(n, 0);
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        if (in[v] && target[v]) {
            attr[v] = 1;
            queue.push_back(v);
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!in[v] || attr[v]) continue;
        for (auto w : g.succ[v]) escapes[v] += in[w] ? 1 : 0;
    }
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto u : arena.pred[v]) {
            if (!in[u] || attr[u]) continue;
            if (g.owner[u] == p) {
                strategy[u] = v;
            } else if (--escapes[u] > 0) {
                continue;
            }
            attr[u] = 1;
            round[u] = round[v] + 1;
            queue.push_back(u);
        }
    }
    if (rank) *rank = std::move(round);
    return attr;
}

Mask
minus(const Mask& a, const Mask& b)
{
    Mask out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && !b[i];
    return out;
}

bool
empty(const Mask& m)
{
    return std::none_of(m.begin(), m.end(), [](char c) { return c != 0; });
}

/// First successor of v inside `in`, kNoVertex if none.
Vertex
successor_in(const GameGraph& g, Vertex v, const Mask& in)
{
    for (auto w : g.succ[v]) {
        if (in[w]) return w;
    }
    return kNoVertex;
}

/// Gives every owned vertex of `region` without a move one that stays in
/// `region` (or any successor if none does).
void
fill_moves(const GameGraph& g, Player p, const Mask& region, std::vector<Vertex>& strategy)
{
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!region[v] || g.owner[v] != p || strategy[v] != kNoVertex) continue;
        auto w = successor_in(g, v, region);
        strategy[v] = w != kNoVertex ? w : g.succ[v].front();
    }
}

struct Regions
{
    Mask win[2];
    std::vector<Vertex> strategy[2];
};

Regions
make_regions(std::size_t n)
{
    Regions r;
    for (int i = 0; i < 2; ++i) {
        r.win[i].assign(n, 0);
        r.strategy[i].assign(n, kNoVertex);
    }
    return r;
}

/// p wants to visit `target`.
Regions
solve_reach(const Arena& arena, Player p, const Mask& target)
{
    const auto& g = arena.g;
    const auto n = g.size();
    auto r = make_regions(n);
    const Mask all(n, 1);
    r.win[index(p)] = attract(arena, all, p, target, r.strategy[index(p)]);
    r.win[index(opponent(p))] = minus(all, r.win[index(p)]);
    fill_moves(g, p, r.win[index(p)], r.strategy[index(p)]);
    fill_moves(g, opponent(p), r.win[index(opponent(p))], r.strategy[index(opponent(p))]);
    return r;
}

/// p wants to visit `target` infinitely often.
Regions
solve_buchi(const Arena& arena, Player p, const Mask& target)
{
    const auto& g = arena.g;
    const auto n = g.size();
    const auto q = opponent(p);
    auto r = make_regions(n);
    Mask game(n, 1);
    while (!empty(game)) {
        std::vector<Vertex> recur(n, kNoVertex);
        Mask goal(n, 0);
        for (Vertex v = 0; v < n; ++v) goal[v] = game[v] && target[v];
        const auto good = attract(arena, game, p, goal, recur);
        const auto trap = minus(game, good);
        if (empty(trap)) {
            // p wins the remaining subgame: attract to target, then stay
            for (Vertex v = 0; v < n; ++v) {
                if (game[v] && g.owner[v] == p) r.strategy[index(p)][v] = recur[v];
            }
            fill_moves(g, p, game, r.strategy[index(p)]);
            for (Vertex v = 0; v < n; ++v) r.win[index(p)][v] |= game[v];
            break;
        }
        // q keeps the play in `trap`, which avoids the target
        for (Vertex v = 0; v < n; ++v) {
            if (trap[v] && g.owner[v] == q) r.strategy[index(q)][v] = successor_in(g, v, trap);
        }
        const auto lost = attract(arena, game, q, trap, r.strategy[index(q)]);
        for (Vertex v = 0; v < n; ++v) {
            r.win[index(q)][v] |= lost[v];
            game[v] = game[v] && !lost[v];
        }
    }
    return r;
}

void
zielonka(const Arena& arena, const std::vector<unsigned>& priority, const Mask& game, Mask& win0, Mask& win1,
         std::vector<Vertex>& strategy)
{
    const auto& g = arena.g;
    const auto n = g.size();
    win0.assign(n, 0);
    win1.assign(n, 0);
    unsigned d = ~0u;
    for (Vertex v = 0; v < n; ++v) {
        if (game[v]) d = std::min(d, priority[v]);
    }
    if (d == ~0u) return;
    const auto p = d % 2 == 0 ? Player::Zero : Player::One;
    auto& win_p = p == Player::Zero ? win0 : win1;
    auto& win_q = p == Player::Zero ? win1 : win0;

    Mask top(n, 0);
    for (Vertex v = 0; v < n; ++v) top[v] = game[v] && priority[v] == d;
    std::vector<Vertex> attr_moves(n, kNoVertex);
    const auto a = attract(arena, game, p, top, attr_moves);

    Mask sub0, sub1;
    zielonka(arena, priority, minus(game, a), sub0, sub1, strategy);
    const auto& sub_q = p == Player::Zero ? sub1 : sub0;

    if (empty(sub_q)) {
        win_p = game;
        for (Vertex v = 0; v < n; ++v) {
            if (!a[v] || g.owner[v] != p) continue;
            strategy[v] = top[v] ? successor_in(g, v, game) : attr_moves[v];
        }
        return;
    }

    std::vector<Vertex> escape_moves(n, kNoVertex);
    const auto b = attract(arena, game, opponent(p), sub_q, escape_moves);
    for (Vertex v = 0; v < n; ++v) {
        if (b[v] && !sub_q[v] && g.owner[v] != p) strategy[v] = escape_moves[v];
    }
    Mask rest0, rest1;
    zielonka(arena, priority, minus(game, b), rest0, rest1, strategy);
    const auto& rest_p = p == Player::Zero ? rest0 : rest1;
    const auto& rest_q = p == Player::Zero ? rest1 : rest0;
    for (Vertex v = 0; v < n; ++v) {
        win_p[v] = rest_p[v];
        win_q[v] = rest_q[v] || b[v];
    }
}

Regions
solve_parity(const Arena& arena, const std::vector<unsigned>& priority)
{
    const auto n = arena.g.size();
    auto r = make_regions(n);
    std::vector<Vertex> strategy(n, kNoVertex);
    zielonka(arena, priority, Mask(n, 1), r.win[0], r.win[1], strategy);
    for (Vertex v = 0; v < n; ++v) {
        const int o = index(arena.g.owner[v]);
        if (r.win[o][v]) r.strategy[o][v] = strategy[v];
    }
    return r;
}

SolveResult
to_result(const Regions& r)
{
    SolveResult out;
    out.win0 = set_of(r.win[0]);
    out.win1 = set_of(r.win[1]);
    out.strategy0 = PositionalStrategy{r.strategy[0]};
    out.strategy1 = PositionalStrategy{r.strategy[1]};
    return out;
}

std::uint32_t
bits_of(const VertexSet& s)
{
    std::uint32_t m = 0;
    for (auto v : s) m |= 1u << v;
    return m;
}

} // namespace

// ---------------------------------------------------------------------------
// arena

Vertex
GameGraph::add_vertex(Player p, std::string name)
{
    names.push_back(std::move(name));
    owner.push_back(p);
    succ.emplace_back();
    return static_cast<Vertex>(owner.size() - 1);
}

std::string
GameGraph::name(Vertex v) const
{
    if (v < names.size() && !names[v].empty()) return names[v];
    return std::to_string(v);
}

VertexSet
GameGraph::all_vertices() const
{
    VertexSet s(size());
    for (Vertex v = 0; v < size(); ++v) s[v] = v;
    return s;
}

GameGraph
validate(GameGraph g)
{
    const auto n = g.owner.size();
    if (n == 0) throw ValidationError("game has no vertices");
    if (g.succ.size() != n) throw ValidationError("successor lists do not match the vertex count");
    g.names.resize(n);
    if (g.initial && *g.initial >= n) throw ValidationError("initial vertex " + std::to_string(*g.initial) + " does not exist");
    for (Vertex v = 0; v < n; ++v) {
        auto& s = g.succ[v];
        if (s.empty()) throw ValidationError("vertex " + g.name(v) + " has no successor");
        for (auto w : s) {
            if (w >= n) throw ValidationError("edge " + g.name(v) + " -> " + std::to_string(w) + " leaves the arena");
        }
        s = make_index_set(std::move(s));
    }
    return g;
}

GameGraph
swap_owners(GameGraph g)
{
    for (auto& o : g.owner) o = opponent(o);
    return g;
}

// ---------------------------------------------------------------------------
// objectives

std::string
objective_name(const Objective& o)
{
    return std::visit(overloaded{
        [](const objective::Reach&) { return std::string("reach"); },
        [](const objective::Safety&) { return std::string("safety"); },
        [](const objective::Buchi&) { return std::string("buchi"); },
        [](const objective::CoBuchi&) { return std::string("cobuchi"); },
        [](const objective::Parity&) { return std::string("parity"); },
        [](const objective::Muller&) { return std::string("muller"); },
    }, o);
}

std::string
describe(const Objective& o)
{
    std::ostringstream out;
    out << objective_name(o);
    std::visit(overloaded{
        [&](const objective::Reach& x) { out << ' ' << to_string(x.target); },
        [&](const objective::Safety& x) { out << ' ' << to_string(x.safe); },
        [&](const objective::Buchi& x) { out << ' ' << to_string(x.accepting); },
        [&](const objective::CoBuchi& x) { out << ' ' << to_string(x.accepting); },
        [&](const objective::Parity& x) {
            for (std::size_t v = 0; v < x.priority.size(); ++v) out << ' ' << v << ':' << x.priority[v];
        },
        [&](const objective::Muller& x) {
            for (const auto& s : x.family) out << ' ' << to_string(s);
        },
    }, o);
    return out.str();
}

Objective
validate(const GameGraph& g, Objective o)
{
    const auto n = g.size();
    auto check = [&](VertexSet& s) {
        s = make_index_set(std::move(s));
        for (auto v : s) {
            if (v >= n) throw ValidationError("objective mentions unknown vertex " + std::to_string(v));
        }
    };
    std::visit(overloaded{
        [&](objective::Reach& x) { check(x.target); },
        [&](objective::Safety& x) { check(x.safe); },
        [&](objective::Buchi& x) { check(x.accepting); },
        [&](objective::CoBuchi& x) { check(x.accepting); },
        [&](objective::Parity& x) {
            if (x.priority.size() != n) throw ValidationError("parity objective must give every vertex a priority");
        },
        [&](objective::Muller& x) {
            for (auto& s : x.family) check(s);
            std::sort(x.family.begin(), x.family.end());
            x.family.erase(std::unique(x.family.begin(), x.family.end()), x.family.end());
        },
    }, o);
    return o;
}

// ---------------------------------------------------------------------------
// solvers

AttractorResult
attractor(const GameGraph& g, Player player, const VertexSet& target)
{
    const Arena arena(g);
    AttractorResult r;
    r.strategy.assign(g.size(), kNoVertex);
    auto attr = attract(arena, Mask(g.size(), 1), player, mask_of(g.size(), target), r.strategy, &r.rank);
    r.region = set_of(attr);
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!attr[v]) {
            r.rank[v] = 0;
            r.strategy[v] = kNoVertex;
        }
    }
    return r;
}

LARGame
lar_reduction(const GameGraph& g, const objective::Muller& m, const Limits& limits)
{
    const auto n = g.size();
    if (n > limits.max_lar_vertices || n > 16) {
        throw GuardExceeded("Muller arena with " + std::to_string(n) + " vertices exceeds the LAR cap of "
                            + std::to_string(limits.max_lar_vertices));
    }
    std::vector<char> in_family(std::size_t{1} << n, 0);
    for (const auto& s : m.family) in_family[bits_of(s)] = 1;

    LARGame lar;
    std::map<std::pair<std::vector<Vertex>, unsigned>, Vertex> index;
    auto intern = [&](std::vector<Vertex> rec, unsigned hit) {
        auto [it, fresh] = index.try_emplace({rec, hit}, static_cast<Vertex>(lar.record.size()));
        if (fresh) {
            // the hit set is the moved vertex plus everything recorded before it
            std::uint32_t hit_set = 0;
            for (unsigned i = 0; i <= hit; ++i) hit_set |= 1u << rec[i];
            const unsigned base = 2 * static_cast<unsigned>(n - (hit + 1));
            lar.priority.push_back(base + (in_family[hit_set] ? 0 : 1));
            lar.projection.push_back(rec.front());
            lar.graph.add_vertex(g.owner[rec.front()]);
            lar.record.push_back(std::move(rec));
            lar.hit.push_back(hit);
        }
        return it->second;
    };
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> rec{v};
        for (Vertex w = 0; w < n; ++w) {
            if (w != v) rec.push_back(w);
        }
        lar.initial_of.push_back(intern(std::move(rec), 0));
    }
    for (Vertex s = 0; s < lar.record.size(); ++s) {
        for (auto w : g.succ[lar.record[s].front()]) {
            auto rec = lar.record[s];
            const auto pos = static_cast<unsigned>(std::find(rec.begin(), rec.end(), w) - rec.begin());
            std::rotate(rec.begin(), rec.begin() + pos, rec.begin() + pos + 1);
            const auto t = intern(std::move(rec), pos);
            lar.graph.add_edge(s, t);
        }
    }
    lar.graph = validate(std::move(lar.graph));
    return lar;
}

Vertex
LARStrategy::update(Vertex memory, Vertex to) const
{
    for (auto t : lar->graph.succ.at(memory)) {
        if (lar->projection[t] == to) return t;
    }
    throw ValidationError("move to " + std::to_string(to) + " is not possible from memory state " + std::to_string(memory));
}

Vertex
LARStrategy::next_move(Vertex memory) const
{
    const auto t = move.at(memory);
    return t == kNoVertex ? kNoVertex : lar->projection[t];
}

SolveResult
solve(const GameGraph& g, const Objective& o, const Limits& limits)
{
    const auto n = g.size();
    const Arena arena(g);
    return std::visit(overloaded{
        [&](const objective::Reach& x) { return to_result(solve_reach(arena, Player::Zero, mask_of(n, x.target))); },
        [&](const objective::Safety& x) {
            return to_result(solve_reach(arena, Player::One, mask_of(n, complement_of(x.safe, static_cast<Vertex>(n)))));
        },
        [&](const objective::Buchi& x) { return to_result(solve_buchi(arena, Player::Zero, mask_of(n, x.accepting))); },
        [&](const objective::CoBuchi& x) {
            return to_result(solve_buchi(arena, Player::One, mask_of(n, complement_of(x.accepting, static_cast<Vertex>(n)))));
        },
        [&](const objective::Parity& x) { return to_result(solve_parity(arena, x.priority)); },
        [&](const objective::Muller& x) {
            auto lar = std::make_shared<const LARGame>(lar_reduction(g, x, limits));
            const Arena expanded(lar->graph);
            const auto r = solve_parity(expanded, lar->priority);
            SolveResult out;
            for (Vertex v = 0; v < n; ++v) {
                (r.win[0][lar->initial_of[v]] ? out.win0 : out.win1).push_back(v);
            }
            out.strategy0 = LARStrategy{lar, r.strategy[0]};
            out.strategy1 = LARStrategy{lar, r.strategy[1]};
            return out;
        },
    }, o);
}

// ---------------------------------------------------------------------------
// verification

namespace {

/// Graph of the plays consistent with p's strategy from p's region. Nodes
/// are arena vertices (positional) or expanded vertices (LAR memory).
struct PlayGraph
{
    detail::Adjacency succ;
    std::vector<Vertex> projection;
    Mask present;
};

std::optional<PlayGraph>
build_play_graph(const GameGraph& g, Player p, const VertexSet& region, const Strategy& strategy)
{
    const auto in_region = mask_of(g.size(), region);
    PlayGraph pg;
    if (const auto* pos = std::get_if<PositionalStrategy>(&strategy)) {
        const auto n = g.size();
        pg.succ.resize(n);
        pg.projection = g.all_vertices();
        pg.present = in_region;
        for (auto v : region) {
            if (g.owner[v] == p) {
                const auto w = v < pos->move.size() ? pos->move[v] : kNoVertex;
                if (w == kNoVertex) throw ValidationError("strategy undefined on winning vertex " + g.name(v));
                if (!std::binary_search(g.succ[v].begin(), g.succ[v].end(), w)) return std::nullopt;
                pg.succ[v].push_back(w);
            } else {
                pg.succ[v] = g.succ[v];
            }
        }
        return pg;
    }
    const auto& mem = std::get<LARStrategy>(strategy);
    const auto& lar = *mem.lar;
    const auto m = lar.graph.size();
    pg.succ.resize(m);
    pg.projection = lar.projection;
    pg.present.assign(m, 0);
    std::vector<Vertex> work;
    for (auto v : region) {
        const auto s = lar.initial_of[v];
        if (!pg.present[s]) {
            pg.present[s] = 1;
            work.push_back(s);
        }
    }
    while (!work.empty()) {
        const auto s = work.back();
        work.pop_back();
        if (lar.graph.owner[s] == p) {
            const auto t = mem.move.at(s);
            if (t == kNoVertex) throw ValidationError("strategy undefined in memory state " + std::to_string(s));
            pg.succ[s].push_back(t);
        } else {
            pg.succ[s] = lar.graph.succ[s];
        }
        for (auto t : pg.succ[s]) {
            if (!pg.present[t]) {
                pg.present[t] = 1;
                work.push_back(t);
            }
        }
    }
    return pg;
}

bool
has_cycle(const detail::Adjacency& succ, const Mask& in)
{
    for (const auto& c : detail::strongly_connected_components(succ, in)) {
        if (detail::is_nontrivial(succ, c)) return true;
    }
    return false;
}

/// Whether p wins every play of the graph under the parity condition.
bool
parity_plays_won(const PlayGraph& pg, const std::vector<unsigned>& priority, Player p)
{
    std::vector<unsigned> seen;
    for (Vertex s = 0; s < pg.present.size(); ++s) {
        if (pg.present[s]) seen.push_back(priority[pg.projection[s]]);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (auto d : seen) {
        if (static_cast<int>(d % 2) == index(p)) continue;
        Mask high(pg.present.size(), 0);
        for (Vertex s = 0; s < high.size(); ++s) high[s] = pg.present[s] && priority[pg.projection[s]] >= d;
        for (const auto& c : detail::strongly_connected_components(pg.succ, high)) {
            if (!detail::is_nontrivial(pg.succ, c)) continue;
            for (auto s : c) {
                if (priority[pg.projection[s]] == d) return false;
            }
        }
    }
    return true;
}

/// Whether p wins every play under the Muller condition: no cycle of the
/// graph projects exactly onto a set p does not want.
bool
muller_plays_won(const PlayGraph& pg, const objective::Muller& m, const VertexSet& region, Player p)
{
    const auto k = region.size();
    if (k > 20) throw GuardExceeded("Muller verification over more than 20 vertices");
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
        VertexSet s;
        for (std::size_t i = 0; i < k; ++i) {
            if (bits >> i & 1) s.push_back(region[i]);
        }
        const bool in_family = std::binary_search(m.family.begin(), m.family.end(), s);
        if (in_family == (p == Player::Zero)) continue;
        Mask in(pg.present.size(), 0);
        for (Vertex t = 0; t < in.size(); ++t) in[t] = pg.present[t] && contains(s, pg.projection[t]);
        for (const auto& c : detail::strongly_connected_components(pg.succ, in)) {
            if (!detail::is_nontrivial(pg.succ, c)) continue;
            VertexSet proj;
            for (auto t : c) proj.push_back(pg.projection[t]);
            if (make_index_set(std::move(proj)) == s) return false;
        }
    }
    return true;
}

bool
verify_player(const GameGraph& g, const Objective& o, const SolveResult& result, Player p)
{
    const auto& region = result.region(p);
    if (region.empty()) return true;
    const auto pg = build_play_graph(g, p, region, result.strategy(p));
    if (!pg) return false;
    const auto n = g.size();

    // Vertices where the objective is already settled in p's favour; plays
    // may leave the region from there.
    Mask settled(n, 0);
    if (const auto* r = std::get_if<objective::Reach>(&o); r && p == Player::Zero) settled = mask_of(n, r->target);
    if (const auto* s = std::get_if<objective::Safety>(&o); s && p == Player::One) {
        settled = mask_of(n, complement_of(s->safe, static_cast<Vertex>(n)));
    }
    const auto in_region = mask_of(n, region);
    for (Vertex s = 0; s < pg->present.size(); ++s) {
        if (!pg->present[s] || settled[pg->projection[s]]) continue;
        for (auto t : pg->succ[s]) {
            if (!in_region[pg->projection[t]]) return false;
        }
    }

    return std::visit(overloaded{
        [&](const objective::Reach& x) {
            if (p == Player::One) return !intersects(region, x.target);
            return !has_cycle(pg->succ, minus(pg->present, settled));
        },
        [&](const objective::Safety& x) {
            if (p == Player::Zero) return is_subset(region, x.safe);
            return !has_cycle(pg->succ, minus(pg->present, settled));
        },
        [&](const objective::Buchi& x) {
            std::vector<unsigned> prio(n, 1);
            for (auto v : x.accepting) prio[v] = 0;
            return parity_plays_won(*pg, prio, p);
        },
        [&](const objective::CoBuchi& x) {
            std::vector<unsigned> prio(n, 1);
            for (auto v : x.accepting) prio[v] = 2;
            return parity_plays_won(*pg, prio, p);
        },
        [&](const objective::Parity& x) { return parity_plays_won(*pg, x.priority, p); },
        [&](const objective::Muller& x) { return muller_plays_won(*pg, x, region, p); },
    }, o);
}

} // namespace

bool
verify_strategy(const GameGraph& g, const Objective& o, const SolveResult& result)
{
    VertexSet both;
    std::set_union(result.win0.begin(), result.win0.end(), result.win1.begin(), result.win1.end(),
                   std::back_inserter(both));
    if (intersects(result.win0, result.win1) || both != g.all_vertices()) return false;
    const auto normal = validate(g, o);
    return verify_player(g, normal, result, Player::Zero) && verify_player(g, normal, result, Player::One);
}

// ---------------------------------------------------------------------------
// objective lift

std::string
to_string(LiftConvention c)
{
    return c == LiftConvention::PaperExact ? "paper" : "meets-r";
}

LiftedObjective
lift_objective(const GameGraph& g, const GameGraph& expanded, const VertexSet& r, LiftConvention convention)
{
    if (g.size() > expanded.size()) throw ValidationError("expanded arena is smaller than the original");
    for (Vertex v = 0; v < g.size(); ++v) {
        if (g.name(v) != expanded.name(v) || g.owner[v] != expanded.owner[v]) {
            throw ValidationError("vertex " + g.name(v) + " of the original arena is not a vertex of the expanded one");
        }
    }
    for (auto v : r) {
        if (v >= g.size()) throw ValidationError("target vertex " + std::to_string(v) + " is not in the original arena");
    }
    LiftedObjective out{{}, convention};
    if (convention == LiftConvention::PaperExact) {
        out.objective.family.push_back(g.all_vertices());
        return out;
    }
    const auto n = g.size();
    if (n > 16) throw GuardExceeded("meets-r lift enumerates subsets of more than 16 vertices");
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
        VertexSet s;
        for (Vertex v = 0; v < n; ++v) {
            if (bits >> v & 1) s.push_back(v);
        }
        if (intersects(s, r)) out.objective.family.push_back(std::move(s));
    }
    std::sort(out.objective.family.begin(), out.objective.family.end());
    return out;
}

} // namespace omega
