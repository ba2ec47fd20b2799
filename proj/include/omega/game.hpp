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
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "omega/automaton.hpp"
#include "omega/index_set.hpp"

namespace omega {

using Vertex = std::uint32_t;
using VertexSet = IndexSet;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

enum class Player : std::uint8_t { Zero = 0, One = 1 };

inline Player opponent(Player p) { return p == Player::Zero ? Player::One : Player::Zero; }
inline int index(Player p) { return static_cast<int>(p); }

/// Finite arena. Every vertex must have a successor, so every play is
/// infinite.
struct GameGraph
{
    std::vector<std::string> names;
    std::vector<Player> owner;
    std::vector<std::vector<Vertex>> succ;
    std::optional<Vertex> initial;

    std::size_t size() const { return owner.size(); }
    Vertex add_vertex(Player p, std::string name = {});
    void add_edge(Vertex from, Vertex to) { succ.at(from).push_back(to); }
    /// Display name, falling back to the id.
    std::string name(Vertex v) const;
    VertexSet all_vertices() const;

    bool operator==(const GameGraph&) const = default;
};

/// Checks vertex references and dead ends; sorts and dedups successor lists.
GameGraph validate(GameGraph g);

// Objectives of Player 0. Player 1 wins exactly the plays Player 0 loses.
namespace objective {
struct Reach   { VertexSet target; bool operator==(const Reach&) const = default; };
struct Safety  { VertexSet safe; bool operator==(const Safety&) const = default; };
struct Buchi   { VertexSet accepting; bool operator==(const Buchi&) const = default; };
struct CoBuchi { VertexSet accepting; bool operator==(const CoBuchi&) const = default; };
struct Parity  { std::vector<unsigned> priority; bool operator==(const Parity&) const = default; };  // min-even
struct Muller  { std::vector<VertexSet> family; bool operator==(const Muller&) const = default; };
} // namespace objective

using Objective = std::variant<objective::Reach, objective::Safety, objective::Buchi, objective::CoBuchi,
                               objective::Parity, objective::Muller>;

std::string objective_name(const Objective& o);
/// "reach {3}", "muller {0 1 2 3}", "parity 0:1 1:2", ...
std::string describe(const Objective& o);

/// Throws ValidationError when the objective mentions unknown vertices.
Objective validate(const GameGraph& g, Objective o);

/// Positional strategy: move[v] is the chosen successor, kNoVertex where
/// the strategy is not defined.
struct PositionalStrategy
{
    std::vector<Vertex> move;
};

/// Latest appearance record expansion of a Muller game. Game vertices are
/// (record, hit) pairs; record[0] is the current arena vertex.
struct LARGame
{
    GameGraph graph;
    std::vector<unsigned> priority;
    /// Arena vertex of every expanded vertex.
    std::vector<Vertex> projection;
    /// Expanded vertex where a play from each arena vertex starts.
    std::vector<Vertex> initial_of;
    std::vector<std::vector<Vertex>> record;
    std::vector<unsigned> hit;
};

/// Finite-memory strategy whose memory states are the LAR records.
struct LARStrategy
{
    std::shared_ptr<const LARGame> lar;
    /// Chosen expanded successor per expanded vertex (kNoVertex if none).
    std::vector<Vertex> move;

    std::size_t memory_size() const { return lar ? lar->graph.size() : 0; }
    /// Memory when a play starts in v.
    Vertex initial_memory(Vertex v) const { return lar->initial_of.at(v); }
    /// Memory after the play moves on to arena vertex `to`.
    Vertex update(Vertex memory, Vertex to) const;
    /// Arena successor chosen in the current memory state.
    Vertex next_move(Vertex memory) const;
};

using Strategy = std::variant<PositionalStrategy, LARStrategy>;

struct SolveResult
{
    VertexSet win0;
    VertexSet win1;
    Strategy strategy0;
    Strategy strategy1;

    const VertexSet& region(Player p) const { return p == Player::Zero ? win0 : win1; }
    const Strategy& strategy(Player p) const { return p == Player::Zero ? strategy0 : strategy1; }
    bool wins(Player p, Vertex v) const { return contains(region(p), v); }
};

struct AttractorResult
{
    VertexSet region;
    /// Successor decreasing the rank, for the player's vertices outside the target.
    std::vector<Vertex> strategy;
    /// Round in which each region vertex was attracted (0 for the target).
    std::vector<unsigned> rank;
};

AttractorResult attractor(const GameGraph& g, Player player, const VertexSet& target);

/// Reach via attractors, Buchi and co-Buchi via repeated attractors,
/// parity via Zielonka's recursive algorithm, Muller through the LAR
/// parity game. Throws GuardExceeded for Muller arenas larger than
/// limits.max_lar_vertices.
SolveResult solve(const GameGraph& g, const Objective& o, const Limits& limits = {});

LARGame lar_reduction(const GameGraph& g, const objective::Muller& m, const Limits& limits = {});

/// Checks both strategies on their regions: the regions partition the
/// arena, each region is closed under the owner's strategy and all opponent
/// moves, and every play consistent with the strategy satisfies the owner's
/// objective. Throws ValidationError when a strategy is undefined on an
/// owned winning vertex.
bool verify_strategy(const GameGraph& g, const Objective& o, const SolveResult& result);

enum class LiftConvention {
    /// The family holds exactly the vertex set of the original arena.
    PaperExact,
    /// Every subset of the original vertices that meets the target set.
    MeetsR,
};

std::string to_string(LiftConvention c);

struct LiftedObjective
{
    objective::Muller objective;
    LiftConvention convention;
};

/// Muller objective on the expanded arena standing in for "reach r" on the
/// original one. Vertices are matched by id and name.
LiftedObjective lift_objective(const GameGraph& g, const GameGraph& expanded, const VertexSet& r,
                               LiftConvention convention);

/// Arena with every owner swapped.
GameGraph swap_owners(GameGraph g);

} // namespace omega
