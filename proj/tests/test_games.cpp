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


#include <doctest.h>

#include "omega/error.hpp"
#include "omega/fixtures.hpp"
#include "omega/game.hpp"
#include "omega/oracle/generators.hpp"
#include "omega/oracle/oracle.hpp"

using namespace omega;

namespace {

/// Player 0 at v0 chooses between the target v1 and a trap v2.
GameGraph
choice_arena()
{
    GameGraph g;
    g.add_vertex(Player::Zero, "v0");
    g.add_vertex(Player::One, "v1");
    g.add_vertex(Player::One, "v2");
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 1);
    g.add_edge(2, 2);
    return validate(std::move(g));
}

} // namespace

TEST_CASE("arena validation")
{
    GameGraph g;
    g.add_vertex(Player::Zero);
    CHECK_THROWS_AS(validate(g), ValidationError);
    g.add_edge(0, 3);
    CHECK_THROWS_AS(validate(g), ValidationError);
    g.succ[0] = {0, 0};
    CHECK(validate(g).succ[0] == VertexSet{0});
    CHECK_THROWS_AS(validate(validate(g), objective::Reach{{2}}), ValidationError);
    CHECK(swap_owners(swap_owners(fixtures::reach_arena())) == fixtures::reach_arena());
}

TEST_CASE("attractor on the reachability arena")
{
    const auto g = fixtures::reach_arena();
    const auto a = attractor(g, Player::Zero, {3});
    CHECK(a.region == VertexSet{0, 1, 2, 3});
    CHECK(a.rank == std::vector<unsigned>{2, 1, 1, 0});
    CHECK((a.strategy[0] == 1 || a.strategy[0] == 2));
    const auto b = attractor(g, Player::One, {1});
    CHECK(b.region == VertexSet{1});
}

TEST_CASE("reachability arena: player 0 wins with either move")
{
    const auto g = fixtures::reach_arena();
    const Objective o = objective::Reach{{3}};
    const auto r = solve(g, o);
    CHECK(r.win0 == VertexSet{0, 1, 2, 3});
    CHECK(r.win1.empty());
    const auto& s = std::get<PositionalStrategy>(r.strategy0);
    CHECK((s.move[0] == 1 || s.move[0] == 2));
    CHECK(verify_strategy(g, o, r));
    // the other choice wins too
    auto other = r;
    std::get<PositionalStrategy>(other.strategy0).move[0] = s.move[0] == 1 ? 2 : 1;
    CHECK(verify_strategy(g, o, other));
}

TEST_CASE("expanded arena: the literal lift is lost, the meets-r lift is won")
{
    const auto g = fixtures::reach_arena();
    const auto gp = fixtures::expanded_reach_arena();

    const auto paper = lift_objective(g, gp, {3}, LiftConvention::PaperExact);
    CHECK(paper.objective.family == std::vector<VertexSet>{{0, 1, 2, 3}});
    const auto r = solve(gp, paper.objective);
    CHECK(r.wins(Player::One, 0));
    CHECK(std::holds_alternative<LARStrategy>(r.strategy1));
    CHECK(verify_strategy(gp, paper.objective, r));
    CHECK(oracle::muller_winners(gp, paper.objective.family).win1 == r.win1);

    const auto meets = lift_objective(g, gp, {3}, LiftConvention::MeetsR);
    CHECK(meets.objective.family.size() == 8);
    const auto m = solve(gp, meets.objective);
    CHECK(m.win0 == VertexSet{0, 1, 2, 3, 4});
    CHECK(verify_strategy(gp, meets.objective, m));

    const auto none = lift_objective(g, gp, {}, LiftConvention::MeetsR);
    CHECK(none.objective.family.empty());
    CHECK(solve(gp, none.objective).win1 == VertexSet{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(lift_objective(g, gp, {7}, LiftConvention::MeetsR), ValidationError);
    CHECK_THROWS_AS(lift_objective(gp, g, {3}, LiftConvention::MeetsR), ValidationError);
    CHECK_THROWS_AS(lift_objective(g, swap_owners(gp), {3}, LiftConvention::MeetsR), ValidationError);
}

TEST_CASE("memory strategies can be played")
{
    const auto gp = fixtures::expanded_reach_arena();
    const objective::Muller o{{{0, 1, 2, 3}}};
    const auto r = solve(gp, o);
    const auto& s1 = std::get<LARStrategy>(r.strategy1);
    const auto& s0 = std::get<LARStrategy>(r.strategy0);
    // player 0 always goes to v1 if allowed to; player 1 follows its strategy
    Vertex v = 0;
    auto mem = s1.initial_memory(v);
    std::vector<int> visits(gp.size(), 0);
    for (int step = 0; step < 100; ++step) {
        const Vertex next = gp.owner[v] == Player::Zero ? 1 : s1.next_move(mem);
        REQUIRE(next != kNoVertex);
        REQUIRE(std::binary_search(gp.succ[v].begin(), gp.succ[v].end(), next));
        mem = s1.update(mem, next);
        v = next;
        if (step >= 50) ++visits[v];
    }
    CHECK(visits[4] > 0);  // player 1 keeps taking the detour
    CHECK(s0.memory_size() == s1.memory_size());
    CHECK_THROWS_AS(s1.update(s1.initial_memory(0), 3), ValidationError);
}

TEST_CASE("verification rejects losing or broken strategies")
{
    const auto g = choice_arena();
    const Objective o = objective::Reach{{1}};
    auto r = solve(g, o);
    CHECK(r.win0 == VertexSet{0, 1});
    REQUIRE(verify_strategy(g, o, r));

    auto losing = r;
    std::get<PositionalStrategy>(losing.strategy0).move[0] = 2;
    CHECK_FALSE(verify_strategy(g, o, losing));

    auto overlap = r;
    overlap.win1.push_back(0);
    CHECK_FALSE(verify_strategy(g, o, overlap));

    auto missing = r;
    std::get<PositionalStrategy>(missing.strategy0).move[0] = kNoVertex;
    CHECK_THROWS_AS(verify_strategy(g, o, missing), ValidationError);

    // a wrong region claim
    auto wrong = r;
    wrong.win0 = {0, 1, 2};
    wrong.win1 = {};
    CHECK_FALSE(verify_strategy(g, o, wrong));
}

TEST_CASE("solvers agree with brute force on random games")
{
    oracle::Generator gen(51);
    for (int i = 0; i < 600; ++i) {
        const auto g = gen.arena(gen.uniform(1, 5), 3);
        Objective o;
        switch (i % 6) {
        case 0: o = objective::Reach{gen.subset(g.size())}; break;
        case 1: o = objective::Safety{gen.subset(g.size())}; break;
        case 2: o = objective::Buchi{gen.subset(g.size())}; break;
        case 3: o = objective::CoBuchi{gen.subset(g.size())}; break;
        case 4: o = gen.parity(g, 4); break;
        default: o = gen.muller(g); break;
        }
        const auto r = solve(g, o);
        const auto w = oracle::winners(g, o);
        REQUIRE(r.win0 == w.win0);
        REQUIRE(r.win1 == w.win1);
        REQUIRE(verify_strategy(g, o, r));
    }
}

TEST_CASE("Muller games: LAR guard and parity priorities")
{
    GameGraph big;
    for (int v = 0; v < 9; ++v) big.add_vertex(Player::Zero);
    for (Vertex v = 0; v < 9; ++v) big.add_edge(v, (v + 1) % 9);
    big = validate(std::move(big));
    CHECK_THROWS_AS(solve(big, objective::Muller{{big.all_vertices()}}), GuardExceeded);
    Limits roomy;
    roomy.max_lar_vertices = 9;
    CHECK(solve(big, objective::Muller{{big.all_vertices()}}, roomy).win0.size() == 9);

    const auto g = fixtures::expanded_reach_arena();
    const auto lar = lar_reduction(g, objective::Muller{{{0, 1, 2, 3}}});
    for (Vertex s = 0; s < lar.graph.size(); ++s) {
        CHECK(lar.record[s].size() == g.size());
        CHECK(lar.projection[s] == lar.record[s].front());
        CHECK(lar.priority[s] <= 2 * g.size());
    }
}
