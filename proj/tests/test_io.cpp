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

#include <sstream>

#include "omega/automaton_io.hpp"
#include "omega/error.hpp"
#include "omega/fixtures.hpp"
#include "omega/game_io.hpp"
#include "omega/oracle/generators.hpp"

using namespace omega;

namespace {

std::string
fixture(const char* name)
{
    return std::string(OMEGA_FIXTURE_DIR) + "/" + name;
}

int
error_line(const std::string& text)
{
    try {
        (void)parse_automaton(text);
    } catch (const ParseError& e) {
        return static_cast<int>(e.line());
    }
    return -1;
}

} // namespace

TEST_CASE("automaton files round-trip")
{
    oracle::Generator gen(21);
    for (int i = 0; i < 200; ++i) {
        const auto alphabet = Alphabet::of_chars(i % 2 ? "ab" : "xyz");
        const auto a = gen.automaton(alphabet, gen.uniform(1, 5), oracle::kAllAcceptanceKinds[i % 6]);
        REQUIRE(parse_automaton(write_automaton(a)) == a);
    }
    const auto multi = validate([] {
        auto a = DetOmegaAutomaton::with_states(Alphabet::parse_csv("req,ack"), 1, Safety{{0}});
        a.set(0, 0, 0);
        a.set(0, 1, 0);
        return a;
    }());
    CHECK(parse_automaton(write_automaton(multi)) == multi);
}

TEST_CASE("shipped automaton fixtures match the built-in ones")
{
    CHECK(load_automaton(fixture("abc_open.aut")) == fixtures::abc_open());
    CHECK(load_automaton(fixture("abc_closed.aut")) == fixtures::abc_closed());
    CHECK(load_automaton(fixture("ab_or_ba_open.aut")) == fixtures::ab_or_ba_open());
    CHECK(load_automaton(fixture("ab_prefixes.aut")) == fixtures::alternating_prefix_open_set());
    CHECK(load_automaton(fixture("ab_prefixes_complement.aut")) == fixtures::alternating_prefix_closed_set());
    CHECK(load_automaton(fixture("inf_many_a.aut")) == fixtures::inf_many_a());
    CHECK(load_automaton(fixture("fin_many_a.aut")) == fixtures::fin_many_a());
    CHECK(load_automaton(fixture("empty.aut")) == fixtures::empty_language(Alphabet::of_chars("ab")));
    CHECK(load_automaton(fixture("full.aut")) == fixtures::full_language(Alphabet::of_chars("ab")));
}

TEST_CASE("automaton parse errors carry line numbers")
{
    const std::string head = "alphabet: a b\nstates: 1\nacceptance: buchi 0\n";
    CHECK(error_line(head + "trans: 0 a 0\ntrans: 0 a 0\ntrans: 0 b 0\n") == 5);
    CHECK(error_line(head + "trans: 0 c 0\n") == 4);
    CHECK(error_line(head + "colour: red\n") == 4);
    CHECK(error_line("alphabet: a\nalphabet: b\n") == 2);
    CHECK(error_line("alphabet: a\nstates: x\n") == 2);
    CHECK(error_line(head + "trans: 0 a\n") == 4);
    CHECK(error_line("alphabet: a\nstates: 1\nacceptance: parity 0:1 0:2\n") == 3);
    CHECK(error_line("alphabet: a\nstates: 1\nacceptance: rabin 0\n") == 3);
    CHECK_THROWS_AS(parse_automaton(head + "trans: 0 a 0\n"), ValidationError);
    CHECK_THROWS_AS(load_automaton(fixture("missing.aut")), Error);
    CHECK_NOTHROW(parse_automaton("# comment\n" + head + "trans: 0 a 0 # self loop\ntrans: 0 b 0\n"));
}

TEST_CASE("game files round-trip")
{
    oracle::Generator gen(22);
    for (int i = 0; i < 200; ++i) {
        auto g = gen.arena(gen.uniform(1, 6), 3);
        if (i % 3 == 0) g.initial = 0;
        if (i % 4 == 0) g.names.back() = "last";
        std::optional<Objective> o;
        switch (i % 5) {
        case 0: o = objective::Reach{gen.subset(g.size())}; break;
        case 1: o = gen.parity(g, 3); break;
        case 2: o = gen.muller(g); break;
        case 3: o = objective::CoBuchi{gen.subset(g.size())}; break;
        default: break;
        }
        const auto spec = parse_game(write_game(g, o));
        REQUIRE(spec.graph == g);
        REQUIRE(spec.objective == o);
    }
}

TEST_CASE("shipped game fixtures")
{
    const auto gm = load_game(fixture("gm.game"));
    CHECK(gm.graph == fixtures::reach_arena());
    CHECK(gm.objective == Objective{objective::Reach{{3}}});
    const auto gp = load_game(fixture("gm_prime.game"));
    auto expected = fixtures::expanded_reach_arena();
    CHECK(gp.graph == expected);
    CHECK(gp.objective == Objective{objective::Muller{{{0, 1, 2, 3}}}});
}

TEST_CASE("min-parity line format")
{
    const auto spec = parse_game("parity 3;\n10 2 0 11,12 \"left\";\n11 1 1 10;\n12 0 1 12;\n");
    REQUIRE(spec.graph.size() == 3);
    CHECK(spec.graph.name(0) == "left");
    CHECK(spec.graph.name(1) == "11");
    CHECK(spec.graph.succ[0] == VertexSet{1, 2});
    CHECK(spec.graph.owner[1] == Player::One);
    CHECK(std::get<objective::Parity>(*spec.objective).priority == std::vector<unsigned>{2, 1, 0});

    auto line_of = [](const std::string& text) {
        try {
            (void)parse_game(text);
        } catch (const ParseError& e) {
            return static_cast<int>(e.line());
        }
        return -1;
    };
    CHECK(line_of("0 1 0 1;\n1 1 2 0;\n") == 2);
    CHECK(line_of("0 1 0 7;\n") == 1);
    CHECK(line_of("0 1 0 0;\n\n0 1 0 0;\n") == 3);
    CHECK(line_of("0 1 0 0\n") == 1);
}

TEST_CASE("game parse errors")
{
    auto line_of = [](const std::string& text) {
        try {
            (void)parse_game(text);
        } catch (const ParseError& e) {
            return static_cast<int>(e.line());
        }
        return -1;
    };
    CHECK(line_of("vertex 0 owner 0 succ 0\nvertex 0 owner 1 succ 0\n") == 2);
    CHECK(line_of("vertex 0 owner 2 succ 0\n") == 1);
    CHECK(line_of("vertex 0 owner 0\n") == 1);
    CHECK(line_of("vertex 0 owner 0 succ 0\nobjective reach 0\nobjective reach 0\n") == 3);
    CHECK(line_of("vertex 0 owner 0 succ 0\nvertex 2 owner 0 succ 0\n") == 2);
    CHECK(line_of("vertex 0 owner 0 succ 0\nobjective parity 0:1 1:1\n") == 2);
    CHECK(line_of("vertex 0 owner 0 succ 3\n") == 1);
    CHECK_THROWS_AS(parse_game("vertex 0 owner 0 succ 0\nobjective reach 4\n"), ValidationError);
}
