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

#include "omega/automaton.hpp"
#include "omega/error.hpp"
#include "omega/fixtures.hpp"
#include "omega/oracle/generators.hpp"
#include "omega/oracle/oracle.hpp"

using namespace omega;
using oracle::AcceptanceKind;

namespace {

const Alphabet ab = Alphabet::of_chars("ab");

/// Every canonical word with |u| <= 3 and |v| <= 3 over ab.
std::vector<UPWord>
small_words()
{
    std::vector<UPWord> out;
    for (std::size_t lu = 0; lu <= 3; ++lu) {
        for (std::size_t lv = 1; lv <= 3; ++lv) {
            for (std::uint32_t bits = 0; bits < (1u << (lu + lv)); ++bits) {
                FiniteWord u, v;
                for (std::size_t i = 0; i < lu + lv; ++i) (i < lu ? u : v).letters.push_back(bits >> i & 1);
                out.push_back(canonicalize(ab, u, v));
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("validation reports the missing transition")
{
    auto a = DetOmegaAutomaton::with_states(ab, 2, Buchi{{1}});
    a.set(0, 0, 1);
    a.set(0, 1, 0);
    a.set(1, 0, 1);
    try {
        (void)validate(a);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("state 1") != std::string::npos);
        CHECK(std::string(e.what()).find("symbol b") != std::string::npos);
    }
    a.set(1, 1, 5);
    CHECK_THROWS_AS(validate(a), ValidationError);
    a.set(1, 1, 0);
    a.acceptance = Buchi{{3}};
    CHECK_THROWS_AS(validate(a), ValidationError);
    a.acceptance = Parity{{0}};
    CHECK_THROWS_AS(validate(a), ValidationError);
    a.acceptance = Muller{{{1}, {0, 1}, {1}}};
    auto v = validate(a);
    CHECK(std::get<Muller>(v.acceptance).family.size() == 2);
}

TEST_CASE("membership of the fixtures")
{
    const auto inf = fixtures::inf_many_a();
    CHECK(accepts(inf, parse_up_word(ab, "(ab)^w")));
    CHECK_FALSE(accepts(inf, parse_up_word(ab, "aaa(b)^w")));
    const auto fin = fixtures::fin_many_a();
    CHECK(accepts(fin, parse_up_word(ab, "aaa(b)^w")));
    const auto abc = Alphabet::of_chars("abc");
    CHECK(accepts(fixtures::abc_open(), parse_up_word(abc, "abc(a)^w")));
    CHECK_FALSE(accepts(fixtures::abc_open(), parse_up_word(abc, "ab(a)^w")));
    CHECK(accepts(fixtures::abc_closed(), parse_up_word(abc, "ab(a)^w")));
    CHECK_THROWS_AS(accepts(inf, parse_up_word(abc, "(c)^w")), AlphabetMismatch);
}

TEST_CASE("loops and membership agree with the oracle")
{
    oracle::Generator gen(11);
    const auto words = small_words();
    for (int i = 0; i < 300; ++i) {
        const auto kind = oracle::kAllAcceptanceKinds[i % 6];
        const auto a = gen.automaton(ab, gen.uniform(1, 5), kind);
        std::vector<StateSet> mine;
        for (const auto& l : enumerate_loops(a)) mine.push_back(l.states);
        REQUIRE(mine == oracle::loops(a));
        for (std::size_t k = 0; k < words.size(); k += 7) {
            REQUIRE(accepts(a, words[k]) == oracle::accepts(a, words[k]));
        }
    }
}

TEST_CASE("normal form preserves the language")
{
    oracle::Generator gen(12);
    const auto words = small_words();
    for (int i = 0; i < 200; ++i) {
        const auto kind = oracle::kAllAcceptanceKinds[i % 6];
        const auto a = gen.automaton(ab, gen.uniform(1, 4), kind);
        const auto nf = to_muller_normal_form(a);
        CHECK(nf.latched == (kind == AcceptanceKind::Reach || kind == AcceptanceKind::Safety));
        for (const auto& e : nf.loop_table) CHECK(nf.accepting(e.states) == e.accepting);
        for (std::size_t k = 0; k < words.size(); k += 5) {
            REQUIRE(accepts(nf.automaton, words[k]) == accepts(a, words[k]));
        }
    }
}

TEST_CASE("complement and products")
{
    oracle::Generator gen(13);
    const auto words = small_words();
    for (int i = 0; i < 150; ++i) {
        const auto a = gen.automaton(ab, gen.uniform(1, 4), oracle::kAllAcceptanceKinds[i % 6]);
        const auto b = gen.automaton(ab, gen.uniform(1, 3), oracle::kAllAcceptanceKinds[(i / 6) % 6]);
        const auto c = complement(a);
        const auto both = product(a, b, ProductMode::And);
        const auto either = product(a, b, ProductMode::Or);
        const auto one = product(a, b, ProductMode::Xor);
        for (std::size_t k = 0; k < words.size(); k += 3) {
            const bool x = oracle::accepts(a, words[k]);
            const bool y = oracle::accepts(b, words[k]);
            REQUIRE(accepts(c, words[k]) == !x);
            REQUIRE(accepts(both, words[k]) == (x && y));
            REQUIRE(accepts(either, words[k]) == (x || y));
            REQUIRE(accepts(one, words[k]) == (x != y));
        }
    }
    CHECK_THROWS_AS(product(fixtures::inf_many_a(), fixtures::abc_open(), ProductMode::And), AlphabetMismatch);
}

TEST_CASE("emptiness witnesses")
{
    CHECK(is_empty(fixtures::empty_language(ab)).empty);
    auto full = is_empty(fixtures::full_language(ab));
    REQUIRE_FALSE(full.empty);
    CHECK(accepts(fixtures::full_language(ab), *full.witness));

    oracle::Generator gen(14);
    const auto words = small_words();
    for (int i = 0; i < 300; ++i) {
        const auto a = gen.automaton(ab, gen.uniform(1, 4), oracle::kAllAcceptanceKinds[i % 6]);
        const auto r = is_empty(a);
        if (!r.empty) {
            REQUIRE(r.witness.has_value());
            CHECK(oracle::accepts(a, *r.witness));
        }
        bool some = false;
        for (const auto& x : words) some = some || oracle::accepts(a, x);
        if (some) CHECK_FALSE(r.empty);
    }
}

TEST_CASE("equivalence")
{
    oracle::Generator gen(15);
    for (int i = 0; i < 100; ++i) {
        const auto a = gen.automaton(ab, gen.uniform(1, 4), oracle::kAllAcceptanceKinds[i % 6]);
        CHECK(equivalent(a, complement(complement(a))).equivalent);
        CHECK(equivalent(a, to_muller_normal_form(a).automaton).equivalent);
        const auto r = equivalent(a, complement(a));
        REQUIRE_FALSE(r.equivalent);
        REQUIRE(r.counterexample.has_value());
        CHECK(oracle::accepts(a, *r.counterexample) != oracle::accepts(complement(a), *r.counterexample));
    }
    CHECK_FALSE(equivalent(fixtures::inf_many_a(), fixtures::fin_many_a()).equivalent);
}

TEST_CASE("component guard")
{
    Limits tight;
    tight.max_scc_states = 1;
    CHECK_THROWS_AS(enumerate_loops(fixtures::inf_many_a(), tight), GuardExceeded);
    CHECK_NOTHROW(enumerate_loops(fixtures::abc_open(), tight));
}
