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

#include <set>
#include <stdexcept>

#include "omega/error.hpp"
#include "omega/words.hpp"

using namespace omega;

namespace {

const Alphabet ab = Alphabet::of_chars("ab");

FiniteWord
w(const char* s)
{
    return parse_word(ab, s);
}

/// All words over {a,b} of the given length.
std::vector<FiniteWord>
words_of_length(std::size_t n)
{
    std::vector<FiniteWord> out;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        FiniteWord f;
        for (std::size_t i = 0; i < n; ++i) f.letters.push_back(bits >> i & 1);
        out.push_back(f);
    }
    return out;
}

Letter
letter_at(const FiniteWord& u, const FiniteWord& v, std::size_t i)
{
    return i < u.size() ? u.letters[i] : v.letters[(i - u.size()) % v.size()];
}

} // namespace

TEST_CASE("alphabet tokens")
{
    CHECK(Alphabet::parse_csv("a,b,c") == Alphabet::of_chars("abc"));
    CHECK(Alphabet::parse_csv("req,ack").symbol(1) == "ack");
    CHECK_THROWS_AS(Alphabet::of_chars("aa"), ValidationError);
    CHECK_THROWS_AS(Alphabet::parse_csv("a,,b"), ValidationError);
    CHECK(ab.is_subset_of(Alphabet::of_chars("cba")));
    CHECK_FALSE(Alphabet::of_chars("abc").is_subset_of(ab));
    CHECK(ab.to_string() == "a,b");
}

TEST_CASE("canonical form")
{
    // ab.(ba)^w = abbaba... has nothing to absorb
    auto x = canonicalize(ab, w("ab"), w("ba"));
    CHECK(x.prefix() == w("ab"));
    CHECK(x.period() == w("ba"));
    CHECK(x.to_string() == "ab(ba)^w");

    auto y = canonicalize(ab, w("ab"), w("abab"));
    CHECK(y.prefix().empty());
    CHECK(y.period() == w("ab"));

    CHECK(canonicalize(ab, w("a"), w("aa")).to_string() == "(a)^w");
    CHECK(canonicalize(ab, w("ba"), w("abab")).to_string() == "ba(ab)^w");
    CHECK(canonicalize(ab, w("bab"), w("ab")).to_string() == "(ba)^w");
    CHECK(canonicalize(ab, w("bb"), w("a")).to_string() == "bb(a)^w");
    CHECK_THROWS_AS(canonicalize(ab, w("a"), FiniteWord{}), ValidationError);
    CHECK_THROWS_AS(canonicalize(ab, FiniteWord{{0, 7}}, w("a")), ValidationError);
}

TEST_CASE("canonical forms agree with letterwise equality")
{
    // brute force: two (u, v) pairs denote the same word iff they agree on
    // a prefix long enough to cover both periods twice
    std::vector<std::pair<FiniteWord, FiniteWord>> reps;
    for (std::size_t lu = 0; lu <= 3; ++lu) {
        for (std::size_t lv = 1; lv <= 3; ++lv) {
            for (const auto& u : words_of_length(lu)) {
                for (const auto& v : words_of_length(lv)) reps.emplace_back(u, v);
            }
        }
    }
    for (const auto& [u1, v1] : reps) {
        const auto c1 = canonicalize(ab, u1, v1);
        for (std::size_t i = 0; i < 24; ++i) REQUIRE(c1.at(i) == letter_at(u1, v1, i));
        // primitive period
        const auto p = c1.period().size();
        for (std::size_t d = 1; d < p; ++d) {
            if (p % d != 0) continue;
            bool repeats = true;
            for (std::size_t i = d; i < p; ++i) repeats = repeats && c1.period().letters[i] == c1.period().letters[i - d];
            CHECK_FALSE(repeats);
        }
        for (const auto& [u2, v2] : reps) {
            bool same = true;
            for (std::size_t i = 0; i < 24 && same; ++i) same = letter_at(u1, v1, i) == letter_at(u2, v2, i);
            const auto c2 = canonicalize(ab, u2, v2);
            CHECK((c1 == c2) == same);
            CHECK(up_equal(c1, c2) == same);
        }
    }
}

TEST_CASE("literal syntax")
{
    auto x = parse_up_word(ab, "ab(ab)^w");
    CHECK(x.to_string() == "(ab)^w");
    CHECK(parse_up_word(ab, "(b)^w").to_string() == "(b)^w");
    CHECK(parse_up_word(ab, x.to_string()) == x);
    CHECK_THROWS(parse_up_word(ab, "ab()^w"));
    CHECK_THROWS(parse_up_word(ab, "ac(b)^w"));
    CHECK_THROWS(parse_up_word(ab, "ab"));
}

TEST_CASE("re-indexing over a superset alphabet")
{
    const auto big = Alphabet::of_chars("cab");
    auto x = parse_up_word(ab, "b(a)^w").over(big);
    CHECK(x.alphabet() == big);
    CHECK(x.to_string() == "b(a)^w");
    CHECK_THROWS_AS(parse_up_word(big, "(c)^w").over(ab), AlphabetMismatch);
}

TEST_CASE("distance")
{
    auto d = word_distance(parse_up_word(ab, "ab(a)^w"), parse_up_word(ab, "ab(b)^w"));
    CHECK(d.first_diff_index == 2u);
    CHECK(d.distance.to_string() == "1/4");
    CHECK(d.distance.denominator() == 4u);

    auto same = word_distance(parse_up_word(ab, "(ab)^w"), parse_up_word(ab, "a(ba)^w"));
    CHECK_FALSE(same.first_diff_index.has_value());
    CHECK(same.distance.is_zero());
    CHECK(same.distance.to_string() == "0");

    CHECK(word_distance(parse_up_word(ab, "(a)^w"), parse_up_word(ab, "(b)^w")).distance.to_string() == "1");

    // difference past 64 letters keeps an exact exponent
    std::string long_prefix(70, 'a');
    auto far = word_distance(parse_up_word(ab, long_prefix + "(b)^w"), parse_up_word(ab, "(a)^w"));
    CHECK(far.distance.exponent() == 70u);
    CHECK(far.distance.to_string() == "1/2^70");
    CHECK_THROWS_AS((void)far.distance.denominator(), std::overflow_error);

    CHECK(DyadicDistance::inverse_power_of_two(1) < DyadicDistance::inverse_power_of_two(0));
    CHECK(DyadicDistance::zero() < DyadicDistance::inverse_power_of_two(90));
    CHECK_THROWS_AS(word_distance(parse_up_word(ab, "(a)^w"), parse_up_word(Alphabet::of_chars("abc"), "(a)^w")),
                    AlphabetMismatch);
}
