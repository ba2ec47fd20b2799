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
#include "omega/expansion.hpp"
#include "omega/fixtures.hpp"
#include "omega/oracle/generators.hpp"
#include "omega/oracle/oracle.hpp"

using namespace omega;

namespace {

ClassRef
cls(Side s, unsigned n)
{
    return {s, Level::finite(n)};
}

std::vector<std::string>
names(const std::vector<ClassRef>& cs)
{
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(c.name());
    return out;
}

using Names = std::vector<std::string>;

} // namespace

TEST_CASE("levels")
{
    CHECK(Level::parse("3") == Level::finite(3));
    CHECK(Level::parse("omega") == Level::omega_plus(0));
    CHECK(Level::parse("w") == Level::omega_plus(0));
    CHECK(Level::parse("omega+2") == Level::omega_plus(2));
    CHECK(Level::parse("omega1") == Level::omega1());
    CHECK_THROWS_AS(Level::parse("0"), ValidationError);
    CHECK_THROWS_AS(Level::parse("omega+"), ValidationError);
    CHECK_THROWS_AS(Level::parse("seven"), ValidationError);
    CHECK(Level::finite(7) < Level::omega_plus(0));
    CHECK(Level::omega_plus(3) < Level::omega1());
    CHECK(Level::finite(2).next() == Level::finite(3));
    CHECK(Level::omega_plus(0).name() == "Omega");
    CHECK(Level::omega_plus(1).name() == "OmegaPlus1");
    CHECK(ClassRef{Side::Sigma, Level::omega1()}.name() == "SigmaOmega1");
    CHECK(ClassRef{Side::Pi, Level::omega_plus(1)}.name() == "PiOmegaPlus1");
    CHECK(parse_side("pi") == Side::Pi);
    CHECK_FALSE(parse_side("Gamma").has_value());
}

TEST_CASE("jump prediction")
{
    CHECK(names(predict_jump(cls(Side::Sigma, 1))) == Names{"Sigma2"});
    CHECK(names(predict_jump(cls(Side::Pi, 1))) == Names{"Pi1"});
    CHECK(names(predict_jump(cls(Side::Pi, 2))) == Names{"Pi3"});
    CHECK(names(predict_jump(cls(Side::Sigma, 2))) == Names{"Sigma2"});
    CHECK(names(predict_jump(cls(Side::Sigma, 3))) == Names{"Sigma4"});
    CHECK(names(predict_jump(cls(Side::Pi, 3))) == Names{"Pi3"});
    CHECK(names(predict_jump({Side::Sigma, Level::omega_plus(0)})) == Names{"SigmaOmega"});
    CHECK(names(predict_jump({Side::Pi, Level::omega1()})) == Names{"PiOmega1"});
    CHECK(names(predict_jump(cls(Side::Delta, 1))) == Names{"Pi1", "Sigma2"});
    CHECK(names(predict_jump(cls(Side::Delta, 2))) == Names{"Sigma2", "Pi3"});
}

TEST_CASE("containment lattice")
{
    const auto S = Side::Sigma, P = Side::Pi, D = Side::Delta;
    CHECK_FALSE(class_leq(BorelLabel::Sigma2Proper, cls(P, 2)));
    CHECK(class_leq(BorelLabel::Delta2Proper, cls(S, 2)));
    CHECK(class_leq(BorelLabel::Clopen, cls(P, 1)));
    CHECK(class_leq(BorelLabel::Clopen, cls(D, 1)));
    CHECK_FALSE(class_leq(BorelLabel::OpenProper, cls(P, 1)));
    CHECK(class_leq(BorelLabel::OpenProper, cls(S, 1)));
    CHECK(class_leq(BorelLabel::OpenProper, cls(P, 2)));
    CHECK(class_leq(BorelLabel::ClosedProper, cls(D, 2)));
    CHECK_FALSE(class_leq(BorelLabel::Delta2Proper, cls(S, 1)));
    CHECK(class_leq(BorelLabel::Sigma2Proper, cls(D, 3)));
    CHECK_FALSE(class_leq(BorelLabel::Pi2Proper, cls(S, 2)));
    CHECK_FALSE(class_leq(BorelLabel::Delta3Proper, cls(S, 2)));
    CHECK(class_leq(BorelLabel::Delta3Proper, cls(D, 3)));
    CHECK(class_leq(BorelLabel::Delta3Proper, {S, Level::omega_plus(0)}));
    for (auto l : kAllBorelLabels) {
        for (const auto& c : tightest_classes(l)) CHECK(class_leq(l, c));
    }
    CHECK(names(tightest_classes(BorelLabel::Clopen)) == Names{"Delta1"});
    CHECK(names(tightest_classes(BorelLabel::Delta3Proper)) == Names{"Delta3"});
}

TEST_CASE("embedding keeps old words and rejects new letters")
{
    const auto ab = Alphabet::of_chars("ab");
    const auto big = Alphabet::of_chars("abc");
    oracle::Generator gen(41);
    for (int i = 0; i < 200; ++i) {
        const auto a = gen.automaton(ab, gen.uniform(1, 4), oracle::kAllAcceptanceKinds[i % 6]);
        const auto e = embed(a, big);
        CHECK(e.alphabet == big);
        for (int k = 0; k < 5; ++k) {
            const auto w = gen.word(ab, 3, 3);
            CHECK(accepts(e, w.over(big)) == oracle::accepts(a, w));
        }
        CHECK_FALSE(accepts(e, parse_up_word(big, "ab(c)^w")));
        CHECK_FALSE(accepts(e, parse_up_word(big, "c(a)^w")));
    }
    CHECK_THROWS_AS(embed(fixtures::abc_open(), ab), AlphabetMismatch);
}

TEST_CASE("jump reports")
{
    const auto ab = Alphabet::of_chars("ab");
    const auto closed = jump_report(fixtures::alternating_prefix_closed_set(), Alphabet::of_chars("abc"));
    CHECK(closed.consistent);
    CHECK(class_leq(closed.after.label, cls(Side::Pi, 1)));
    CHECK_FALSE(closed.paper_claim_note.has_value());

    // identity expansion changes nothing
    for (const auto& a : {fixtures::inf_many_a(), fixtures::fin_many_a(), fixtures::alternating_prefix_open_set()}) {
        const auto r = jump_report(a, ab);
        CHECK(r.after.label == r.before.label);
        CHECK(r.consistent);
        CHECK_FALSE(r.paper_claim_note.has_value());
    }

    const auto r = jump_report(fixtures::alternating_prefix_open_set(), Alphabet::of_chars("abc"));
    CHECK(r.before.label == BorelLabel::Clopen);
    CHECK(r.consistent);
    REQUIRE(r.paper_claim_note.has_value());
    CHECK(r.paper_claim_note->find("complete for Sigma2") != std::string::npos);
    CHECK(r.claimed_label == BorelLabel::Sigma2Proper);
    // the embedded set is closed: pinned by the brute-force oracle
    CHECK(r.after.label == oracle::classify(embed(fixtures::alternating_prefix_open_set(), Alphabet::of_chars("abc"))));
    CHECK(r.after.label == BorelLabel::ClosedProper);
    CHECK(r.claim_disagreement);
}

TEST_CASE("jump table")
{
    const auto t = hierarchy_table(4);
    REQUIRE(t.columns.size() == 7);
    REQUIRE(t.entries.size() == 14);
    Names jumps, stays;
    for (const auto& e : t.entries) {
        if (e.stays) stays.push_back(e.from.name());
        else if (e.in_table) jumps.push_back(e.from.name() + ">" + e.to.name());
    }
    CHECK(jumps == Names{"Sigma1>Sigma2", "Sigma3>Sigma4", "Pi2>Pi3"});
    CHECK(stays == Names{"Sigma2", "Sigma4", "SigmaOmega", "SigmaOmegaPlus1", "SigmaOmega1", "Pi1", "Pi3", "PiOmega",
                         "PiOmegaPlus1", "PiOmega1"});
    CHECK_THROWS_AS(hierarchy_table(0), ValidationError);
}
