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

#include "omega/classifier.hpp"
#include "omega/error.hpp"
#include "omega/fixtures.hpp"
#include "omega/oracle/generators.hpp"
#include "omega/oracle/oracle.hpp"

using namespace omega;

namespace {

const Alphabet ab = Alphabet::of_chars("ab");

/// Start with a and never see b, or start with b and see a later.
DetOmegaAutomaton
delta2_example()
{
    auto a = DetOmegaAutomaton::with_states(ab, 5, Muller{{{1}, {4}}});
    a.set(0, 0, 1);
    a.set(0, 1, 3);
    a.set(1, 0, 1);
    a.set(1, 1, 2);
    a.set(2, 0, 2);
    a.set(2, 1, 2);
    a.set(3, 0, 4);
    a.set(3, 1, 3);
    a.set(4, 0, 4);
    a.set(4, 1, 4);
    return validate(std::move(a));
}

/// Last-letter automaton over {a,b,c}: accept when only a, or all three
/// letters, recur.
DetOmegaAutomaton
delta3_example()
{
    auto a = DetOmegaAutomaton::with_states(Alphabet::of_chars("abc"), 3, Muller{{{0}, {0, 1, 2}}});
    for (State q = 0; q < 3; ++q) {
        for (Letter l = 0; l < 3; ++l) a.set(q, l, l);
    }
    return validate(std::move(a));
}

/// Eventually an a (Reach) and never an a (Safety).
DetOmegaAutomaton
some_a(bool reach)
{
    auto a = DetOmegaAutomaton::with_states(ab, 2, reach ? Acceptance{Reach{{1}}} : Acceptance{Safety{{0}}});
    a.set(0, 0, 1);
    a.set(0, 1, 0);
    a.set(1, 0, 1);
    a.set(1, 1, 1);
    return validate(std::move(a));
}

BorelLabel
dual(BorelLabel l)
{
    switch (l) {
    case BorelLabel::OpenProper: return BorelLabel::ClosedProper;
    case BorelLabel::ClosedProper: return BorelLabel::OpenProper;
    case BorelLabel::Sigma2Proper: return BorelLabel::Pi2Proper;
    case BorelLabel::Pi2Proper: return BorelLabel::Sigma2Proper;
    default: return l;
    }
}

} // namespace

TEST_CASE("labels of the fixtures")
{
    CHECK(classify(fixtures::abc_open()).label == BorelLabel::Clopen);
    CHECK(classify(fixtures::abc_closed()).label == BorelLabel::Clopen);
    CHECK(classify(fixtures::ab_or_ba_open()).label == BorelLabel::Clopen);
    CHECK(classify(fixtures::alternating_prefix_open_set()).label == BorelLabel::Clopen);
    CHECK(classify(fixtures::inf_many_a()).label == BorelLabel::Pi2Proper);
    CHECK(classify(fixtures::fin_many_a()).label == BorelLabel::Sigma2Proper);
    CHECK(classify(fixtures::empty_language(ab)).label == BorelLabel::Clopen);
    CHECK(classify(fixtures::full_language(ab)).label == BorelLabel::Clopen);
    CHECK(classify(some_a(true)).label == BorelLabel::OpenProper);
    CHECK(classify(some_a(false)).label == BorelLabel::ClosedProper);
    CHECK(classify(delta2_example()).label == BorelLabel::Delta2Proper);
    CHECK(classify(delta3_example()).label == BorelLabel::Delta3Proper);
}

TEST_CASE("labels and memberships")
{
    for (auto l : kAllBorelLabels) {
        CHECK(label_of(memberships_of(l)) == l);
        CHECK(parse_borel_label(to_string(l)) == l);
        const auto m = memberships_of(l);
        CHECK((!m.open || m.sigma2));
        CHECK((!m.closed || m.pi2));
    }
    CHECK(to_string(BorelLabel::Sigma2Proper) == "SIGMA2_PROPER");
    CHECK_FALSE(parse_borel_label("OPEN").has_value());
}

TEST_CASE("completeness")
{
    CHECK(to_string(completeness_label(BorelLabel::Sigma2Proper)) == "SIGMA_COMPLETE(2)");
    CHECK(to_string(completeness_label(BorelLabel::Pi2Proper)) == "PI_COMPLETE(2)");
    CHECK(to_string(completeness_label(BorelLabel::OpenProper)) == "SIGMA_COMPLETE(1)");
    CHECK(to_string(completeness_label(BorelLabel::ClosedProper)) == "PI_COMPLETE(1)");
    for (auto l : {BorelLabel::Clopen, BorelLabel::Delta2Proper, BorelLabel::Delta3Proper}) {
        CHECK(to_string(completeness_label(l)) == "NOT_APPLICABLE");
    }
}

TEST_CASE("evidence")
{
    const auto inf = classify(fixtures::inf_many_a());
    REQUIRE(inf.evidence.sigma2_violation.has_value());
    CHECK_FALSE(inf.evidence.sigma2_violation->loop_accepting);
    CHECK(inf.evidence.sigma2_violation->superloop_accepting);
    REQUIRE(inf.evidence.open_counterexample.has_value());
    CHECK(accepts(fixtures::inf_many_a(), *inf.evidence.open_counterexample));
    REQUIRE(inf.evidence.closed_counterexample.has_value());
    CHECK_FALSE(accepts(fixtures::inf_many_a(), *inf.evidence.closed_counterexample));

    const auto open = classify(some_a(true));
    CHECK(open.evidence.latched);
    CHECK(open.evidence.closed_counterexample.has_value());
    CHECK_FALSE(open.evidence.open_counterexample.has_value());
}

TEST_CASE("classification agrees with the oracle and is dual under complement")
{
    oracle::Generator gen(31);
    for (int i = 0; i < 600; ++i) {
        const auto alphabet = Alphabet::of_chars(i % 3 ? "ab" : "abc");
        const auto a = gen.automaton(alphabet, gen.uniform(1, 4), oracle::kAllAcceptanceKinds[i % 6]);
        const auto c = classify(a);
        REQUIRE(c.memberships == oracle::memberships(a));
        CHECK((!c.memberships.open || c.memberships.sigma2));
        CHECK((!c.memberships.closed || c.memberships.pi2));
        const auto d = classify(complement(a));
        CHECK(d.label == dual(c.label));
        CHECK(d.memberships.open == c.memberships.closed);
        CHECK(d.memberships.sigma2 == c.memberships.pi2);
    }
}

TEST_CASE("clopen bases")
{
    const auto abc = Alphabet::of_chars("abc");
    auto basis = clopen_basis(fixtures::abc_open());
    REQUIRE(basis.size() == 1);
    CHECK(render(abc, basis[0]) == "abc");

    basis = clopen_basis(fixtures::ab_or_ba_open());
    REQUIRE(basis.size() == 2);
    CHECK(render(abc, basis[0]) == "ab");
    CHECK(render(abc, basis[1]) == "ba");

    basis = clopen_basis(fixtures::full_language(ab));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].empty());
    CHECK(clopen_basis(fixtures::empty_language(ab)).empty());
    CHECK_THROWS_AS(clopen_basis(fixtures::inf_many_a()), ValidationError);

    oracle::Generator gen(32);
    int seen = 0;
    for (int i = 0; i < 400; ++i) {
        const auto a = gen.automaton(ab, gen.uniform(1, 4), oracle::kAllAcceptanceKinds[i % 6]);
        if (classify(a).label != BorelLabel::Clopen) continue;
        ++seen;
        CHECK(equivalent(prefix_set_automaton(ab, clopen_basis(a)), a).equivalent);
    }
    CHECK(seen > 20);
}

TEST_CASE("guard on large components")
{
    Limits tight;
    tight.max_scc_states = 2;
    CHECK_THROWS_AS(classify(delta3_example(), tight), GuardExceeded);
}
