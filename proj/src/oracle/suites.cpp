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


#include "omega/oracle/suites.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "omega/classifier.hpp"
#include "omega/error.hpp"
#include "omega/expansion.hpp"
#include "omega/fixtures.hpp"
#include "omega/game.hpp"
#include "omega/oracle/generators.hpp"
#include "omega/oracle/oracle.hpp"

namespace omega::oracle {

void
SuiteResult::fail(std::string what)
{
    ++failures;
    if (failure_examples.size() < 5) failure_examples.push_back(std::move(what));
}

std::string
format(const SuiteResult& r)
{
    std::ostringstream out;
    out << (r.passed() ? "PASS " : "FAIL ") << r.criterion << ' ' << r.name << " (" << r.checked << " checks, "
        << r.failures << " failures, " << r.required << " required)";
    for (const auto& n : r.notes) out << "\n    " << n;
    for (const auto& f : r.failure_examples) out << "\n    failure: " << f;
    return out.str();
}

namespace {

std::string
label_counts(const std::map<BorelLabel, std::size_t>& counts)
{
    std::string out;
    for (auto l : kAllBorelLabels) {
        auto it = counts.find(l);
        out += (out.empty() ? "" : " ") + to_string(l) + "=" + std::to_string(it == counts.end() ? 0 : it->second);
    }
    return out;
}

std::string
describe_automaton(const DetOmegaAutomaton& a)
{
    std::ostringstream out;
    out << a.num_states << " states, " << acceptance_name(a.acceptance) << ", delta";
    for (auto t : a.delta) out << ' ' << t;
    return out.str();
}

std::string
describe_game(const GameGraph& g, const Objective& o)
{
    std::ostringstream out;
    for (Vertex v = 0; v < g.size(); ++v) {
        out << v << (g.owner[v] == Player::Zero ? "(0)->" : "(1)->") << to_string(g.succ[v]) << ' ';
    }
    out << describe(o);
    return out.str();
}

Alphabet
extend(const Alphabet& a, std::size_t extra)
{
    auto symbols = a.symbols();
    const char* fresh[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < extra; ++i) symbols.push_back(fresh[i]);
    return Alphabet(std::move(symbols));
}

AcceptanceKind
pick_kind(Generator& gen)
{
    return kAllAcceptanceKinds[gen.uniform(0, 5)];
}

} // namespace

// ---------------------------------------------------------------------------

SuiteResult
table_structure()
{
    SuiteResult r(1, "hierarchy-table", 1);
    const auto t = hierarchy_table(4);
    std::set<std::pair<std::string, std::string>> arrows;
    std::set<std::string> loops;
    for (const auto& e : t.entries) {
        if (e.stays) loops.insert(e.from.name());
        else if (e.in_table) arrows.insert({e.from.name(), e.to.name()});
    }
    const std::set<std::pair<std::string, std::string>> want_arrows{
        {"Sigma1", "Sigma2"}, {"Sigma3", "Sigma4"}, {"Pi2", "Pi3"}};
    const std::set<std::string> want_loops{"Sigma2", "Sigma4", "SigmaOmega", "SigmaOmegaPlus1", "SigmaOmega1",
                                           "Pi1",    "Pi3",    "PiOmega",    "PiOmegaPlus1",    "PiOmega1"};
    ++r.checked;
    if (arrows != want_arrows) r.fail("jump arrows differ");
    if (loops != want_loops) r.fail("self-loops differ");
    return r;
}

SuiteResult
reach_example()
{
    SuiteResult r(2, "reach-to-muller-example", 2);
    const auto g = fixtures::reach_arena();
    const Objective reach = objective::Reach{{3}};
    const auto s = solve(g, reach);
    ++r.checked;
    if (!s.wins(Player::Zero, 0)) r.fail("v0 not won by player 0 in the reachability game");
    if (!std::holds_alternative<PositionalStrategy>(s.strategy0)) r.fail("reachability strategy is not positional");
    if (!verify_strategy(g, reach, s)) r.fail("reachability strategy does not verify");

    const auto gp = fixtures::expanded_reach_arena();
    const Objective muller = lift_objective(g, gp, {3}, LiftConvention::PaperExact).objective;
    const auto t = solve(gp, muller);
    ++r.checked;
    if (!t.wins(Player::One, 0)) r.fail("v0 not won by player 1 in the expanded Muller game");
    if (!verify_strategy(gp, muller, t)) r.fail("Muller strategies do not verify");
    if (oracle::winners(gp, muller).win1 != t.win1) r.fail("Muller regions differ from the oracle");
    return r;
}

SuiteResult
lemma1_upper_bounds(const SuiteOptions& o)
{
    SuiteResult r(3, "open-closed-upper-bounds", 400);
    Generator gen(o.seed ^ 3);
    std::size_t open_seen = 0, closed_seen = 0, attempts = 0;
    std::map<BorelLabel, std::size_t> after_counts;
    while ((open_seen < 250 || closed_seen < 250) && attempts++ < 20000) {
        const auto alphabet = Alphabet::of_chars(gen.coin() ? "ab" : "abc");
        const auto a = gen.automaton(alphabet, gen.uniform(1, 5), pick_kind(gen));
        const auto before = classify(a, o.limits).label;
        const bool open = before == BorelLabel::Clopen || before == BorelLabel::OpenProper;
        const bool closed = before == BorelLabel::Clopen || before == BorelLabel::ClosedProper;
        if (!open && !closed) continue;
        if ((!open || open_seen >= 250) && (!closed || closed_seen >= 250)) continue;
        const auto embedded = embed(a, extend(alphabet, gen.uniform(1, 2)), o.limits);
        const auto after = classify(embedded, o.limits).label;
        ++after_counts[after];
        if (open) {
            ++open_seen;
            ++r.checked;
            if (!class_leq(after, {Side::Sigma, Level::finite(2)})) r.fail("open set left Sigma2: " + describe_automaton(a));
        }
        if (closed) {
            ++closed_seen;
            ++r.checked;
            if (!class_leq(after, {Side::Pi, Level::finite(1)})) r.fail("closed set left Pi1: " + describe_automaton(a));
        }
        if (oracle::classify(embedded) != after) r.fail("embedded label differs from the oracle: " + describe_automaton(a));
    }
    if (open_seen < 200 || closed_seen < 200) r.fail("too few open or closed samples");
    r.notes.push_back("open or clopen: " + std::to_string(open_seen) + ", closed or clopen: " + std::to_string(closed_seen));
    r.notes.push_back("after labels: " + label_counts(after_counts));
    return r;
}

SuiteResult
jump_consistency(const SuiteOptions& o)
{
    SuiteResult r(4, "jump-consistency", 500);
    Generator gen(o.seed ^ 4);
    std::map<BorelLabel, std::size_t> before_counts;
    std::size_t by_one = 0, by_two = 0, attempts = 0;
    auto covered = [&] {
        return std::all_of(std::begin(kAllBorelLabels), std::end(kAllBorelLabels),
                           [&](BorelLabel l) { return before_counts[l] >= 30; });
    };
    while ((r.checked < 700 || !covered()) && attempts++ < 50000) {
        const auto alphabet = Alphabet::of_chars(gen.coin() ? "ab" : "abc");
        const auto a = gen.automaton(alphabet, gen.uniform(1, 5), pick_kind(gen));
        const auto extra = gen.uniform(1, 2);
        const auto rep = jump_report(a, extend(alphabet, extra), o.limits);
        // keep the sample balanced once a label is well represented
        if (before_counts[rep.before.label] >= 200 && r.checked >= 700) continue;
        ++before_counts[rep.before.label];
        ++(extra == 1 ? by_one : by_two);
        ++r.checked;
        if (!rep.consistent) r.fail("inconsistent jump: " + describe_automaton(a));
        if (oracle::classify(a) != rep.before.label) r.fail("before label differs from the oracle: " + describe_automaton(a));
    }
    if (!covered()) r.fail("not every label was generated");
    r.notes.push_back("before labels: " + label_counts(before_counts));
    r.notes.push_back("expansions by one letter: " + std::to_string(by_one) + ", by two: " + std::to_string(by_two));
    return r;
}

SuiteResult
classifier_agreement(const SuiteOptions& o)
{
    SuiteResult r(5, "classifier-oracle", 1000);
    const auto ab = Alphabet::of_chars("ab");
    std::size_t exhaustive = 0;
    auto check = [&](const DetOmegaAutomaton& a) {
        ++r.checked;
        const auto c = classify(a, o.limits);
        const auto m = oracle::memberships(a);
        if (c.memberships != m || c.label != oracle::classify(a)) r.fail("classifier and oracle disagree: " + describe_automaton(a));
    };
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t cells = n * 2;
        std::size_t total = 1;
        for (std::size_t i = 0; i < cells; ++i) total *= n;
        for (std::size_t code = 0; code < total; ++code) {
            auto a = DetOmegaAutomaton::with_states(ab, n);
            auto c = code;
            for (std::size_t i = 0; i < cells; ++i, c /= n) a.delta[i] = static_cast<State>(c % n);
            a = validate(std::move(a));
            const auto ls = oracle::all_loops(a);
            for (std::uint32_t bits = 0; bits < (1u << ls.size()); ++bits) {
                Muller m;
                for (std::size_t i = 0; i < ls.size(); ++i) {
                    if (bits >> i & 1) m.family.push_back(ls[i]);
                }
                a.acceptance = m;
                check(a);
                ++exhaustive;
            }
        }
    }
    Generator gen(o.seed ^ 5);
    std::size_t random = 0;
    for (; random < 1200; ++random) {
        const auto alphabet = Alphabet::of_chars(gen.coin(0.75) ? "ab" : "abc");
        check(gen.automaton(alphabet, gen.uniform(4, 5), AcceptanceKind::Muller));
    }
    r.notes.push_back("exhaustive instances (initial state 0, families over all loops): " + std::to_string(exhaustive) + ", random 4-5 state instances: "
                      + std::to_string(random));
    return r;
}

SuiteResult
solver_agreement(const SuiteOptions& o)
{
    SuiteResult r(6, "solver-oracle", 2200);
    auto check = [&](const GameGraph& g, const Objective& obj) {
        ++r.checked;
        SolveResult s;
        try {
            s = solve(g, obj, o.limits);
        } catch (const Error& e) {
            r.fail(std::string("solver threw ") + e.what() + ": " + describe_game(g, obj));
            return;
        }
        const auto w = oracle::winners(g, obj);
        if (w.win0 != s.win0 || w.win1 != s.win1) r.fail("regions differ from the oracle: " + describe_game(g, obj));
        if (!verify_strategy(g, obj, s)) r.fail("strategy does not verify: " + describe_game(g, obj));
    };

    // every parity game with up to three vertices and priorities 0..2
    std::size_t exhaustive = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t succ_choices = (1u << n) - 1;
        std::size_t succ_total = 1, prio_total = 1;
        for (std::size_t i = 0; i < n; ++i) {
            succ_total *= succ_choices;
            prio_total *= 3;
        }
        for (std::size_t sc = 0; sc < succ_total; ++sc) {
            for (std::uint32_t owners = 0; owners < (1u << n); ++owners) {
                GameGraph g;
                for (Vertex v = 0; v < n; ++v) g.add_vertex(owners >> v & 1 ? Player::One : Player::Zero);
                auto c = sc;
                for (Vertex v = 0; v < n; ++v, c /= succ_choices) {
                    const auto bits = c % succ_choices + 1;
                    for (Vertex w = 0; w < n; ++w) {
                        if (bits >> w & 1) g.add_edge(v, w);
                    }
                }
                g = validate(std::move(g));
                for (std::size_t pc = 0; pc < prio_total; ++pc) {
                    objective::Parity p;
                    auto d = pc;
                    for (Vertex v = 0; v < n; ++v, d /= 3) p.priority.push_back(static_cast<unsigned>(d % 3));
                    check(g, p);
                    ++exhaustive;
                }
            }
        }
    }

    // four vertices, up to renaming: vertex labels (owner, priority) sorted
    std::size_t four = 0;
    if (o.exhaustive_four) {
        std::vector<std::size_t> labels(4, 0);
        auto next_labels = [&] {
            for (int i = 3; i >= 0; --i) {
                if (labels[i] < 5) {
                    ++labels[i];
                    for (int j = i + 1; j < 4; ++j) labels[j] = labels[i];
                    return true;
                }
            }
            return false;
        };
        do {
            for (std::size_t sc = 0; sc < 15 * 15 * 15 * 15; ++sc) {
                GameGraph g;
                objective::Parity p;
                auto c = sc;
                for (Vertex v = 0; v < 4; ++v) {
                    g.add_vertex(labels[v] / 3 ? Player::One : Player::Zero);
                    p.priority.push_back(static_cast<unsigned>(labels[v] % 3));
                }
                for (Vertex v = 0; v < 4; ++v, c /= 15) {
                    const auto bits = c % 15 + 1;
                    for (Vertex w = 0; w < 4; ++w) {
                        if (bits >> w & 1) g.add_edge(v, w);
                    }
                }
                check(g, p);
                ++four;
            }
        } while (next_labels());
    }

    Generator gen(o.seed ^ 6);
    std::size_t sampled = 0;
    for (; sampled < 20000; ++sampled) {
        const auto g = gen.arena(4, 4);
        check(g, gen.parity(g, 3));
    }
    std::size_t muller = 0;
    for (; muller < 400; ++muller) {
        const auto g = gen.arena(gen.uniform(1, 4), 3);
        check(g, gen.muller(g));
    }
    std::size_t other = 0;
    for (; other < 400; ++other) {
        const auto g = gen.arena(gen.uniform(1, 5), 3);
        const auto s = gen.subset(g.size());
        switch (other % 4) {
        case 0: check(g, objective::Reach{s}); break;
        case 1: check(g, objective::Safety{s}); break;
        case 2: check(g, objective::Buchi{s}); break;
        default: check(g, objective::CoBuchi{s}); break;
        }
    }
    r.notes.push_back("exhaustive parity games (<= 3 vertices): " + std::to_string(exhaustive)
                      + ", 4-vertex games up to renaming: " + std::to_string(four)
                      + ", sampled 4-vertex parity games: " + std::to_string(sampled));
    r.notes.push_back("Muller games (<= 4 vertices): " + std::to_string(muller)
                      + ", reach/safety/Buchi/co-Buchi games: " + std::to_string(other));
    if (sampled < 2000 || muller < 200) r.fail("sample too small");
    return r;
}

SuiteResult
embedding_soundness(const SuiteOptions& o)
{
    SuiteResult r(7, "embedding-soundness", 1100);
    Generator gen(o.seed ^ 7);
    const auto ab = Alphabet::of_chars("ab");
    std::size_t pairs = 0, compositions = 0;
    while (pairs < 1200) {
        const auto a = gen.automaton(ab, gen.uniform(1, 4), pick_kind(gen));
        const auto big = extend(ab, gen.uniform(1, 2));
        const auto e = embed(a, big, o.limits);
        for (int i = 0; i < 6; ++i, ++pairs) {
            ++r.checked;
            const auto w = gen.word(ab, 4, 4);
            const bool want = oracle::accepts(a, w);
            if (omega::accepts(a, w) != want || omega::accepts(e, w.over(big)) != want || oracle::accepts(e, w.over(big)) != want) {
                r.fail("membership changed for " + w.to_string() + ": " + describe_automaton(a));
            }
            // a word using a new letter somewhere
            auto x = gen.word(big, 4, 4);
            if (std::all_of(x.prefix().letters.begin(), x.prefix().letters.end(), [](Letter l) { return l < 2; })
                && std::all_of(x.period().letters.begin(), x.period().letters.end(), [](Letter l) { return l < 2; })) {
                FiniteWord u = x.prefix(), v = x.period();
                v.letters.push_back(static_cast<Letter>(2));
                x = canonicalize(big, u, v);
            }
            if (omega::accepts(e, x) || oracle::accepts(e, x)) r.fail("new-letter word " + x.to_string() + " accepted");
        }
    }
    while (compositions < 150) {
        const auto a = gen.automaton(ab, gen.uniform(1, 4), pick_kind(gen));
        const auto b = extend(ab, 1), c = extend(ab, 2);
        ++compositions;
        ++r.checked;
        if (!equivalent(embed(embed(a, b, o.limits), c, o.limits), embed(a, c, o.limits), o.limits).equivalent) {
            r.fail("embedding does not compose: " + describe_automaton(a));
        }
    }
    r.notes.push_back("word pairs: " + std::to_string(pairs) + " (plus as many new-letter words), compositions: "
                      + std::to_string(compositions));
    return r;
}

SuiteResult
reference_claim(const SuiteOptions& o)
{
    SuiteResult r(8, "reference-claim-report", 1);
    const auto a = fixtures::alternating_prefix_open_set();
    const auto big = Alphabet::of_chars("abc");
    const auto rep = jump_report(a, big, o.limits);
    const auto pinned = oracle::classify(embed(a, big, o.limits));
    ++r.checked;
    if (!rep.consistent) r.fail("report is not consistent");
    if (!rep.paper_claim_note) r.fail("claim note missing");
    if (rep.after.label != pinned) r.fail("computed label differs from the oracle");
    if (rep.claim_disagreement != (rep.after.label != BorelLabel::Sigma2Proper)) r.fail("disagreement flag is wrong");
    r.notes.push_back("computed label " + to_string(rep.after.label) + ", oracle " + to_string(pinned)
                      + ", claimed SIGMA2_PROPER");
    return r;
}

SuiteResult
metric_properties()
{
    SuiteResult r(9, "metric-properties", 1);
    const auto ab = Alphabet::of_chars("ab");
    std::map<std::string, UPWord> words;
    for (std::size_t total = 1; total <= 4; ++total) {
        for (std::size_t lu = 0; lu < total; ++lu) {
            for (std::uint32_t bits = 0; bits < (1u << total); ++bits) {
                FiniteWord u, v;
                for (std::size_t i = 0; i < total; ++i) (i < lu ? u : v).letters.push_back((bits >> i) & 1);
                auto w = canonicalize(ab, u, v);
                words.emplace(w.to_string(), std::move(w));
            }
        }
    }
    std::vector<UPWord> all;
    for (auto& [s, w] : words) all.push_back(w);
    auto same_letters = [](const UPWord& x, const UPWord& y) {
        for (std::size_t i = 0; i < 64; ++i) {
            if (x.at(i) != y.at(i)) return false;
        }
        return true;
    };
    const auto n = all.size();
    std::vector<DyadicDistance> d(n * n, DyadicDistance::zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ++r.checked;
            d[i * n + j] = word_distance(all[i], all[j]).distance;
            const bool zero = d[i * n + j].is_zero();
            if (zero != (i == j) || zero != same_letters(all[i], all[j])) {
                r.fail("d=0 does not match equality for " + all[i].to_string() + ", " + all[j].to_string());
            }
            if (i > j && !(d[i * n + j] == d[j * n + i])) r.fail("asymmetric distance");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                ++r.checked;
                if (d[i * n + k] > std::max(d[i * n + j], d[j * n + k])) {
                    r.fail("ultrametric inequality fails for " + all[i].to_string() + ", " + all[j].to_string() + ", "
                           + all[k].to_string());
                }
            }
        }
    }
    r.notes.push_back("canonical words: " + std::to_string(n));
    return r;
}

std::vector<SuiteResult>
all_suites(const SuiteOptions& o)
{
    return {table_structure(),      reach_example(),           lemma1_upper_bounds(o),
            jump_consistency(o),    classifier_agreement(o),   solver_agreement(o),
            embedding_soundness(o), reference_claim(o),        metric_properties()};
}

} // namespace omega::oracle
