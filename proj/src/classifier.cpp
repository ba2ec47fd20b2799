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

#include "omega/classifier.hpp"

#include <deque>
#include <stdexcept>

#include "graph_util.hpp"
#include "omega/error.hpp"

namespace omega {

std::string
to_string(BorelLabel label)
{
    switch (label) {
        case BorelLabel::Clopen: return "CLOPEN";
        case BorelLabel::OpenProper: return "OPEN_PROPER";
        case BorelLabel::ClosedProper: return "CLOSED_PROPER";
        case BorelLabel::Delta2Proper: return "DELTA2_PROPER";
        case BorelLabel::Sigma2Proper: return "SIGMA2_PROPER";
        case BorelLabel::Pi2Proper: return "PI2_PROPER";
        case BorelLabel::Delta3Proper: return "DELTA3_PROPER";
    }
    return "?";
}

std::optional<BorelLabel>
parse_borel_label(const std::string& s)
{
    for (auto l : kAllBorelLabels) {
        if (to_string(l) == s) return l;
    }
    return std::nullopt;
}

BorelLabel
label_of(const Memberships& m)
{
    if (m.open && m.closed) return BorelLabel::Clopen;
    if (m.open) return BorelLabel::OpenProper;
    if (m.closed) return BorelLabel::ClosedProper;
    if (m.sigma2 && m.pi2) return BorelLabel::Delta2Proper;
    if (m.sigma2) return BorelLabel::Sigma2Proper;
    if (m.pi2) return BorelLabel::Pi2Proper;
    return BorelLabel::Delta3Proper;
}

Memberships
memberships_of(BorelLabel label)
{
    switch (label) {
        case BorelLabel::Clopen: return {true, true, true, true};
        case BorelLabel::OpenProper: return {true, false, true, true};
        case BorelLabel::ClosedProper: return {false, true, true, true};
        case BorelLabel::Delta2Proper: return {false, false, true, true};
        case BorelLabel::Sigma2Proper: return {false, false, true, false};
        case BorelLabel::Pi2Proper: return {false, false, false, true};
        case BorelLabel::Delta3Proper: return {false, false, false, false};
    }
    return {};
}

std::string
to_string(const CompletenessLabel& c)
{
    switch (c.kind) {
        case CompletenessKind::NotApplicable: return "NOT_APPLICABLE";
        case CompletenessKind::SigmaComplete: return "SIGMA_COMPLETE(" + std::to_string(c.level) + ")";
        case CompletenessKind::PiComplete: return "PI_COMPLETE(" + std::to_string(c.level) + ")";
    }
    return "?";
}

namespace {

detail::Adjacency
predecessors(const DetOmegaAutomaton& a)
{
    detail::Adjacency pred(a.num_states);
    for (State q = 0; q < a.num_states; ++q) {
        for (Letter l = 0; l < a.alphabet.size(); ++l) pred[a.next(q, l)].push_back(q);
    }
    return pred;
}

/// States from which some loop with the given flag is reachable.
std::vector<char>
can_reach_loop(const MullerNormalForm& nf, bool accepting)
{
    std::vector<std::uint32_t> sources;
    for (const auto& e : nf.loop_table) {
        if (e.accepting == accepting) sources.insert(sources.end(), e.states.begin(), e.states.end());
    }
    return detail::reachable_from(predecessors(nf.automaton), sources);
}

MullerNormalForm
complement_normal_form(const MullerNormalForm& nf)
{
    MullerNormalForm out;
    out.automaton = nf.automaton;
    out.latched = nf.latched;
    Muller family;
    for (const auto& e : nf.loop_table) {
        out.loop_table.push_back({e.states, !e.accepting});
        if (!e.accepting) family.family.push_back(e.states);
    }
    out.automaton.acceptance = std::move(family);
    return out;
}

/// First pair C ⊊ C' (table order) with flags (from, to).
std::optional<LoopPair>
find_pair(const MullerNormalForm& nf, bool sub_flag, bool super_flag)
{
    for (const auto& c : nf.loop_table) {
        if (c.accepting != sub_flag) continue;
        for (const auto& d : nf.loop_table) {
            if (d.accepting != super_flag || d.states.size() <= c.states.size()) continue;
            if (is_subset(c.states, d.states)) return LoopPair{c.states, d.states, c.accepting, d.accepting};
        }
    }
    return std::nullopt;
}

} // namespace

StateSet
universal_states(const MullerNormalForm& nf)
{
    const auto bad = can_reach_loop(nf, false);
    StateSet out;
    for (State q = 0; q < nf.automaton.num_states; ++q) {
        if (!bad[q]) out.push_back(q);
    }
    return out;
}

bool
is_open(const MullerNormalForm& nf, const Limits& limits, std::optional<UPWord>* why)
{
    auto reach = nf.automaton;
    reach.acceptance = Reach{universal_states(nf)};
    auto r = equivalent(nf.automaton, reach, limits);
    if (why) *why = r.counterexample;
    return r.equivalent;
}

bool
is_closed(const MullerNormalForm& nf, const Limits& limits, std::optional<UPWord>* why)
{
    return is_open(complement_normal_form(nf), limits, why);
}

bool
is_pi2(const MullerNormalForm& nf, std::optional<LoopPair>* why)
{
    auto v = find_pair(nf, true, false);
    if (why) *why = v;
    return !v.has_value();
}

bool
is_sigma2(const MullerNormalForm& nf, std::optional<LoopPair>* why)
{
    auto v = find_pair(nf, false, true);
    if (why) *why = v;
    return !v.has_value();
}

BorelClassLabel
classify(const DetOmegaAutomaton& a, const Limits& limits)
{
    const auto nf = to_muller_normal_form(a, limits);
    BorelClassLabel out;
    auto& m = out.memberships;
    auto& ev = out.evidence;
    ev.latched = nf.latched;
    m.open = is_open(nf, limits, &ev.open_counterexample);
    m.closed = is_closed(nf, limits, &ev.closed_counterexample);
    m.pi2 = is_pi2(nf, &ev.pi2_violation);
    m.sigma2 = is_sigma2(nf, &ev.sigma2_violation);
    if ((m.open && !m.sigma2) || (m.closed && !m.pi2)) {
        throw std::logic_error("inconsistent Borel memberships (open => Sigma2, closed => Pi2)");
    }
    out.label = label_of(m);
    return out;
}

DetOmegaAutomaton
prefix_set_automaton(const Alphabet& alphabet, const std::vector<FiniteWord>& basis)
{
    const auto k = alphabet.size();
    // node 0: accepting sink, node 1: rejecting sink, node 2: root
    std::vector<std::vector<State>> next{std::vector<State>(k, 0), std::vector<State>(k, 1), std::vector<State>(k, 1)};
    State initial = 2;
    for (const auto& w : basis) {
        if (w.empty()) {
            initial = 0;
            continue;
        }
        State at = 2;
        for (std::size_t i = 0; i < w.size() && at != 0; ++i) {
            auto& slot = next[at][w.letters[i]];
            if (i + 1 == w.size()) {
                slot = 0;
            } else if (slot == 1) {
                slot = static_cast<State>(next.size());
                at = slot;
                next.push_back(std::vector<State>(k, 1));
            } else {
                at = slot;
            }
        }
    }
    auto a = DetOmegaAutomaton::with_states(alphabet, next.size(), Reach{{0}});
    a.initial = initial;
    for (State q = 0; q < next.size(); ++q) {
        for (Letter l = 0; l < k; ++l) a.set(q, l, next[q][l]);
    }
    return a;
}

std::vector<FiniteWord>
clopen_basis(const DetOmegaAutomaton& a, const Limits& limits)
{
    const auto label = classify(a, limits).label;
    if (label != BorelLabel::Clopen) {
        throw ValidationError("clopen basis requested for a " + to_string(label) + " language");
    }
    const auto nf = to_muller_normal_form(a, limits);
    const auto& m = nf.automaton;
    const auto universal = universal_states(nf);
    const auto live = can_reach_loop(nf, true);

    std::vector<FiniteWord> basis;
    std::deque<std::pair<FiniteWord, State>> queue{{FiniteWord{}, m.initial}};
    while (!queue.empty()) {
        auto [w, q] = std::move(queue.front());
        queue.pop_front();
        if (contains(universal, q)) {
            basis.push_back(std::move(w));
            continue;
        }
        if (!live[q]) continue;
        // undecided states cannot lie on a cycle of a clopen language
        if (w.size() > m.num_states) throw std::logic_error("clopen basis search did not terminate");
        for (Letter l = 0; l < m.alphabet.size(); ++l) {
            auto longer = w;
            longer.letters.push_back(l);
            queue.emplace_back(std::move(longer), m.next(q, l));
        }
    }
    if (!equivalent(a, prefix_set_automaton(a.alphabet, basis), limits).equivalent) {
        throw std::logic_error("clopen basis does not reproduce the language");
    }
    return basis;
}

CompletenessLabel
completeness_label(BorelLabel label)
{
    switch (label) {
        case BorelLabel::OpenProper: return {CompletenessKind::SigmaComplete, 1};
        case BorelLabel::ClosedProper: return {CompletenessKind::PiComplete, 1};
        case BorelLabel::Sigma2Proper: return {CompletenessKind::SigmaComplete, 2};
        case BorelLabel::Pi2Proper: return {CompletenessKind::PiComplete, 2};
        default: return {};
    }
}

} // namespace omega
