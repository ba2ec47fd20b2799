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

#include "omega/automaton.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

#include "graph_util.hpp"
#include "omega/error.hpp"

namespace omega {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };

detail::Adjacency
successor_graph(const DetOmegaAutomaton& a)
{
    detail::Adjacency succ(a.num_states);
    for (State q = 0; q < a.num_states; ++q) {
        for (Letter l = 0; l < a.alphabet.size(); ++l) succ[q].push_back(a.next(q, l));
        std::sort(succ[q].begin(), succ[q].end());
        succ[q].erase(std::unique(succ[q].begin(), succ[q].end()), succ[q].end());
    }
    return succ;
}

void
check_states(const StateSet& s, std::size_t n, const char* what)
{
    for (auto q : s) {
        if (q >= n) {
            throw ValidationError(std::string(what) + " refers to unknown state " + std::to_string(q)
                                  + " (automaton has " + std::to_string(n) + " states)");
        }
    }
}

bool
evaluate(const Acceptance& acc, const StateSet& visited, const StateSet& inf)
{
    return std::visit(overloaded{
        [&](const Reach& r) { return intersects(visited, r.states); },
        [&](const Safety& s) { return is_subset(visited, s.states); },
        [&](const Buchi& b) { return intersects(inf, b.states); },
        [&](const CoBuchi& c) { return is_subset(inf, c.states); },
        [&](const Parity& p) {
            unsigned best = ~0u;
            for (auto q : inf) best = std::min(best, p.priority[q]);
            return best % 2 == 0;
        },
        [&](const Muller& m) { return std::find(m.family.begin(), m.family.end(), inf) != m.family.end(); },
    }, acc);
}

/// Shortest word leading from `from` to a state satisfying `goal`, moving
/// only through states satisfying `allowed`. With `nonempty` the empty word
/// does not count even if `from` satisfies `goal`. Letters are tried in
/// alphabet order so the result is deterministic.
template <class Goal, class Allowed>
std::pair<std::vector<Letter>, State>
shortest_path(const DetOmegaAutomaton& a, State from, Goal goal, Allowed allowed, bool nonempty)
{
    if (!nonempty && goal(from)) return {{}, from};
    std::vector<std::pair<State, Letter>> parent(a.num_states, {kNoState, 0});
    std::vector<char> seen(a.num_states, 0);
    std::deque<State> queue{from};
    seen[from] = 1;
    auto path_to = [&](State q) {
        std::vector<Letter> word;
        for (State s = q; s != from; s = parent[s].first) word.push_back(parent[s].second);
        std::reverse(word.begin(), word.end());
        return word;
    };
    while (!queue.empty()) {
        const auto q = queue.front();
        queue.pop_front();
        for (Letter l = 0; l < a.alphabet.size(); ++l) {
            const auto r = a.next(q, l);
            if (!allowed(r)) continue;
            if (goal(r)) {
                auto word = path_to(q);
                word.push_back(l);
                return {std::move(word), r};
            }
            if (seen[r]) continue;
            seen[r] = 1;
            parent[r] = {q, l};
            queue.push_back(r);
        }
    }
    throw std::logic_error("no path between states that were expected to be connected");
}

} // namespace

std::string
acceptance_name(const Acceptance& acc)
{
    return std::visit(overloaded{
        [](const Reach&) { return std::string("reach"); },
        [](const Safety&) { return std::string("safety"); },
        [](const Buchi&) { return std::string("buchi"); },
        [](const CoBuchi&) { return std::string("cobuchi"); },
        [](const Parity&) { return std::string("parity"); },
        [](const Muller&) { return std::string("muller"); },
    }, acc);
}

DetOmegaAutomaton
DetOmegaAutomaton::with_states(Alphabet alphabet, std::size_t n, Acceptance acc)
{
    DetOmegaAutomaton a;
    a.delta.assign(n * alphabet.size(), kNoState);
    a.alphabet = std::move(alphabet);
    a.num_states = n;
    a.acceptance = std::move(acc);
    return a;
}

DetOmegaAutomaton
validate(DetOmegaAutomaton a)
{
    const auto n = a.num_states;
    const auto k = a.alphabet.size();
    if (k == 0) throw ValidationError("automaton alphabet is empty");
    if (n == 0) throw ValidationError("automaton has no states");
    if (a.initial >= n) throw ValidationError("initial state " + std::to_string(a.initial) + " does not exist");
    if (a.delta.size() != n * k) throw ValidationError("transition table has the wrong size");
    for (State q = 0; q < n; ++q) {
        for (Letter l = 0; l < k; ++l) {
            const auto to = a.next(q, l);
            if (to == kNoState) {
                throw ValidationError("missing transition for (state " + std::to_string(q) + ", symbol "
                                      + a.alphabet.symbol(l) + ")");
            }
            if (to >= n) {
                throw ValidationError("transition (state " + std::to_string(q) + ", symbol " + a.alphabet.symbol(l)
                                      + ") targets unknown state " + std::to_string(to));
            }
        }
    }
    std::visit(overloaded{
        [&](Parity& p) {
            if (p.priority.size() != n) throw ValidationError("parity acceptance must give a priority to every state");
        },
        [&](Muller& m) {
            for (auto& s : m.family) {
                s = make_index_set(std::move(s));
                check_states(s, n, "muller family");
            }
            std::sort(m.family.begin(), m.family.end());
            m.family.erase(std::unique(m.family.begin(), m.family.end()), m.family.end());
        },
        [&](auto& f) {
            f.states = make_index_set(std::move(f.states));
            check_states(f.states, n, "acceptance set");
        },
    }, a.acceptance);
    return a;
}

StateSet
reachable_states(const DetOmegaAutomaton& a)
{
    auto seen = detail::reachable_from(successor_graph(a), {a.initial});
    StateSet out;
    for (State q = 0; q < a.num_states; ++q) {
        if (seen[q]) out.push_back(q);
    }
    return out;
}

std::vector<Loop>
enumerate_loops(const DetOmegaAutomaton& a, const Limits& limits)
{
    const auto succ = successor_graph(a);
    const auto reach = detail::reachable_from(succ, {a.initial});
    std::vector<Loop> loops;
    for (const auto& comp : detail::strongly_connected_components(succ, reach)) {
        if (!detail::is_nontrivial(succ, comp)) continue;
        const auto m = comp.size();
        if (m > limits.max_scc_states || m > 63) {
            throw GuardExceeded("strongly connected component with " + std::to_string(m)
                                + " states exceeds the loop enumeration cap of "
                                + std::to_string(limits.max_scc_states));
        }
        // local bit masks of induced successors and predecessors
        std::map<State, unsigned> local;
        for (unsigned i = 0; i < m; ++i) local[comp[i]] = i;
        std::vector<std::uint64_t> out_mask(m, 0), in_mask(m, 0);
        for (unsigned i = 0; i < m; ++i) {
            for (auto r : succ[comp[i]]) {
                auto it = local.find(r);
                if (it == local.end()) continue;
                out_mask[i] |= std::uint64_t{1} << it->second;
                in_mask[it->second] |= std::uint64_t{1} << i;
            }
        }
        auto closure = [&](std::uint64_t mask, const std::vector<std::uint64_t>& edges) {
            std::uint64_t seen = mask & (~mask + 1);
            std::uint64_t frontier = seen;
            while (frontier) {
                const auto i = std::countr_zero(frontier);
                frontier &= frontier - 1;
                const auto fresh = edges[i] & mask & ~seen;
                seen |= fresh;
                frontier |= fresh;
            }
            return seen;
        };
        const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
        for (std::uint64_t mask = 1; mask <= full && mask != 0; ++mask) {
            bool traversable = true;
            for (auto rest = mask; rest && traversable; rest &= rest - 1) {
                traversable = (out_mask[std::countr_zero(rest)] & mask) != 0;
            }
            if (!traversable) continue;
            if (closure(mask, out_mask) != mask || closure(mask, in_mask) != mask) continue;
            Loop loop;
            for (auto rest = mask; rest; rest &= rest - 1) loop.states.push_back(comp[std::countr_zero(rest)]);
            loops.push_back(std::move(loop));
        }
    }
    std::sort(loops.begin(), loops.end());
    return loops;
}

bool
MullerNormalForm::accepting(const StateSet& loop) const
{
    const auto& family = std::get<Muller>(automaton.acceptance).family;
    return std::binary_search(family.begin(), family.end(), loop);
}

namespace {

DetOmegaAutomaton
latch(const DetOmegaAutomaton& a, const StateSet& f, bool reach)
{
    // flag records "some state of F seen" (reach) or "some state outside F seen" (safety)
    auto trips = [&](State q) { return contains(f, q) == reach; };
    auto out = DetOmegaAutomaton::with_states(a.alphabet, 2 * a.num_states);
    out.initial = 2 * a.initial + (trips(a.initial) ? 1 : 0);
    for (State q = 0; q < a.num_states; ++q) {
        for (Letter l = 0; l < a.alphabet.size(); ++l) {
            const auto r = a.next(q, l);
            out.set(2 * q, l, 2 * r + (trips(r) ? 1 : 0));
            out.set(2 * q + 1, l, 2 * r + 1);
        }
    }
    return out;
}

} // namespace

MullerNormalForm
to_muller_normal_form(const DetOmegaAutomaton& a, const Limits& limits)
{
    MullerNormalForm nf;
    std::function<bool(const StateSet&)> accepting;
    if (const auto* r = std::get_if<Reach>(&a.acceptance)) {
        nf.automaton = latch(a, r->states, true);
        nf.latched = true;
        accepting = [](const StateSet& c) { return c.front() % 2 == 1; };
    } else if (const auto* s = std::get_if<Safety>(&a.acceptance)) {
        nf.automaton = latch(a, s->states, false);
        nf.latched = true;
        accepting = [](const StateSet& c) { return c.front() % 2 == 0; };
    } else {
        nf.automaton = a;
        accepting = [&](const StateSet& c) { return evaluate(a.acceptance, c, c); };
    }

    Muller family;
    for (auto& loop : enumerate_loops(nf.automaton, limits)) {
        const bool acc = accepting(loop.states);
        if (acc) family.family.push_back(loop.states);
        nf.loop_table.push_back({std::move(loop.states), acc});
    }
    nf.automaton.acceptance = std::move(family);
    return nf;
}

bool
accepts(const DetOmegaAutomaton& a, const UPWord& w)
{
    if (!(w.alphabet() == a.alphabet)) {
        throw AlphabetMismatch("word over {" + w.alphabet().to_string() + "} given to automaton over {"
                               + a.alphabet.to_string() + "}");
    }
    std::vector<State> visited{a.initial};
    State q = a.initial;
    for (auto l : w.prefix().letters) {
        q = a.next(q, l);
        visited.push_back(q);
    }

    // Run the period until a boundary state repeats; the iterations from the
    // first occurrence of that state on form the cycle of the run.
    std::vector<std::size_t> first_seen(a.num_states, SIZE_MAX);
    std::vector<std::vector<State>> rounds;
    while (first_seen[q] == SIZE_MAX) {
        first_seen[q] = rounds.size();
        std::vector<State> round;
        for (auto l : w.period().letters) {
            q = a.next(q, l);
            round.push_back(q);
        }
        rounds.push_back(std::move(round));
    }
    std::vector<State> inf;
    for (std::size_t i = 0; i < rounds.size(); ++i) {
        visited.insert(visited.end(), rounds[i].begin(), rounds[i].end());
        if (i >= first_seen[q]) inf.insert(inf.end(), rounds[i].begin(), rounds[i].end());
    }
    return evaluate(a.acceptance, make_index_set(std::move(visited)), make_index_set(std::move(inf)));
}

DetOmegaAutomaton
complement(const DetOmegaAutomaton& a, const Limits& limits)
{
    const auto n = static_cast<std::uint32_t>(a.num_states);
    if (const auto* r = std::get_if<Reach>(&a.acceptance)) {
        auto out = a;
        out.acceptance = Safety{complement_of(r->states, n)};
        return out;
    }
    if (const auto* s = std::get_if<Safety>(&a.acceptance)) {
        auto out = a;
        out.acceptance = Reach{complement_of(s->states, n)};
        return out;
    }
    if (std::holds_alternative<Parity>(a.acceptance)) {
        auto out = a;
        auto& prio = std::get<Parity>(out.acceptance).priority;
        for (auto& x : prio) ++x;
        return out;
    }
    // Only loops can be infinity sets, so complementing the family within
    // the loop table complements the language.
    auto nf = to_muller_normal_form(a, limits);
    Muller family;
    for (const auto& e : nf.loop_table) {
        if (!e.accepting) family.family.push_back(e.states);
    }
    nf.automaton.acceptance = std::move(family);
    return nf.automaton;
}

MullerNormalForm
product_normal_form(const DetOmegaAutomaton& a1, const DetOmegaAutomaton& a2, ProductMode mode, const Limits& limits)
{
    if (!(a1.alphabet == a2.alphabet)) {
        throw AlphabetMismatch("product of automata over {" + a1.alphabet.to_string() + "} and {"
                               + a2.alphabet.to_string() + "}");
    }
    const auto n1 = to_muller_normal_form(a1, limits);
    const auto n2 = to_muller_normal_form(a2, limits);
    const auto& m1 = n1.automaton;
    const auto& m2 = n2.automaton;
    const auto k = m1.alphabet.size();

    std::map<std::pair<State, State>, State> index;
    std::vector<std::pair<State, State>> pairs;
    std::vector<State> delta;
    auto intern = [&](State p, State q) {
        auto [it, fresh] = index.try_emplace({p, q}, static_cast<State>(pairs.size()));
        if (fresh) pairs.push_back({p, q});
        return it->second;
    };
    intern(m1.initial, m2.initial);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [p, q] = pairs[i];
        for (Letter l = 0; l < k; ++l) delta.push_back(intern(m1.next(p, l), m2.next(q, l)));
    }

    MullerNormalForm nf;
    nf.automaton.alphabet = m1.alphabet;
    nf.automaton.num_states = pairs.size();
    nf.automaton.initial = 0;
    nf.automaton.delta = std::move(delta);

    Muller family;
    for (auto& loop : enumerate_loops(nf.automaton, limits)) {
        StateSet left, right;
        for (auto s : loop.states) {
            left.push_back(pairs[s].first);
            right.push_back(pairs[s].second);
        }
        const bool acc1 = n1.accepting(make_index_set(std::move(left)));
        const bool acc2 = n2.accepting(make_index_set(std::move(right)));
        bool acc = false;
        switch (mode) {
            case ProductMode::And: acc = acc1 && acc2; break;
            case ProductMode::Or:  acc = acc1 || acc2; break;
            case ProductMode::Xor: acc = acc1 != acc2; break;
        }
        if (acc) family.family.push_back(loop.states);
        nf.loop_table.push_back({std::move(loop.states), acc});
    }
    nf.automaton.acceptance = std::move(family);
    return nf;
}

DetOmegaAutomaton
product(const DetOmegaAutomaton& a1, const DetOmegaAutomaton& a2, ProductMode mode, const Limits& limits)
{
    return product_normal_form(a1, a2, mode, limits).automaton;
}

EmptinessResult
is_empty(const MullerNormalForm& nf)
{
    const auto it = std::find_if(nf.loop_table.begin(), nf.loop_table.end(),
                                 [](const LoopEntry& e) { return e.accepting; });
    if (it == nf.loop_table.end()) return {true, std::nullopt};

    const auto& a = nf.automaton;
    const auto& loop = it->states;
    auto in_loop = [&](State q) { return contains(loop, q); };
    auto anywhere = [](State) { return true; };

    auto [access, entry] = shortest_path(a, a.initial, in_loop, anywhere, false);

    // tour through every loop state in index order and back to the entry
    std::vector<Letter> cycle;
    State at = entry;
    for (auto target : loop) {
        if (target == at) continue;
        auto [seg, end] = shortest_path(a, at, [&](State q) { return q == target; }, in_loop, false);
        cycle.insert(cycle.end(), seg.begin(), seg.end());
        at = end;
    }
    if (at != entry || cycle.empty()) {
        auto back = shortest_path(a, at, [&](State q) { return q == entry; }, in_loop, true).first;
        cycle.insert(cycle.end(), back.begin(), back.end());
    }

    auto witness = canonicalize(a.alphabet, FiniteWord{std::move(access)}, FiniteWord{std::move(cycle)});
    if (!accepts(a, witness)) throw std::logic_error("emptiness witness " + witness.to_string() + " is rejected");
    return {false, std::move(witness)};
}

EmptinessResult
is_empty(const DetOmegaAutomaton& a, const Limits& limits)
{
    auto result = is_empty(to_muller_normal_form(a, limits));
    if (result.witness && !accepts(a, *result.witness)) {
        throw std::logic_error("emptiness witness " + result.witness->to_string() + " is rejected by the input");
    }
    return result;
}

EquivalenceResult
equivalent(const DetOmegaAutomaton& a1, const DetOmegaAutomaton& a2, const Limits& limits)
{
    auto r = is_empty(product_normal_form(a1, a2, ProductMode::Xor, limits));
    if (r.empty) return {true, std::nullopt};
    const auto& w = *r.witness;
    if (accepts(a1, w) == accepts(a2, w)) {
        throw std::logic_error("equivalence counterexample " + w.to_string() + " does not separate the automata");
    }
    return {false, w};
}

} // namespace omega
