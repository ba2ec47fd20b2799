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

#include "omega/automaton_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "omega/error.hpp"
#include "text_util.hpp"

namespace omega {

namespace {

Acceptance
parse_acceptance(std::size_t line, const std::string& body)
{
    std::istringstream ss(body);
    std::string kind;
    ss >> kind;
    std::string rest;
    std::getline(ss, rest);
    if (kind == "muller") {
        Muller m;
        for (auto& set : detail::parse_braced_sets(line, rest)) m.family.push_back(make_index_set(std::move(set)));
        return m;
    }
    if (kind == "parity") {
        std::vector<std::pair<std::uint32_t, unsigned>> entries = detail::parse_priority_pairs(line, rest);
        Parity p;
        for (auto [q, prio] : entries) {
            if (q >= p.priority.size()) p.priority.resize(q + 1, ~0u);
            if (p.priority[q] != ~0u) throw ParseError(line, "priority of state " + std::to_string(q) + " given twice");
            p.priority[q] = prio;
        }
        for (std::size_t q = 0; q < p.priority.size(); ++q) {
            if (p.priority[q] == ~0u) throw ParseError(line, "state " + std::to_string(q) + " has no priority");
        }
        return p;
    }
    auto states = make_index_set(detail::parse_ids(line, rest));
    if (kind == "reach") return Reach{states};
    if (kind == "safety") return Safety{states};
    if (kind == "buchi") return Buchi{states};
    if (kind == "cobuchi") return CoBuchi{states};
    throw ParseError(line, "unknown acceptance kind '" + kind + "'");
}

} // namespace

DetOmegaAutomaton
read_automaton(std::istream& in)
{
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> states;
    std::optional<State> initial;
    std::optional<Acceptance> acceptance;
    struct Trans { std::size_t line; State from; std::string symbol; State to; };
    std::vector<Trans> trans;

    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto text = detail::strip_comment(raw);
        if (text.empty()) continue;
        const auto colon = text.find(':');
        if (colon == std::string::npos) throw ParseError(line, "expected 'key: value'");
        const auto key = detail::trim(text.substr(0, colon));
        const auto value = std::string(detail::trim(text.substr(colon + 1)));
        auto once = [&](bool present) {
            if (present) throw ParseError(line, "duplicate '" + std::string(key) + "' line");
        };
        if (key == "alphabet") {
            once(alphabet.has_value());
            std::istringstream ss(value);
            std::vector<std::string> syms;
            for (std::string s; ss >> s;) syms.push_back(s);
            try {
                alphabet = Alphabet(std::move(syms));
            } catch (const ValidationError& e) {
                throw ParseError(line, e.what());
            }
        } else if (key == "states") {
            once(states.has_value());
            states = detail::parse_number(line, value);
            if (*states == 0) throw ParseError(line, "an automaton needs at least one state");
        } else if (key == "initial") {
            once(initial.has_value());
            initial = static_cast<State>(detail::parse_number(line, value));
        } else if (key == "acceptance") {
            once(acceptance.has_value());
            acceptance = parse_acceptance(line, value);
        } else if (key == "trans") {
            std::istringstream ss(value);
            std::string from, sym, to, extra;
            if (!(ss >> from >> sym >> to) || (ss >> extra)) throw ParseError(line, "expected 'trans: <from> <symbol> <to>'");
            trans.push_back({line, static_cast<State>(detail::parse_number(line, from)), sym,
                             static_cast<State>(detail::parse_number(line, to))});
        } else {
            throw ParseError(line, "unknown key '" + std::string(key) + "'");
        }
    }
    if (!alphabet) throw ParseError(line, "missing 'alphabet' line");
    if (!states) throw ParseError(line, "missing 'states' line");
    if (!acceptance) throw ParseError(line, "missing 'acceptance' line");

    auto a = DetOmegaAutomaton::with_states(*alphabet, *states, std::move(*acceptance));
    a.initial = initial.value_or(0);
    for (const auto& t : trans) {
        auto l = a.alphabet.index_of(t.symbol);
        if (!l) throw ParseError(t.line, "symbol '" + t.symbol + "' is not in the alphabet");
        if (t.from >= a.num_states || t.to >= a.num_states) throw ParseError(t.line, "state out of range");
        if (a.next(t.from, *l) != kNoState) {
            throw ParseError(t.line, "second transition for (state " + std::to_string(t.from) + ", symbol " + t.symbol + ")");
        }
        a.set(t.from, *l, t.to);
    }
    return validate(std::move(a));
}

DetOmegaAutomaton
parse_automaton(std::string_view text)
{
    std::istringstream ss{std::string(text)};
    return read_automaton(ss);
}

DetOmegaAutomaton
load_automaton(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open automaton file '" + path + "'");
    return read_automaton(in);
}

std::string
write_automaton(const DetOmegaAutomaton& a)
{
    std::ostringstream out;
    out << "alphabet:";
    for (const auto& s : a.alphabet.symbols()) out << ' ' << s;
    out << "\nstates: " << a.num_states << "\ninitial: " << a.initial << "\nacceptance: " << acceptance_name(a.acceptance);
    if (const auto* p = std::get_if<Parity>(&a.acceptance)) {
        for (std::size_t q = 0; q < p->priority.size(); ++q) out << ' ' << q << ':' << p->priority[q];
    } else if (const auto* m = std::get_if<Muller>(&a.acceptance)) {
        for (const auto& s : m->family) out << ' ' << to_string(s);
    } else {
        std::visit([&](const auto& f) {
            if constexpr (requires { f.states; }) {
                for (auto q : f.states) out << ' ' << q;
            }
        }, a.acceptance);
    }
    out << '\n';
    for (State q = 0; q < a.num_states; ++q) {
        for (Letter l = 0; l < a.alphabet.size(); ++l) {
            out << "trans: " << q << ' ' << a.alphabet.symbol(l) << ' ' << a.next(q, l) << '\n';
        }
    }
    return out.str();
}

} // namespace omega
