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


#include "omega/game_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "omega/error.hpp"
#include "text_util.hpp"

namespace omega {

namespace {

Objective
parse_objective(std::size_t line, const std::string& body)
{
    std::istringstream ss(body);
    std::string kind;
    ss >> kind;
    std::string rest;
    std::getline(ss, rest);
    if (kind == "muller") {
        objective::Muller m;
        for (auto& s : detail::parse_braced_sets(line, rest)) m.family.push_back(make_index_set(std::move(s)));
        return m;
    }
    if (kind == "parity") {
        objective::Parity p;
        for (auto [v, prio] : detail::parse_priority_pairs(line, rest)) {
            if (v >= p.priority.size()) p.priority.resize(v + 1, ~0u);
            if (p.priority[v] != ~0u) throw ParseError(line, "priority of vertex " + std::to_string(v) + " given twice");
            p.priority[v] = prio;
        }
        if (std::count(p.priority.begin(), p.priority.end(), ~0u) > 0) throw ParseError(line, "a vertex has no priority");
        return p;
    }
    // a single optional pair of braces, as printed by describe()
    rest = std::string(detail::trim(rest));
    if (!rest.empty() && rest.front() == '{') {
        if (rest.back() != '}') throw ParseError(line, "unterminated '{'");
        rest = rest.substr(1, rest.size() - 2);
    }
    auto ids = make_index_set(detail::parse_ids(line, rest));
    if (kind == "reach") return objective::Reach{ids};
    if (kind == "safety") return objective::Safety{ids};
    if (kind == "buchi") return objective::Buchi{ids};
    if (kind == "cobuchi") return objective::CoBuchi{ids};
    throw ParseError(line, "unknown objective '" + kind + "'");
}

std::string
first_word(std::string_view text)
{
    std::istringstream ss{std::string(text)};
    std::string w;
    ss >> w;
    return w;
}

} // namespace

GameSpec
read_game(std::istream& in)
{
    struct Decl { std::size_t line; std::string name; Player owner; std::vector<Vertex> succ; };
    std::map<Vertex, Decl> decls;
    GameSpec spec;
    std::optional<Vertex> initial;
    std::size_t objective_line = 0;

    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto text = std::string(detail::strip_comment(raw));
        if (text.empty()) continue;
        std::istringstream ss(text);
        std::string key;
        ss >> key;
        if (key == "objective") {
            if (spec.objective) throw ParseError(line, "duplicate 'objective' line");
            std::string rest;
            std::getline(ss, rest);
            spec.objective = parse_objective(line, rest);
            objective_line = line;
        } else if (key == "initial") {
            if (initial) throw ParseError(line, "duplicate 'initial' line");
            std::string id, extra;
            if (!(ss >> id) || (ss >> extra)) throw ParseError(line, "expected 'initial <id>'");
            initial = static_cast<Vertex>(detail::parse_number(line, id));
        } else if (key == "vertex") {
            std::string id;
            if (!(ss >> id)) throw ParseError(line, "expected a vertex id");
            const auto v = static_cast<Vertex>(detail::parse_number(line, id));
            Decl d{line, {}, Player::Zero, {}};
            bool owner_seen = false, succ_seen = false;
            for (std::string field; ss >> field;) {
                std::string value;
                if (!(ss >> value)) throw ParseError(line, "missing value after '" + field + "'");
                if (field == "name") {
                    d.name = value;
                } else if (field == "owner") {
                    if (value != "0" && value != "1") throw ParseError(line, "owner must be 0 or 1");
                    d.owner = value == "0" ? Player::Zero : Player::One;
                    owner_seen = true;
                } else if (field == "succ") {
                    d.succ = detail::parse_ids(line, value);
                    succ_seen = true;
                } else {
                    throw ParseError(line, "unknown vertex field '" + field + "'");
                }
            }
            if (!owner_seen || !succ_seen) throw ParseError(line, "vertex needs 'owner' and 'succ'");
            if (!decls.emplace(v, std::move(d)).second) throw ParseError(line, "vertex " + id + " declared twice");
        } else {
            throw ParseError(line, "unknown line '" + key + "'");
        }
    }
    if (decls.empty()) throw ParseError(line, "no vertices");
    Vertex expected = 0;
    for (auto& [v, d] : decls) {
        if (v != expected++) throw ParseError(d.line, "vertex ids must be 0..n-1; " + std::to_string(expected - 1) + " is missing");
        spec.graph.add_vertex(d.owner, d.name);
        spec.graph.succ.back() = d.succ;
    }
    for (auto& [v, d] : decls) {
        for (auto w : d.succ) {
            if (w >= decls.size()) throw ParseError(d.line, "successor " + std::to_string(w) + " is not a vertex");
        }
    }
    spec.graph.initial = initial;
    spec.graph = validate(std::move(spec.graph));
    if (spec.objective) {
        if (auto* p = std::get_if<objective::Parity>(&*spec.objective); p && p->priority.size() != spec.graph.size()) {
            throw ParseError(objective_line, "parity objective must give every vertex a priority");
        }
        spec.objective = validate(spec.graph, std::move(*spec.objective));
    }
    return spec;
}

GameSpec
read_pg_game(std::istream& in)
{
    struct Decl { std::size_t line; unsigned priority; Player owner; std::vector<std::uint64_t> succ; std::string name; };
    std::map<std::uint64_t, Decl> decls;
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    // Statements end with ';'. Track line numbers of each statement start.
    std::size_t line = 1, pos = 0;
    bool header_allowed = true;
    while (pos < all.size()) {
        auto end = all.find(';', pos);
        std::string stmt = all.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        const auto first = std::min(stmt.find_first_not_of(" \t\r\n"), stmt.size());
        const auto start_line = line + static_cast<std::size_t>(std::count(stmt.begin(), stmt.begin() + first, '\n'));
        line += static_cast<std::size_t>(std::count(stmt.begin(), stmt.end(), '\n'));
        pos = end == std::string::npos ? all.size() : end + 1;
        std::string name;
        if (auto q = stmt.find('"'); q != std::string::npos) {
            auto q2 = stmt.find('"', q + 1);
            if (q2 == std::string::npos) throw ParseError(start_line, "unterminated name");
            name = stmt.substr(q + 1, q2 - q - 1);
            if (!detail::trim(std::string_view(stmt).substr(q2 + 1)).empty()) throw ParseError(start_line, "text after the name");
            stmt = stmt.substr(0, q);
        }
        std::istringstream ss(stmt);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(t);
        if (tok.empty()) {
            if (end == std::string::npos) break;
            throw ParseError(start_line, "empty statement");
        }
        if (end == std::string::npos) throw ParseError(start_line, "missing ';'");
        if (tok[0] == "parity" || tok[0] == "start") {
            if (!header_allowed && tok[0] == "parity") throw ParseError(start_line, "header after the first vertex");
            if (tok.size() != 2) throw ParseError(start_line, "expected '" + tok[0] + " <n>;'");
            detail::parse_number(start_line, tok[1]);
            continue;
        }
        header_allowed = false;
        if (tok.size() != 4) throw ParseError(start_line, "expected '<id> <priority> <owner> <successors>'");
        const auto id = detail::parse_number(start_line, tok[0]);
        Decl d{start_line, static_cast<unsigned>(detail::parse_number(start_line, tok[1])), Player::Zero, {}, name};
        if (tok[2] != "0" && tok[2] != "1") throw ParseError(start_line, "owner must be 0 or 1");
        d.owner = tok[2] == "0" ? Player::Zero : Player::One;
        for (auto w : detail::parse_ids(start_line, tok[3])) d.succ.push_back(w);
        if (d.name.empty()) d.name = tok[0];
        if (!decls.emplace(id, std::move(d)).second) throw ParseError(start_line, "vertex " + tok[0] + " declared twice");
    }
    if (decls.empty()) throw ParseError(line, "no vertices");

    std::map<std::uint64_t, Vertex> renumber;
    for (const auto& [id, d] : decls) renumber.emplace(id, static_cast<Vertex>(renumber.size()));
    GameSpec spec;
    objective::Parity parity;
    for (const auto& [id, d] : decls) {
        const auto v = spec.graph.add_vertex(d.owner, d.name);
        for (auto w : d.succ) {
            auto it = renumber.find(w);
            if (it == renumber.end()) throw ParseError(d.line, "successor " + std::to_string(w) + " is not a vertex");
            spec.graph.add_edge(v, it->second);
        }
        parity.priority.push_back(d.priority);
    }
    spec.graph = validate(std::move(spec.graph));
    spec.objective = parity;
    return spec;
}

GameSpec
parse_game(std::string_view text)
{
    std::istringstream lines{std::string(text)};
    std::string word;
    for (std::string raw; std::getline(lines, raw);) {
        auto t = detail::strip_comment(raw);
        if (!t.empty()) {
            word = first_word(t);
            break;
        }
    }
    std::istringstream in{std::string(text)};
    if (word == "vertex" || word == "objective" || word == "initial") return read_game(in);
    return read_pg_game(in);
}

GameSpec
load_game(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open game file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_game(buf.str());
}

std::string
write_game(const GameGraph& g, const std::optional<Objective>& objective)
{
    std::ostringstream out;
    for (Vertex v = 0; v < g.size(); ++v) {
        out << "vertex " << v;
        if (v < g.names.size() && !g.names[v].empty()) out << " name " << g.names[v];
        out << " owner " << index(g.owner[v]) << " succ ";
        for (std::size_t i = 0; i < g.succ[v].size(); ++i) out << (i ? "," : "") << g.succ[v][i];
        out << '\n';
    }
    if (objective) out << "objective " << describe(*objective) << '\n';
    if (g.initial) out << "initial " << *g.initial << '\n';
    return out.str();
}

} // namespace omega
