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


#include "omega/report.hpp"

#include <sstream>

namespace omega {

const char* const kCompletenessNote =
    "completeness read symmetrically: proper Sigma_n (in Sigma_n, not in Pi_n) is Sigma_n-complete, "
    "proper Pi_n likewise";

namespace {

Json
loop_pair_json(const LoopPair& p)
{
    return Json{{"loop", p.loop}, {"loop_accepting", p.loop_accepting},
                {"superloop", p.superloop}, {"superloop_accepting", p.superloop_accepting}};
}

Json
names_of(const GameGraph& g, const VertexSet& s)
{
    Json out = Json::array();
    for (auto v : s) out.push_back(g.name(v));
    return out;
}

Json
strategy_json(const GameGraph& g, const VertexSet& region, const Strategy& s)
{
    if (const auto* pos = std::get_if<PositionalStrategy>(&s)) {
        Json out = Json::object();
        for (auto v : region) {
            if (v < pos->move.size() && pos->move[v] != kNoVertex) out[g.name(v)] = g.name(pos->move[v]);
        }
        return out;
    }
    const auto& mem = std::get<LARStrategy>(s);
    Json moves = Json::array();
    for (Vertex m = 0; m < mem.move.size(); ++m) {
        if (mem.move[m] == kNoVertex || !contains(region, mem.lar->projection[m])) continue;
        Json rec = Json::array();
        for (auto v : mem.lar->record[m]) rec.push_back(g.name(v));
        moves.push_back({{"record", rec}, {"hit", mem.lar->hit[m]}, {"move", g.name(mem.next_move(m))}});
    }
    return Json{{"memory", "latest-appearance-record"}, {"memory_states", mem.memory_size()}, {"moves", moves}};
}

void
strategy_text(std::ostream& out, const GameGraph& g, const VertexSet& region, const Strategy& s)
{
    if (const auto* pos = std::get_if<PositionalStrategy>(&s)) {
        bool any = false;
        for (auto v : region) {
            if (v < pos->move.size() && pos->move[v] != kNoVertex) {
                out << ' ' << g.name(v) << "->" << g.name(pos->move[v]);
                any = true;
            }
        }
        if (!any) out << " (no choices)";
        out << '\n';
        return;
    }
    const auto& mem = std::get<LARStrategy>(s);
    out << " latest-appearance-record memory, " << mem.memory_size() << " states\n";
    for (Vertex m = 0; m < mem.move.size(); ++m) {
        if (mem.move[m] == kNoVertex || !contains(region, mem.lar->projection[m])) continue;
        out << "    [";
        for (std::size_t i = 0; i < mem.lar->record[m].size(); ++i) {
            out << (i ? " " : "") << g.name(mem.lar->record[m][i]);
        }
        out << "] hit " << mem.lar->hit[m] << " -> " << g.name(mem.next_move(m)) << '\n';
    }
}

std::string
set_text(const GameGraph& g, const VertexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + g.name(s[i]);
    return out + "}";
}

} // namespace

Json
to_json(const BorelClassLabel& c)
{
    Json evidence = Json::object();
    const auto& e = c.evidence;
    if (e.pi2_violation) evidence["pi2_violation"] = loop_pair_json(*e.pi2_violation);
    if (e.sigma2_violation) evidence["sigma2_violation"] = loop_pair_json(*e.sigma2_violation);
    if (e.open_counterexample) evidence["open_counterexample"] = e.open_counterexample->to_string();
    if (e.closed_counterexample) evidence["closed_counterexample"] = e.closed_counterexample->to_string();
    evidence["latched"] = e.latched;
    return Json{
        {"label", to_string(c.label)},
        {"memberships", {{"open", c.memberships.open}, {"closed", c.memberships.closed},
                         {"sigma2", c.memberships.sigma2}, {"pi2", c.memberships.pi2}}},
        {"completeness", to_string(completeness_label(c.label))},
        {"completeness_note", kCompletenessNote},
        {"evidence", evidence},
    };
}

std::string
to_text(const BorelClassLabel& c)
{
    std::ostringstream out;
    const auto& m = c.memberships;
    out << "label: " << to_string(c.label) << '\n'
        << "open: " << m.open << "  closed: " << m.closed << "  sigma2: " << m.sigma2 << "  pi2: " << m.pi2 << '\n'
        << "completeness: " << to_string(completeness_label(c.label)) << '\n'
        << "note: " << kCompletenessNote << '\n';
    const auto& e = c.evidence;
    const char* where = e.latched ? " (latched states)" : "";
    if (e.open_counterexample) out << "not open: " << e.open_counterexample->to_string() << " is accepted, no prefix forces acceptance\n";
    if (e.closed_counterexample) out << "not closed: " << e.closed_counterexample->to_string() << " is rejected, no prefix forces rejection\n";
    if (e.pi2_violation) {
        out << "not pi2: accepting loop " << to_string(e.pi2_violation->loop) << " inside rejecting loop "
            << to_string(e.pi2_violation->superloop) << where << '\n';
    }
    if (e.sigma2_violation) {
        out << "not sigma2: rejecting loop " << to_string(e.sigma2_violation->loop) << " inside accepting loop "
            << to_string(e.sigma2_violation->superloop) << where << '\n';
    }
    return out.str();
}

Json
to_json(const JumpReport& r)
{
    Json predicted = Json::array();
    for (const auto& c : r.predicted) predicted.push_back(c.name());
    Json out{
        {"before", to_string(r.before.label)},
        {"after", to_string(r.after.label)},
        {"predicted", predicted},
        {"consistent", r.consistent},
        {"paper_claim_note", r.paper_claim_note ? Json(*r.paper_claim_note) : Json(nullptr)},
    };
    if (r.claimed_label) {
        out["claimed_label"] = to_string(*r.claimed_label);
        out["claim_disagreement"] = r.claim_disagreement;
    }
    return out;
}

std::string
to_text(const JumpReport& r)
{
    std::ostringstream out;
    out << "before: " << to_string(r.before.label) << '\n' << "after: " << to_string(r.after.label) << '\n' << "predicted:";
    for (const auto& c : r.predicted) out << ' ' << c.name();
    out << "\nconsistent: " << (r.consistent ? "yes" : "no") << '\n';
    if (r.paper_claim_note) {
        out << "claim: " << *r.paper_claim_note << '\n'
            << "claimed label: " << to_string(*r.claimed_label) << ", computed: " << to_string(r.after.label)
            << (r.claim_disagreement ? " (disagree)" : " (agree)") << '\n';
    }
    return out.str();
}

Json
to_json(const HierarchyTable& t)
{
    Json cols = Json::array();
    for (const auto& l : t.columns) cols.push_back(l.name());
    Json entries = Json::array();
    Json arrows = Json::array();
    Json self_loops = Json::array();
    for (const auto& e : t.entries) {
        entries.push_back({{"from", e.from.name()}, {"to", e.to.name()}, {"stays", e.stays}, {"in_table", e.in_table}});
        if (e.stays) self_loops.push_back(e.from.name());
        else if (e.in_table) arrows.push_back(Json::array({e.from.name(), e.to.name()}));
    }
    return Json{{"columns", cols}, {"arrows", arrows}, {"self_loops", self_loops}, {"entries", entries}};
}

std::string
to_text(const HierarchyTable& t)
{
    std::ostringstream out;
    for (const auto& e : t.entries) {
        out << e.from.name() << ' ';
        if (e.stays) out << "= " << e.to.name();
        else out << "-> " << e.to.name() << (e.in_table ? "" : " (beyond table)");
        out << '\n';
    }
    return out.str();
}

Json
to_json(const SolveReport& r)
{
    const auto& g = r.graph;
    Json out{
        {"objective", describe(r.objective)},
        {"win0", names_of(g, r.result.win0)},
        {"win1", names_of(g, r.result.win1)},
        {"strategy0", strategy_json(g, r.result.win0, r.result.strategy0)},
        {"strategy1", strategy_json(g, r.result.win1, r.result.strategy1)},
        {"verified", r.verified},
        {"convention", r.convention ? Json(to_string(*r.convention)) : Json(nullptr)},
    };
    if (g.initial) out["initial_winner"] = r.result.wins(Player::Zero, *g.initial) ? 0 : 1;
    return out;
}

std::string
to_text(const SolveReport& r)
{
    const auto& g = r.graph;
    std::ostringstream out;
    out << "objective: " << describe(r.objective) << '\n';
    if (r.convention) out << "convention: " << to_string(*r.convention) << '\n';
    out << "win0: " << set_text(g, r.result.win0) << '\n' << "win1: " << set_text(g, r.result.win1) << '\n';
    out << "strategy0:";
    strategy_text(out, g, r.result.win0, r.result.strategy0);
    out << "strategy1:";
    strategy_text(out, g, r.result.win1, r.result.strategy1);
    if (g.initial) {
        out << "initial " << g.name(*g.initial) << " won by player " << (r.result.wins(Player::Zero, *g.initial) ? 0 : 1) << '\n';
    }
    out << "verified: " << (r.verified ? "yes" : "no") << '\n';
    return out.str();
}

} // namespace omega
