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

#include "omega/expansion.hpp"

#include <algorithm>
#include <cctype>

#include "omega/error.hpp"
#include "omega/fixtures.hpp"

namespace omega {

Level
Level::finite(unsigned n)
{
    if (n == 0) throw ValidationError("finite Borel levels start at 1");
    return Level(Kind::Finite, n);
}

Level
Level::omega_plus(unsigned k)
{
    return Level(Kind::OmegaPlus, k);
}

Level
Level::parse(std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (c != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    auto number = [&](std::string_view digits) -> unsigned {
        if (digits.empty() || digits.size() > 9
            || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw ValidationError("malformed level '" + std::string(text) + "'");
        }
        return static_cast<unsigned>(std::stoul(std::string(digits)));
    };
    if (s == "omega1" || s == "w1" || s == "omega_1") return omega1();
    for (std::string_view stem : {"omega", "w"}) {
        if (s.rfind(stem, 0) != 0) continue;
        std::string_view rest = std::string_view(s).substr(stem.size());
        if (rest.empty()) return omega_plus(0);
        if (rest.front() == '+') return omega_plus(number(rest.substr(1)));
    }
    return finite(number(s));
}

Level
Level::next() const
{
    switch (kind_) {
        case Kind::Finite: return finite(value_ + 1);
        case Kind::OmegaPlus: return omega_plus(value_ + 1);
        case Kind::Omega1: break;
    }
    throw ValidationError("omega_1 has no successor level");
}

std::string
Level::name() const
{
    switch (kind_) {
        case Kind::Finite: return std::to_string(value_);
        case Kind::OmegaPlus: return value_ == 0 ? "Omega" : "OmegaPlus" + std::to_string(value_);
        case Kind::Omega1: return "Omega1";
    }
    return "?";
}

std::strong_ordering
Level::operator<=>(const Level& other) const
{
    if (kind_ != other.kind_) return static_cast<int>(kind_) <=> static_cast<int>(other.kind_);
    return value_ <=> other.value_;
}

std::string
ClassRef::name() const
{
    static const char* sides[] = {"Sigma", "Pi", "Delta"};
    return sides[static_cast<int>(side)] + level.name();
}

std::strong_ordering
ClassRef::operator<=>(const ClassRef& other) const
{
    if (auto c = level <=> other.level; c != 0) return c;
    return static_cast<int>(side) <=> static_cast<int>(other.side);
}

std::optional<Side>
parse_side(std::string_view text)
{
    std::string s;
    for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "sigma" || s == "s") return Side::Sigma;
    if (s == "pi" || s == "p") return Side::Pi;
    if (s == "delta" || s == "d") return Side::Delta;
    return std::nullopt;
}

std::vector<ClassRef>
predict_jump(const ClassRef& c)
{
    if (c.side == Side::Delta) {
        auto out = predict_jump({Side::Sigma, c.level});
        auto pi = predict_jump({Side::Pi, c.level});
        out.insert(out.end(), pi.begin(), pi.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    if (!c.level.is_finite()) return {c};
    const bool odd = c.level.value() % 2 == 1;
    const bool moves = (c.side == Side::Sigma) == odd;
    return {moves ? ClassRef{c.side, c.level.next()} : c};
}

bool
class_leq(BorelLabel label, const ClassRef& c)
{
    const auto m = memberships_of(label);
    // Every deterministic omega-regular language is a Boolean combination of
    // Sigma2 sets, hence in Delta3 and everything above it.
    if (!c.level.is_finite() || c.level.value() >= 3) return true;
    const bool sigma = c.level.value() == 1 ? m.open : m.sigma2;
    const bool pi = c.level.value() == 1 ? m.closed : m.pi2;
    switch (c.side) {
        case Side::Sigma: return sigma;
        case Side::Pi: return pi;
        case Side::Delta: return sigma && pi;
    }
    return false;
}

std::vector<ClassRef>
tightest_classes(BorelLabel label)
{
    const auto one = Level::finite(1), two = Level::finite(2), three = Level::finite(3);
    switch (label) {
        case BorelLabel::Clopen: return {{Side::Delta, one}};
        case BorelLabel::OpenProper: return {{Side::Sigma, one}};
        case BorelLabel::ClosedProper: return {{Side::Pi, one}};
        case BorelLabel::Delta2Proper: return {{Side::Delta, two}};
        case BorelLabel::Sigma2Proper: return {{Side::Sigma, two}};
        case BorelLabel::Pi2Proper: return {{Side::Pi, two}};
        case BorelLabel::Delta3Proper: return {{Side::Delta, three}};
    }
    return {};
}

DetOmegaAutomaton
embed(const DetOmegaAutomaton& a, const Alphabet& superset, const Limits& limits)
{
    if (!a.alphabet.is_subset_of(superset)) {
        throw AlphabetMismatch("{" + superset.to_string() + "} does not contain {" + a.alphabet.to_string() + "}");
    }
    const auto nf = to_muller_normal_form(a, limits);
    const auto& m = nf.automaton;
    const auto sink = static_cast<State>(m.num_states);

    // no family member contains the sink, so every word that ever uses a new
    // letter is rejected
    auto out = DetOmegaAutomaton::with_states(superset, m.num_states + 1, m.acceptance);
    out.initial = m.initial;
    for (Letter b = 0; b < superset.size(); ++b) {
        const auto old = a.alphabet.index_of(superset.symbol(b));
        for (State q = 0; q < m.num_states; ++q) out.set(q, b, old ? m.next(q, *old) : sink);
        out.set(sink, b, sink);
    }
    return out;
}

const std::vector<ReferenceClaim>&
reference_claims()
{
    static const std::vector<ReferenceClaim> claims{
        {"alternating-prefix open set", fixtures::alternating_prefix_open_set(), BorelLabel::Sigma2Proper,
         "the open set {ab, abab, ababab, ...}.{a,b}^w is claimed to be complete for Sigma2 in B^w "
         "once the alphabet grows to B = {a,b,c}"},
    };
    return claims;
}

JumpReport
jump_report(const DetOmegaAutomaton& a, const Alphabet& superset, const Limits& limits)
{
    JumpReport r;
    r.before = classify(a, limits);
    r.after = classify(embed(a, superset, limits), limits);
    for (const auto& c : tightest_classes(r.before.label)) {
        auto p = predict_jump(c);
        r.predicted.insert(r.predicted.end(), p.begin(), p.end());
    }
    std::sort(r.predicted.begin(), r.predicted.end());
    r.predicted.erase(std::unique(r.predicted.begin(), r.predicted.end()), r.predicted.end());
    r.consistent = std::all_of(r.predicted.begin(), r.predicted.end(),
                               [&](const ClassRef& c) { return class_leq(r.after.label, c); });

    const bool grows = superset.size() > a.alphabet.size();
    for (const auto& claim : reference_claims()) {
        if (!grows || !(claim.automaton.alphabet == a.alphabet)) continue;
        if (!equivalent(a, claim.automaton, limits).equivalent) continue;
        r.claimed_label = claim.claimed_after;
        r.claim_disagreement = r.after.label != claim.claimed_after;
        r.paper_claim_note = claim.name + ": " + claim.statement + "; claimed label " + to_string(claim.claimed_after)
                             + ", computed label " + to_string(r.after.label)
                             + (r.claim_disagreement ? " (disagreement)" : " (agreement)");
        break;
    }
    return r;
}

HierarchyTable
hierarchy_table(unsigned max_finite_level)
{
    if (max_finite_level == 0) throw ValidationError("the table needs at least one finite level");
    HierarchyTable t;
    for (unsigned n = 1; n <= max_finite_level; ++n) t.columns.push_back(Level::finite(n));
    t.columns.push_back(Level::omega_plus(0));
    t.columns.push_back(Level::omega_plus(1));
    t.columns.push_back(Level::omega1());
    for (auto side : {Side::Sigma, Side::Pi}) {
        for (const auto& level : t.columns) {
            ClassRef from{side, level};
            auto to = predict_jump(from).front();
            const bool in_table = std::find(t.columns.begin(), t.columns.end(), to.level) != t.columns.end();
            t.entries.push_back({from, to, to == from, in_table});
        }
    }
    return t;
}

} // namespace omega
