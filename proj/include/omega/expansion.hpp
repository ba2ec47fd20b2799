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

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omega/automaton.hpp"
#include "omega/classifier.hpp"

namespace omega {

/// Countable level of the Borel hierarchy: a finite n >= 1, omega + k, or the
/// symbolic omega_1 (display only).
class Level
{
public:
    enum class Kind { Finite, OmegaPlus, Omega1 };

    static Level finite(unsigned n);
    static Level omega_plus(unsigned k = 0);
    static Level omega1() { return Level(Kind::Omega1, 0); }

    /// "3", "omega", "omega+2", "omega1" (case-insensitive "w" also accepted
    /// for omega). Throws ValidationError on anything else.
    static Level parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    /// n for finite levels, k for omega + k.
    unsigned value() const { return value_; }

    /// Successor level; omega_1 has none.
    Level next() const;

    /// "1", "Omega", "OmegaPlus1", "Omega1".
    std::string name() const;

    bool operator==(const Level&) const = default;
    std::strong_ordering operator<=>(const Level& other) const;

private:
    Level(Kind kind, unsigned value) : kind_(kind), value_(value) {}

    Kind kind_;
    unsigned value_;
};

enum class Side { Sigma, Pi, Delta };

struct ClassRef
{
    Side side;
    Level level;

    /// "Sigma2", "PiOmega", "DeltaOmegaPlus1", "SigmaOmega1".
    std::string name() const;

    bool operator==(const ClassRef&) const = default;
    std::strong_ordering operator<=>(const ClassRef& other) const;
};

std::optional<Side> parse_side(std::string_view text);

/// Class of the same set once the alphabet grows: odd Sigma and even Pi
/// levels move up by one, odd Pi and even Sigma levels stay, transfinite
/// levels stay. A Delta class obeys both rules. Returned sorted.
std::vector<ClassRef> predict_jump(const ClassRef& c);

/// Whether every language with this exact label lies in class c.
bool class_leq(BorelLabel label, const ClassRef& c);

/// The tightest classes containing a language with this label.
std::vector<ClassRef> tightest_classes(BorelLabel label);

/// Same words viewed over the superset alphabet: the normal form plus one
/// absorbing rejecting sink that every new letter leads to.
/// Throws AlphabetMismatch unless B contains every symbol of a's alphabet.
DetOmegaAutomaton embed(const DetOmegaAutomaton& a, const Alphabet& superset, const Limits& limits = {});

/// A set whose class after expansion was asserted in the literature and that
/// jump reports single out.
struct ReferenceClaim
{
    std::string name;
    DetOmegaAutomaton automaton;
    BorelLabel claimed_after;
    std::string statement;
};

/// Built-in reference claims (currently the alternating-prefix open set
/// {ab, abab, ababab, ...}.{a,b}^omega, claimed Sigma2-complete over {a,b,c}).
const std::vector<ReferenceClaim>& reference_claims();

struct JumpReport
{
    BorelClassLabel before;
    BorelClassLabel after;
    /// Upper bounds for `after` predicted from the classes of `before`.
    std::vector<ClassRef> predicted;
    bool consistent = false;
    /// Set when the input matches a reference claim.
    std::optional<std::string> paper_claim_note;
    std::optional<BorelLabel> claimed_label;
    /// True iff a claim applies and the computed label differs from it.
    bool claim_disagreement = false;
};

JumpReport jump_report(const DetOmegaAutomaton& a, const Alphabet& superset, const Limits& limits = {});

struct TableEntry
{
    ClassRef from;
    ClassRef to;
    bool stays = false;
    /// Whether `to` is one of the table's columns.
    bool in_table = false;
};

struct HierarchyTable
{
    std::vector<Level> columns;
    /// Sigma row first, then Pi, each in column order.
    std::vector<TableEntry> entries;
};

/// Columns 1..max_finite_level followed by omega, omega+1 and omega_1.
HierarchyTable hierarchy_table(unsigned max_finite_level);

} // namespace omega
