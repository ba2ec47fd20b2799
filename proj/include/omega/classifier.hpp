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

#include <optional>
#include <string>
#include <vector>

#include "omega/automaton.hpp"

namespace omega {

/// Exact position of an omega-regular language in the low Borel hierarchy.
/// Deterministic automata never get past proper Delta3.
enum class BorelLabel {
    Clopen,
    OpenProper,
    ClosedProper,
    Delta2Proper,
    Sigma2Proper,
    Pi2Proper,
    Delta3Proper,
};

inline constexpr BorelLabel kAllBorelLabels[] = {
    BorelLabel::Clopen,       BorelLabel::OpenProper, BorelLabel::ClosedProper, BorelLabel::Delta2Proper,
    BorelLabel::Sigma2Proper, BorelLabel::Pi2Proper,  BorelLabel::Delta3Proper,
};

/// "CLOPEN", "OPEN_PROPER", ... as used in reports.
std::string to_string(BorelLabel label);
std::optional<BorelLabel> parse_borel_label(const std::string& s);

struct Memberships
{
    bool open = false;
    bool closed = false;
    bool sigma2 = false;
    bool pi2 = false;

    bool operator==(const Memberships&) const = default;
};

/// The unique label consistent with the four memberships.
BorelLabel label_of(const Memberships& m);
/// Inverse of label_of.
Memberships memberships_of(BorelLabel label);

/// Two loops C ⊆ C' whose accepting flags break a closure property.
struct LoopPair
{
    StateSet loop;
    StateSet superloop;
    bool loop_accepting = false;
    bool superloop_accepting = false;
};

struct ClassEvidence
{
    /// Accepting loop with a rejecting superloop (language not Pi2).
    std::optional<LoopPair> pi2_violation;
    /// Rejecting loop with an accepting superloop (language not Sigma2).
    std::optional<LoopPair> sigma2_violation;
    /// Accepted word none of whose prefixes has a universal residual.
    std::optional<UPWord> open_counterexample;
    /// Rejected word none of whose prefixes has an empty residual.
    std::optional<UPWord> closed_counterexample;
    /// Loop states refer to the latched normal form (Reach/Safety inputs).
    bool latched = false;
};

struct BorelClassLabel
{
    BorelLabel label = BorelLabel::Clopen;
    Memberships memberships;
    ClassEvidence evidence;
};

enum class CompletenessKind { NotApplicable, SigmaComplete, PiComplete };

struct CompletenessLabel
{
    CompletenessKind kind = CompletenessKind::NotApplicable;
    unsigned level = 0;

    bool operator==(const CompletenessLabel&) const = default;
};

/// "SIGMA_COMPLETE(2)", "PI_COMPLETE(1)" or "NOT_APPLICABLE".
std::string to_string(const CompletenessLabel& c);

/// States all of whose runs are accepting: no rejecting loop is reachable.
StateSet universal_states(const MullerNormalForm& nf);

/// L is open iff it equals the set of words with a prefix reaching a
/// universal state. Decided by language equivalence with that reachability
/// automaton; a failing check leaves a counterexample in `why` if given.
bool is_open(const MullerNormalForm& nf, const Limits& limits = {}, std::optional<UPWord>* why = nullptr);
bool is_closed(const MullerNormalForm& nf, const Limits& limits = {}, std::optional<UPWord>* why = nullptr);

/// Accepting loops closed under superloops (deterministic Buchi recognizable).
bool is_pi2(const MullerNormalForm& nf, std::optional<LoopPair>* why = nullptr);
/// Accepting loops closed under subloops (deterministic co-Buchi recognizable).
bool is_sigma2(const MullerNormalForm& nf, std::optional<LoopPair>* why = nullptr);

BorelClassLabel classify(const DetOmegaAutomaton& a, const Limits& limits = {});

/// Finite antichain X with L = X.A^omega for a clopen L: shortest words
/// first, ties broken by the alphabet's declaration order, {ε} when the
/// whole space is accepted and {} for the empty language. Throws
/// ValidationError when L is not clopen.
std::vector<FiniteWord> clopen_basis(const DetOmegaAutomaton& a, const Limits& limits = {});

/// Reach automaton of X.A^omega (a trie with an accepting and a rejecting sink).
DetOmegaAutomaton prefix_set_automaton(const Alphabet& alphabet, const std::vector<FiniteWord>& basis);

/// Completeness from proper membership: a proper Sigma_n (Pi_n) language is
/// Sigma_n (Pi_n) complete. Both sides use the symmetric criterion.
CompletenessLabel completeness_label(BorelLabel label);

} // namespace omega
