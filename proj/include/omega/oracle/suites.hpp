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

#include <cstdint>
#include <string>
#include <vector>

#include "omega/automaton.hpp"

namespace omega::oracle {

struct SuiteOptions
{
    std::uint64_t seed = 0;
    Limits limits;
    /// Also run every 4-vertex parity game up to renaming (about a minute).
    bool exhaustive_four = true;
};

struct SuiteResult
{
    SuiteResult(int criterion_, std::string name_, std::size_t required_)
        : criterion(criterion_), name(std::move(name_)), required(required_) {}

    int criterion = 0;
    std::string name;
    std::size_t checked = 0;
    /// Minimum number of checks for the run to count.
    std::size_t required = 0;
    std::size_t failures = 0;
    /// First few failure descriptions.
    std::vector<std::string> failure_examples;
    /// Coverage remarks ("labels: CLOPEN=12 ...").
    std::vector<std::string> notes;

    bool passed() const { return failures == 0 && checked >= required; }
    void fail(std::string what);
};

SuiteResult table_structure();
SuiteResult reach_example();
SuiteResult lemma1_upper_bounds(const SuiteOptions& o);
SuiteResult jump_consistency(const SuiteOptions& o);
SuiteResult classifier_agreement(const SuiteOptions& o);
SuiteResult solver_agreement(const SuiteOptions& o);
SuiteResult embedding_soundness(const SuiteOptions& o);
SuiteResult reference_claim(const SuiteOptions& o);
SuiteResult metric_properties();

/// Criteria 1..9 in order.
std::vector<SuiteResult> all_suites(const SuiteOptions& o);

/// "PASS 3 lemma1-upper-bounds (412/400 checks)" and failure lines.
std::string format(const SuiteResult& r);

} // namespace omega::oracle
