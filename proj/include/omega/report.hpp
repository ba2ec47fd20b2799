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

#include <json.hpp>

#include "omega/classifier.hpp"
#include "omega/expansion.hpp"
#include "omega/game.hpp"

namespace omega {

using Json = nlohmann::ordered_json;

/// Note printed with every completeness verdict.
extern const char* const kCompletenessNote;

Json to_json(const BorelClassLabel& c);
std::string to_text(const BorelClassLabel& c);

Json to_json(const JumpReport& r);
std::string to_text(const JumpReport& r);

Json to_json(const HierarchyTable& t);
/// One row per side, one cell per column: "->Sigma2" for a jump, "=" when
/// the class stays.
std::string to_text(const HierarchyTable& t);

struct SolveReport
{
    const GameGraph& graph;
    const Objective& objective;
    const SolveResult& result;
    bool verified = false;
    std::optional<LiftConvention> convention;
};

Json to_json(const SolveReport& r);
std::string to_text(const SolveReport& r);

} // namespace omega
