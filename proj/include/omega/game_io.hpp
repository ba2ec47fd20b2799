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

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "omega/game.hpp"

namespace omega {

struct GameSpec
{
    GameGraph graph;
    std::optional<Objective> objective;
};

/// Reads the line-oriented arena format:
///
///     vertex 0 name v0 owner 0 succ 1,2
///     vertex 1 owner 1 succ 3
///     objective reach 3
///     initial 0
///
/// Objectives: `reach`, `safety`, `buchi`, `cobuchi` followed by vertex
/// ids, `parity <id>:<priority> ...` or `muller {0 1} {2} ...`. Vertex ids
/// must be 0..n-1, each declared once.
GameSpec read_game(std::istream& in);

/// Reads the common min-parity line format
///
///     parity 3;
///     0 1 0 1,2 "v0";
///
/// (`<id> <priority> <owner> <successors> ["name"];`, header optional).
/// Ids are renumbered in increasing order; unnamed vertices keep their old
/// id as name.
GameSpec read_pg_game(std::istream& in);

/// Picks read_game or read_pg_game from the first meaningful line.
GameSpec parse_game(std::string_view text);
GameSpec load_game(const std::string& path);

std::string write_game(const GameGraph& g, const std::optional<Objective>& objective = std::nullopt);

} // namespace omega
