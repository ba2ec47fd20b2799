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

// Internal graph helpers shared by the automaton and game modules.

#include <cstdint>
#include <vector>

namespace omega::detail {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

/// Strongly connected components of the subgraph induced by `in` (all nodes
/// when `in` is empty). Components come out in reverse topological order.
std::vector<std::vector<std::uint32_t>> strongly_connected_components(const Adjacency& succ,
                                                                      const std::vector<char>& in = {});

/// True iff the component has an internal edge (size > 1 or a self-loop).
bool is_nontrivial(const Adjacency& succ, const std::vector<std::uint32_t>& component);

/// Nodes reachable from `sources` inside `in`.
std::vector<char> reachable_from(const Adjacency& succ, const std::vector<std::uint32_t>& sources,
                                 const std::vector<char>& in = {});

} // namespace omega::detail
