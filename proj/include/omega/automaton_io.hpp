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
#include <string>
#include <string_view>

#include "omega/automaton.hpp"

namespace omega {

/// Reads the line-oriented automaton format:
///
///     alphabet: a b c
///     states: 4
///     initial: 0
///     acceptance: muller {2} {1 2}
///     trans: 0 a 1
///
/// `#` starts a comment. Acceptance is one of `reach`, `safety`, `buchi`,
/// `cobuchi` (followed by state ids), `parity q:p ...` or `muller {..} ...`.
/// Every (state, symbol) pair must be given exactly once. Syntax errors
/// throw ParseError with the line number; structural ones ValidationError.
DetOmegaAutomaton read_automaton(std::istream& in);
DetOmegaAutomaton parse_automaton(std::string_view text);
DetOmegaAutomaton load_automaton(const std::string& path);

/// Writes the format read by read_automaton.
std::string write_automaton(const DetOmegaAutomaton& a);

} // namespace omega
