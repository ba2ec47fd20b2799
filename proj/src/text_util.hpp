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

// Small tokenizing helpers for the text formats.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega/error.hpp"

namespace omega::detail {

inline std::string_view
trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::string_view
strip_comment(std::string_view s)
{
    auto hash = s.find('#');
    if (hash != std::string_view::npos) s = s.substr(0, hash);
    return trim(s);
}

inline std::uint64_t
parse_number(std::size_t line, std::string_view s)
{
    s = trim(s);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(s) + "'");
    }
    return v;
}

/// Ids separated by blanks and/or commas.
inline std::vector<std::uint32_t>
parse_ids(std::size_t line, std::string_view s)
{
    std::vector<std::uint32_t> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == ',' || s[i] == '\t') {
            ++i;
            continue;
        }
        auto j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != ',' && s[j] != '\t') ++j;
        out.push_back(static_cast<std::uint32_t>(parse_number(line, s.substr(i, j - i))));
        i = j;
    }
    return out;
}

/// "{0 1} {2} {}" -> [[0,1],[2],[]]
inline std::vector<std::vector<std::uint32_t>>
parse_braced_sets(std::size_t line, std::string_view s)
{
    std::vector<std::vector<std::uint32_t>> out;
    s = trim(s);
    while (!s.empty()) {
        if (s.front() != '{') throw ParseError(line, "expected '{' to open a state set");
        auto close = s.find('}');
        if (close == std::string_view::npos) throw ParseError(line, "unterminated '{'");
        out.push_back(parse_ids(line, s.substr(1, close - 1)));
        s = trim(s.substr(close + 1));
    }
    return out;
}

/// "0:1 1:2" -> [(0,1),(1,2)]
inline std::vector<std::pair<std::uint32_t, unsigned>>
parse_priority_pairs(std::size_t line, std::string_view s)
{
    std::vector<std::pair<std::uint32_t, unsigned>> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == '\t' || s[i] == ',') {
            ++i;
            continue;
        }
        auto j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != ',') ++j;
        auto tok = s.substr(i, j - i);
        auto colon = tok.find(':');
        if (colon == std::string_view::npos) throw ParseError(line, "expected '<id>:<priority>', got '" + std::string(tok) + "'");
        out.emplace_back(static_cast<std::uint32_t>(parse_number(line, tok.substr(0, colon))),
                         static_cast<unsigned>(parse_number(line, tok.substr(colon + 1))));
        i = j;
    }
    return out;
}

} // namespace omega::detail
