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

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace omega {

/// Sorted, duplicate-free set of small indices (states or vertices).
/// Kept as a plain sorted vector so it orders lexicographically and
/// prints in a stable way.
using IndexSet = std::vector<std::uint32_t>;

inline IndexSet make_index_set(std::vector<std::uint32_t> items)
{
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

inline bool contains(const IndexSet& s, std::uint32_t x)
{
    return std::binary_search(s.begin(), s.end(), x);
}

inline bool is_subset(const IndexSet& a, const IndexSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool intersects(const IndexSet& a, const IndexSet& b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

/// Complement of s within 0..n-1.
inline IndexSet complement_of(const IndexSet& s, std::uint32_t n)
{
    IndexSet out;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (!contains(s, i)) out.push_back(i);
    }
    return out;
}

/// Renders as "{0 2 3}".
inline std::string to_string(const IndexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

} // namespace omega
