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

#include "graph_util.hpp"

#include <algorithm>

namespace omega::detail {

std::vector<std::vector<std::uint32_t>>
strongly_connected_components(const Adjacency& succ, const std::vector<char>& in)
{
    const auto n = static_cast<std::uint32_t>(succ.size());
    auto inside = [&](std::uint32_t v) { return in.empty() || in[v]; };

    constexpr std::uint32_t unvisited = ~0u;
    std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<std::uint32_t> stack;
    std::vector<std::vector<std::uint32_t>> out;
    std::uint32_t counter = 0;

    // iterative Tarjan; frames hold (node, next edge position)
    std::vector<std::pair<std::uint32_t, std::size_t>> frames;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (!inside(root) || index[root] != unvisited) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos < succ[v].size()) {
                const auto w = succ[v][pos++];
                if (!inside(w)) continue;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<std::uint32_t> comp;
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
            const auto done = v;
            frames.pop_back();
            if (!frames.empty()) {
                auto parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
        }
    }
    return out;
}

bool
is_nontrivial(const Adjacency& succ, const std::vector<std::uint32_t>& component)
{
    if (component.size() > 1) return true;
    const auto v = component.front();
    return std::find(succ[v].begin(), succ[v].end(), v) != succ[v].end();
}

std::vector<char>
reachable_from(const Adjacency& succ, const std::vector<std::uint32_t>& sources, const std::vector<char>& in)
{
    std::vector<char> seen(succ.size(), 0);
    std::vector<std::uint32_t> work;
    for (auto s : sources) {
        if ((in.empty() || in[s]) && !seen[s]) {
            seen[s] = 1;
            work.push_back(s);
        }
    }
    while (!work.empty()) {
        auto v = work.back();
        work.pop_back();
        for (auto w : succ[v]) {
            if (seen[w] || !(in.empty() || in[w])) continue;
            seen[w] = 1;
            work.push_back(w);
        }
    }
    return seen;
}

} // namespace omega::detail
