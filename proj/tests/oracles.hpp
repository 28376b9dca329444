// Test-only reference implementations, kept independent of the library
// code paths they are used to check.
#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "permsand/graph.hpp"
#include "permsand/sandpile.hpp"
#include "permsand/trees.hpp"

namespace oracle {

// Inversions straight from the definition, on the raw word.
inline std::set<std::pair<int, int>> inversion_pairs(const std::vector<int>& word) {
    std::set<std::pair<int, int>> out;
    for (size_t i = 0; i < word.size(); ++i)
        for (size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) out.insert({word[i], word[j]});
    return out;
}

// Depth-first connectivity over an explicit edge list.
inline bool connected(int n, const std::vector<permsand::Edge>& edges) {
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n + 1);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int visited = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
    }
    return visited == n;
}

// One toppling at a time, never the sink; the slow route for stabilize.
inline permsand::Configuration stabilize_stepwise(const permsand::PermutationGraph& g,
                                                  permsand::Configuration c) {
    while (true) {
        int unstable = 0;
        for (int v = 1; v <= g.n; ++v)
            if (v != c.sink && c.grains[v] >= g.degree[v]) {
                unstable = v;
                break;
            }
        if (unstable == 0) return c;
        c.grains[unstable] -= g.degree[unstable];
        for (int u : g.adj[unstable]) ++c.grains[u];
    }
}

// All labeled trees on [n] decoded from their length-(n-2) sequences over [n].
inline std::vector<permsand::LabeledTree> all_labeled_trees(int n) {
    using permsand::Edge;
    std::vector<permsand::LabeledTree> out;
    if (n == 1) {
        out.push_back(permsand::LabeledTree{1, {}});
        return out;
    }
    if (n == 2) {
        out.push_back(permsand::make_tree(2, {Edge{1, 2}}));
        return out;
    }
    std::vector<int> code(n - 2, 1);
    while (true) {
        std::vector<int> deg(n + 1, 1);
        for (int v : code) ++deg[v];
        std::vector<Edge> edges;
        std::vector<int> work = code;
        std::set<int> leaves;
        for (int v = 1; v <= n; ++v)
            if (deg[v] == 1) leaves.insert(v);
        for (int v : work) {
            const int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.push_back(permsand::make_edge(leaf, v));
            if (--deg[v] == 1) leaves.insert(v);
        }
        const int a = *leaves.begin();
        const int b = *std::next(leaves.begin());
        edges.push_back(permsand::make_edge(a, b));
        out.push_back(permsand::make_tree(n, std::move(edges)));

        int pos = n - 3;
        while (pos >= 0 && code[pos] == n) --pos;
        if (pos < 0) break;
        ++code[pos];
        for (int i = pos + 1; i < n - 2; ++i) code[i] = 1;
    }
    return out;
}

// Every ordered set partition of the given elements, each prefixed by the
// fixed first block.
inline std::vector<permsand::OrderedPartition> ordered_partitions_with_first(
    int first, std::vector<int> rest) {
    std::vector<permsand::OrderedPartition> out;
    std::vector<std::vector<int>> parts{{first}};
    auto extend = [&](auto&& self, const std::vector<int>& remaining) -> void {
        if (remaining.empty()) {
            out.push_back(permsand::OrderedPartition{parts});
            return;
        }
        const int m = static_cast<int>(remaining.size());
        for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
            std::vector<int> block, left;
            for (int i = 0; i < m; ++i)
                (mask & (1UL << i) ? block : left).push_back(remaining[i]);
            parts.push_back(block);
            self(self, left);
            parts.pop_back();
        }
    };
    extend(extend, rest);
    return out;
}

}  // namespace oracle
