#pragma once

#include <vector>

#include "permsand/permutation.hpp"

namespace permsand {

// Inversion graph of a permutation: vertex set [n], one edge {a,b} per
// inversion (b precedes a in the word, b > a).
struct PermutationGraph {
    Permutation source;
    int n = 0;
    std::vector<Edge> edges;             // sorted
    std::vector<std::vector<int>> adj;   // 1-based, adj[0] unused, each sorted
    std::vector<int> degree;             // 1-based

    bool has_edge(int a, int b) const;
    int edge_count() const { return static_cast<int>(edges.size()); }
};

PermutationGraph build_perm_graph(const Permutation& p);

bool is_connected(const PermutationGraph& g);

}  // namespace permsand
