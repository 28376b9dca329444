#pragma once

#include <tuple>
#include <vector>

#include "permsand/graph.hpp"

namespace permsand {

// Labeled tree on [n]: exactly n-1 edges, connected.
struct LabeledTree {
    int n = 0;
    std::vector<Edge> edges;  // sorted

    bool operator==(const LabeledTree&) const = default;
    bool operator<(const LabeledTree& o) const {
        return std::tie(n, edges) < std::tie(o.n, o.edges);
    }
};

// Validates and normalizes; throws std::invalid_argument if the edges do
// not form a tree on [n].
LabeledTree make_tree(int n, std::vector<Edge> edges);

struct RootedTree {
    int n = 0;
    int root = 0;
    std::vector<Edge> edges;   // underlying tree edges, sorted
    std::vector<int> parent;   // 1-based; parent[root] = 0
    std::vector<int> height;   // 1-based; height[root] = 0

    LabeledTree tree() const { return LabeledTree{n, edges}; }
    int max_height() const;
    // Vertices grouped by height, each group ascending: fiber 0 is {root}.
    std::vector<std::vector<int>> height_fibers() const;

    bool operator==(const RootedTree&) const = default;
};

// Tier maps are 1-based vectors of size n+1 with index 0 unused.
struct TieredTree {
    LabeledTree tree;
    std::vector<int> tiering;
};

// True iff t is surjective onto {1..k} for some k and every edge (i,j)
// with i > j satisfies t(i) < t(j).
bool is_tiering(const LabeledTree& T, const std::vector<int>& t);

// Refines a valid tiering into a bijective one: tiers keep their relative
// order and vertices inside a tier are ordered increasingly. Throws on an
// invalid input tiering.
std::vector<int> fully_tier(const LabeledTree& T, const std::vector<int>& t);

// True iff every edge of T is an inversion of p, i.e. T spans the
// inversion graph of p.
bool is_spanning_tiered(const LabeledTree& T, const Permutation& p);

// Exact spanning-tree count via fraction-free integer elimination of a
// reduced Laplacian.
long long spanning_tree_count(const PermutationGraph& g);

// All spanning trees by recursive include/exclude over edges with a
// connectivity (bridge) shortcut on the exclude branch.
std::vector<LabeledTree> enumerate_spanning_trees(const PermutationGraph& g,
                                                  int guard_edges = 24);

// Naive second route: filter all (n-1)-subsets of the edge set.
std::vector<LabeledTree> enumerate_spanning_trees_naive(const PermutationGraph& g);

RootedTree root_at(const LabeledTree& T, int s);

}  // namespace permsand
