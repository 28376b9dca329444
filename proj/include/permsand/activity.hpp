#pragma once

#include <map>
#include <vector>

#include "permsand/graph.hpp"
#include "permsand/polynomial.hpp"
#include "permsand/trees.hpp"

namespace permsand {

// Total order on the edge set of a graph; ranks are the distinct
// positions 1..|E|, rank 1 being the smallest edge.
struct EdgeOrder {
    std::map<Edge, int> rank;

    int rank_of(const Edge& e) const;
    bool operator==(const EdgeOrder&) const = default;
};

// Tree-dependent order: visit vertices by height (largest label first
// within a height) and append each visited vertex's edges to unvisited
// neighbors, larger neighbor first; later edges are larger in the order.
EdgeOrder bfs_edge_order(const PermutationGraph& g, const RootedTree& rt);

// Edges of the unique cycle in T + e, including e itself.
std::vector<Edge> fundamental_cycle(const LabeledTree& T, const Edge& e);

// Edges of g crossing the cut left by deleting the tree edge e from T,
// including e itself.
std::vector<Edge> fundamental_cocycle(const PermutationGraph& g, const LabeledTree& T,
                                      const Edge& e);

// Number of non-tree edges maximal in their fundamental cycle.
int external_activity(const PermutationGraph& g, const LabeledTree& T, const EdgeOrder& ord);

// Number of tree edges maximal in their fundamental cocycle.
int internal_activity(const PermutationGraph& g, const LabeledTree& T, const EdgeOrder& ord);

// Sum over all edge subsets of (x-1)^(cc-1) (y-1)^(cc+|S|-|V|).
BivariatePolynomial tutte_subset_expansion(const PermutationGraph& g, int guard_edges = 20);

// Standard recursion on a multigraph: loops contribute y, bridges x,
// anything else splits into delete + contract.
BivariatePolynomial tutte_deletion_contraction(const PermutationGraph& g);

// Sum over spanning trees of x^int y^ext where both activities use the
// tree's own breadth-first edge order rooted at the sink.
BivariatePolynomial tutte_via_activities(const PermutationGraph& g, int sink);

// Pairs (i,j) with i > j and j a proper ancestor of i.
int tree_inversions(const RootedTree& rt);

}  // namespace permsand
