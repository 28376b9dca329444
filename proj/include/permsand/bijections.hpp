#pragma once

#include <vector>

#include "permsand/graph.hpp"
#include "permsand/sandpile.hpp"
#include "permsand/trees.hpp"

namespace permsand {

// Per-vertex neighbor counts of a spanning tree rooted at the sink, split
// by height: lambda counts neighbors strictly farther from the root, mu
// neighbors at the same height, nu neighbors one step closer whose label
// is below the parent. All vectors are 1-based.
struct TreeWeights {
    std::vector<int> lambda, mu, nu;

    bool operator==(const TreeWeights&) const = default;
};

TreeWeights tree_weights(const PermutationGraph& g, const RootedTree& rt);

// Tree -> recurrent configuration: grain count lambda + mu + nu per
// vertex. The canonical toppling of the result is the breadth-first
// height partition of the tree.
Configuration tree_to_config(const PermutationGraph& g, const RootedTree& rt);

// Inverse map: rebuilds the tree from the canonical toppling, attaching
// each vertex to an eligible neighbor in the previous round selected by
// its leftover grain count. Throws if c is not recurrent.
RootedTree config_to_tree(const PermutationGraph& g, const Configuration& c);

// sum(mu)/2 + sum(nu); equals the level of tree_to_config's output.
int level_via_weights(const TreeWeights& w);

// Single-descent specialization: the same lambda written per side, and a
// mirrored closeness count for nu (vertices one level up with label
// strictly between parent and child). mu is identically zero there.
TreeWeights ferrers_weights(const PermutationGraph& g, const RootedTree& rt);

// Sink block first, no inversion inside a block, every element has an
// inversion partner in the previous block.
bool is_compatible_partition(const Permutation& p, int sink, const OrderedPartition& P);

// Minimal recurrent configuration -> its canonical toppling.
OrderedPartition minrec_to_partition(const PermutationGraph& g, const Configuration& c);

// Compatible partition -> minimal recurrent configuration, via the
// min-parent tree.
Configuration partition_to_minrec(const PermutationGraph& g, const OrderedPartition& P);

// Second enumeration route for the recurrent set: image of the spanning
// trees under tree_to_config. Sorted.
std::vector<Configuration> recurrent_via_trees(const PermutationGraph& g, int sink);

}  // namespace permsand
