#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permsand/activity.hpp"

namespace permsand {

using Cell = std::pair<int, int>;  // (row, col), 1-based, (1,1) the northwest corner

// n x n dotted grid: the permutation's leaf dots (one per row and column,
// at (value, position)) plus internal dots.
struct DotGrid {
    int n = 0;
    std::set<Cell> leaves;
    std::set<Cell> internals;

    std::set<Cell> all_dots() const;

    bool operator==(const DotGrid&) const = default;
    bool operator<(const DotGrid& o) const;
};

DotGrid leaf_grid(const Permutation& p);

// Dotted filling of a rows x cols rectangle where every row and column is
// hit and every dot except the top-left one has a dot above or to its
// left, but not both.
bool is_nab(int rows, int cols, const std::set<Cell>& dots);

// Additionally every dot has either a dot below and one to its right, or
// neither.
bool is_complete_nab(int rows, int cols, const std::set<Cell>& dots);

bool is_cnab(const DotGrid& M);

// Leaf dots plus n-1 internal dots, each internal dot having some dot
// strictly below in its column and strictly to its right in its row, such
// that joining every internal dot to its nearest dot below and nearest
// dot to the right yields a tree on all dots.
bool is_cmnab(const DotGrid& M);

// Dots with no dot above in their column and none to their left in their row.
std::vector<Cell> roots(const DotGrid& M);

// The graph edge encoded by a cell: present when the leaf grid has a leaf
// strictly below in the cell's column and strictly to the right in its row.
std::optional<Edge> cell_edge_correspondence(const Permutation& p, const Cell& cell);

// Internal dots -> spanning tree edges (row label, leaf value of the column).
LabeledTree zeta(const DotGrid& M, const Permutation& p);

// Spanning tree -> dotted grid, one internal dot per edge.
DotGrid zeta_inverse(const LabeledTree& S, const Permutation& p);

// All valid fillings, via the spanning trees.
std::vector<DotGrid> enumerate_cmnabs(const Permutation& p);

// Independent route for small n: search (n-1)-subsets of the edge-yielding
// cells directly.
std::vector<DotGrid> enumerate_cmnabs_direct(const Permutation& p, int guard_n = 4);

// Fixed order on the graph edges by the cells that encode them: cells
// compare lexicographically by (row, col) and the lexicographically
// smaller (more northwest) cell carries the LARGER rank.
EdgeOrder reverse_lex_order(const Permutation& p);

std::string render_grid(const DotGrid& M);

}  // namespace permsand
