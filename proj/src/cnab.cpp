#include "permsand/cnab.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "permsand/union_find.hpp"

namespace permsand {

namespace {

void check_leaf_matrix(const DotGrid& M) {
    if (static_cast<int>(M.leaves.size()) != M.n)
        throw std::invalid_argument("leaf dots must number n");
    std::vector<char> row_hit(M.n + 1, 0), col_hit(M.n + 1, 0);
    for (const auto& [r, c] : M.leaves) {
        if (r < 1 || r > M.n || c < 1 || c > M.n)
            throw std::invalid_argument("leaf dot out of the grid");
        if (row_hit[r] || col_hit[c])
            throw std::invalid_argument("leaf dots must form a permutation matrix");
        row_hit[r] = col_hit[c] = 1;
    }
}

// Nearest dot strictly below (r,c) in column c, or (0,0) if none.
Cell nearest_below(const std::set<Cell>& dots, int n, const Cell& cell) {
    for (int r = cell.first + 1; r <= n; ++r)
        if (dots.count({r, cell.second})) return {r, cell.second};
    return {0, 0};
}

Cell nearest_right(const std::set<Cell>& dots, int n, const Cell& cell) {
    for (int c = cell.second + 1; c <= n; ++c)
        if (dots.count({cell.first, c})) return {cell.first, c};
    return {0, 0};
}

bool has_dot_above(const std::set<Cell>& dots, const Cell& cell) {
    for (int r = 1; r < cell.first; ++r)
        if (dots.count({r, cell.second})) return true;
    return false;
}

bool has_dot_left(const std::set<Cell>& dots, const Cell& cell) {
    for (int c = 1; c < cell.second; ++c)
        if (dots.count({cell.first, c})) return true;
    return false;
}

}  // namespace

std::set<Cell> DotGrid::all_dots() const {
    std::set<Cell> out = leaves;
    out.insert(internals.begin(), internals.end());
    return out;
}

bool DotGrid::operator<(const DotGrid& o) const {
    if (n != o.n) return n < o.n;
    if (leaves != o.leaves) return leaves < o.leaves;
    return internals < o.internals;
}

DotGrid leaf_grid(const Permutation& p) {
    DotGrid g;
    g.n = p.size();
    for (int pos = 1; pos <= p.size(); ++pos) g.leaves.insert({p.value_at(pos), pos});
    return g;
}

bool is_nab(int rows, int cols, const std::set<Cell>& dots) {
    if (dots.empty()) return false;
    std::vector<char> row_hit(rows + 1, 0), col_hit(cols + 1, 0);
    for (const auto& [r, c] : dots) {
        if (r < 1 || r > rows || c < 1 || c > cols) return false;
        row_hit[r] = col_hit[c] = 1;
    }
    for (int r = 1; r <= rows; ++r)
        if (!row_hit[r]) return false;
    for (int c = 1; c <= cols; ++c)
        if (!col_hit[c]) return false;
    for (const auto& dot : dots) {
        if (dot == Cell{1, 1}) continue;
        const bool above = has_dot_above(dots, dot);
        const bool left = has_dot_left(dots, dot);
        if (above == left) return false;
    }
    return true;
}

bool is_complete_nab(int rows, int cols, const std::set<Cell>& dots) {
    if (!is_nab(rows, cols, dots)) return false;
    const int n = std::max(rows, cols);
    for (const auto& dot : dots) {
        const bool below = nearest_below(dots, n, dot).first != 0;
        const bool right = nearest_right(dots, n, dot).first != 0;
        if (below != right) return false;
    }
    return true;
}

bool is_cnab(const DotGrid& M) { return is_complete_nab(M.n, M.n, M.all_dots()); }

bool is_cmnab(const DotGrid& M) {
    check_leaf_matrix(M);
    if (static_cast<int>(M.internals.size()) != M.n - 1) return false;
    for (const auto& dot : M.internals) {
        if (dot.first < 1 || dot.first > M.n || dot.second < 1 || dot.second > M.n) return false;
        if (M.leaves.count(dot)) return false;
    }
    const std::set<Cell> dots = M.all_dots();
    for (const auto& dot : M.internals) {
        if (nearest_below(dots, M.n, dot).first == 0) return false;
        if (nearest_right(dots, M.n, dot).first == 0) return false;
    }
    // Join each internal dot with its nearest dot below and to the right:
    // 2n-2 edges on 2n-1 dots form a tree exactly when no cycle appears.
    std::map<Cell, int> id;
    int next = 0;
    for (const auto& dot : dots) id[dot] = ++next;
    UnionFind uf(next);
    for (const auto& dot : M.internals) {
        if (!uf.unite(id[dot], id[nearest_below(dots, M.n, dot)])) return false;
        if (!uf.unite(id[dot], id[nearest_right(dots, M.n, dot)])) return false;
    }
    return true;
}

std::vector<Cell> roots(const DotGrid& M) {
    const std::set<Cell> dots = M.all_dots();
    std::vector<Cell> out;
    for (const auto& dot : dots)
        if (!has_dot_above(dots, dot) && !has_dot_left(dots, dot)) out.push_back(dot);
    return out;
}

std::optional<Edge> cell_edge_correspondence(const Permutation& p, const Cell& cell) {
    const auto [r, c] = cell;
    if (r < 1 || r > p.size() || c < 1 || c > p.size())
        throw std::invalid_argument("cell outside the grid");
    const bool leaf_below = p.value_at(c) > r;
    const bool leaf_right = p.position_of(r) > c;
    if (leaf_below && leaf_right) return make_edge(r, p.value_at(c));
    return std::nullopt;
}

LabeledTree zeta(const DotGrid& M, const Permutation& p) {
    if (M.n != p.size()) throw std::invalid_argument("grid size does not match permutation");
    if (M.leaves != leaf_grid(p).leaves)
        throw std::invalid_argument("grid leaves do not match the permutation");
    if (!is_cmnab(M)) throw std::invalid_argument("grid is not a valid filling");
    std::vector<Edge> edges;
    for (const auto& [r, c] : M.internals) edges.push_back(make_edge(r, p.value_at(c)));
    return make_tree(M.n, std::move(edges));
}

DotGrid zeta_inverse(const LabeledTree& S, const Permutation& p) {
    if (S.n != p.size()) throw std::invalid_argument("tree size does not match permutation");
    make_tree(S.n, S.edges);  // structural validation
    if (!is_spanning_tiered(S, p))
        throw std::invalid_argument("tree is not a spanning tree of the inversion graph");
    DotGrid M = leaf_grid(p);
    for (const auto& [a, b] : S.edges) M.internals.insert({a, p.position_of(b)});
    return M;
}

std::vector<DotGrid> enumerate_cmnabs(const Permutation& p) {
    if (!is_indecomposable(p)) throw std::invalid_argument("permutation is decomposable");
    std::vector<DotGrid> out;
    for (const auto& tree : enumerate_spanning_trees(build_perm_graph(p)))
        out.push_back(zeta_inverse(tree, p));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DotGrid> enumerate_cmnabs_direct(const Permutation& p, int guard_n) {
    if (p.size() > guard_n)
        throw std::runtime_error("size guard: n=" + std::to_string(p.size()) +
                                 " exceeds limit " + std::to_string(guard_n));
    std::vector<Cell> candidates;
    for (int r = 1; r <= p.size(); ++r)
        for (int c = 1; c <= p.size(); ++c)
            if (cell_edge_correspondence(p, {r, c})) candidates.push_back({r, c});

    std::vector<DotGrid> out;
    const int want = p.size() - 1;
    const int m = static_cast<int>(candidates.size());
    if (want == 0) {
        DotGrid M = leaf_grid(p);
        if (is_cmnab(M)) out.push_back(std::move(M));
        return out;
    }
    if (m < want) return out;
    std::vector<int> idx(want);
    for (int i = 0; i < want; ++i) idx[i] = i;
    while (true) {
        DotGrid M = leaf_grid(p);
        for (int i : idx) M.internals.insert(candidates[i]);
        if (is_cmnab(M)) out.push_back(std::move(M));
        int pos = want - 1;
        while (pos >= 0 && idx[pos] == m - want + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < want; ++i) idx[i] = idx[i - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

EdgeOrder reverse_lex_order(const Permutation& p) {
    const PermutationGraph g = build_perm_graph(p);
    std::vector<std::pair<Cell, Edge>> cells;
    for (const auto& e : g.edges)
        cells.emplace_back(Cell{e.first, p.position_of(e.second)}, e);
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    EdgeOrder ord;
    int next_rank = 0;
    for (const auto& [cell, e] : cells) ord.rank[e] = ++next_rank;
    return ord;
}

std::string render_grid(const DotGrid& M) {
    std::vector<std::string> lines(M.n, std::string(M.n, '.'));
    for (const auto& [r, c] : M.leaves) lines[r - 1][c - 1] = '*';
    for (const auto& [r, c] : M.internals) lines[r - 1][c - 1] = 'o';
    std::string out;
    for (const auto& line : lines) out += line + "\n";
    out += "roots:";
    for (const auto& [r, c] : roots(M))
        out += " (" + std::to_string(r) + "," + std::to_string(c) + ")";
    out += "\n";
    return out;
}

}  // namespace permsand
