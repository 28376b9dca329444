#include "permsand/trees.hpp"

#include <algorithm>
#include <stdexcept>

#include "permsand/union_find.hpp"

namespace permsand {

namespace {

std::vector<std::vector<int>> tree_adjacency(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n + 1);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

void check_tiering_shape(const LabeledTree& T, const std::vector<int>& t) {
    if (static_cast<int>(t.size()) != T.n + 1)
        throw std::invalid_argument("tier map must have size n+1 (1-based, slot 0 unused)");
}

}  // namespace

LabeledTree make_tree(int n, std::vector<Edge> edges) {
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("tree on " + std::to_string(n) + " vertices needs " +
                                    std::to_string(n - 1) + " edges, got " +
                                    std::to_string(edges.size()));
    UnionFind uf(n);
    for (auto& e : edges) {
        e = make_edge(e.first, e.second);
        if (e.first < 1 || e.second > n) throw std::invalid_argument("edge endpoint out of range");
        if (!uf.unite(e.first, e.second)) throw std::invalid_argument("edges contain a cycle");
    }
    std::sort(edges.begin(), edges.end());
    return LabeledTree{n, std::move(edges)};
}

int RootedTree::max_height() const {
    int h = 0;
    for (int v = 1; v <= n; ++v) h = std::max(h, height[v]);
    return h;
}

std::vector<std::vector<int>> RootedTree::height_fibers() const {
    std::vector<std::vector<int>> fibers(max_height() + 1);
    for (int v = 1; v <= n; ++v) fibers[height[v]].push_back(v);
    return fibers;
}

bool is_tiering(const LabeledTree& T, const std::vector<int>& t) {
    check_tiering_shape(T, t);
    int k = 0;
    for (int v = 1; v <= T.n; ++v) {
        if (t[v] < 1) return false;
        k = std::max(k, t[v]);
    }
    std::vector<char> hit(k + 1, 0);
    for (int v = 1; v <= T.n; ++v) hit[t[v]] = 1;
    for (int level = 1; level <= k; ++level)
        if (!hit[level]) return false;  // not onto an initial segment
    for (const auto& [a, b] : T.edges)  // a < b, so the edge condition reads t[b] < t[a]
        if (t[b] >= t[a]) return false;
    return true;
}

std::vector<int> fully_tier(const LabeledTree& T, const std::vector<int>& t) {
    if (!is_tiering(T, t)) throw std::invalid_argument("input is not a valid tiering");
    const int n = T.n;
    int k = 0;
    for (int v = 1; v <= n; ++v) k = std::max(k, t[v]);
    std::vector<std::vector<int>> fibers(k + 1);
    for (int v = 1; v <= n; ++v) fibers[t[v]].push_back(v);
    std::vector<int> out(n + 1, 0);
    int offset = 0;
    for (int level = 1; level <= k; ++level) {
        std::sort(fibers[level].begin(), fibers[level].end());
        for (size_t i = 0; i < fibers[level].size(); ++i)
            out[fibers[level][i]] = offset + static_cast<int>(i) + 1;
        offset += static_cast<int>(fibers[level].size());
    }
    return out;
}

bool is_spanning_tiered(const LabeledTree& T, const Permutation& p) {
    if (T.n != p.size())
        throw std::invalid_argument("tree size does not match permutation size");
    for (const auto& [a, b] : T.edges)
        if (p.position_of(b) >= p.position_of(a)) return false;  // {a,b}, a<b must be an inversion
    return true;
}

namespace {

long long det_bareiss(std::vector<std::vector<long long>> m) {
    const int k = static_cast<int>(m.size());
    if (k == 0) return 1;
    long long prev = 1;
    int sign = 1;
    for (int i = 0; i < k - 1; ++i) {
        if (m[i][i] == 0) {
            int swap_row = -1;
            for (int r = i + 1; r < k; ++r)
                if (m[r][i] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(m[i], m[swap_row]);
            sign = -sign;
        }
        for (int r = i + 1; r < k; ++r)
            for (int c = i + 1; c < k; ++c)
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
        prev = m[i][i];
    }
    return sign * m[k - 1][k - 1];
}

}  // namespace

long long spanning_tree_count(const PermutationGraph& g) {
    const int n = g.n;
    if (n == 1) return 1;
    // Reduced Laplacian: drop the row and column of vertex n.
    std::vector<std::vector<long long>> m(n - 1, std::vector<long long>(n - 1, 0));
    for (int v = 1; v < n; ++v) m[v - 1][v - 1] = g.degree[v];
    for (const auto& [a, b] : g.edges)
        if (a < n && b < n) {
            m[a - 1][b - 1] -= 1;
            m[b - 1][a - 1] -= 1;
        }
    return det_bareiss(std::move(m));
}

namespace {

struct TreeEnumerator {
    const PermutationGraph& g;
    std::vector<LabeledTree> out;
    std::vector<Edge> chosen;

    explicit TreeEnumerator(const PermutationGraph& graph) : g(graph) {}

    bool still_spanning_without(const UnionFind& uf, size_t next_index) {
        UnionFind probe = uf;
        int components = 0;
        for (int v = 1; v <= g.n; ++v)
            if (probe.find(v) == v) ++components;
        for (size_t i = next_index; i < g.edges.size() && components > 1; ++i)
            if (probe.unite(g.edges[i].first, g.edges[i].second)) --components;
        return components == 1;
    }

    void run(size_t index, UnionFind uf) {
        if (static_cast<int>(chosen.size()) == g.n - 1) {
            std::vector<Edge> edges = chosen;
            std::sort(edges.begin(), edges.end());
            out.push_back(LabeledTree{g.n, std::move(edges)});
            return;
        }
        if (index >= g.edges.size()) return;
        const Edge e = g.edges[index];
        if (uf.connected(e.first, e.second)) {
            run(index + 1, std::move(uf));  // forced exclude: e would close a cycle
            return;
        }
        // Include e.
        {
            UnionFind with = uf;
            with.unite(e.first, e.second);
            chosen.push_back(e);
            run(index + 1, std::move(with));
            chosen.pop_back();
        }
        // Exclude e, unless it is a bridge of the remaining graph.
        if (still_spanning_without(uf, index + 1)) run(index + 1, std::move(uf));
    }
};

}  // namespace

std::vector<LabeledTree> enumerate_spanning_trees(const PermutationGraph& g, int guard_edges) {
    if (g.edge_count() > guard_edges)
        throw std::runtime_error("size guard: " + std::to_string(g.edge_count()) +
                                 " edges exceeds limit " + std::to_string(guard_edges));
    if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
    TreeEnumerator e(g);
    e.run(0, UnionFind(g.n));
    return std::move(e.out);
}

std::vector<LabeledTree> enumerate_spanning_trees_naive(const PermutationGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
    const int m = g.edge_count();
    const int want = g.n - 1;
    std::vector<LabeledTree> out;
    if (want == 0) {
        out.push_back(LabeledTree{g.n, {}});
        return out;
    }
    std::vector<int> idx(want);
    // Iterate all (n-1)-subsets of edge indices in lexicographic order.
    for (int i = 0; i < want; ++i) idx[i] = i;
    while (true) {
        UnionFind uf(g.n);
        bool acyclic = true;
        for (int i : idx)
            if (!uf.unite(g.edges[i].first, g.edges[i].second)) {
                acyclic = false;
                break;
            }
        if (acyclic) {
            std::vector<Edge> edges;
            for (int i : idx) edges.push_back(g.edges[i]);
            std::sort(edges.begin(), edges.end());
            out.push_back(LabeledTree{g.n, std::move(edges)});
        }
        int pos = want - 1;
        while (pos >= 0 && idx[pos] == m - want + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < want; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

RootedTree root_at(const LabeledTree& T, int s) {
    if (s < 1 || s > T.n) throw std::invalid_argument("root out of range");
    RootedTree rt;
    rt.n = T.n;
    rt.root = s;
    rt.edges = T.edges;
    rt.parent.assign(T.n + 1, 0);
    rt.height.assign(T.n + 1, 0);
    const auto adj = tree_adjacency(T.n, T.edges);
    std::vector<char> seen(T.n + 1, 0);
    std::vector<int> queue{s};
    seen[s] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                rt.parent[u] = v;
                rt.height[u] = rt.height[v] + 1;
                queue.push_back(u);
            }
    }
    if (static_cast<int>(queue.size()) != T.n)
        throw std::invalid_argument("tree is not connected");
    return rt;
}

}  // namespace permsand
