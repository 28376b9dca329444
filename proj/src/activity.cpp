#include "permsand/activity.hpp"

#include <algorithm>
#include <stdexcept>

#include "permsand/union_find.hpp"

namespace permsand {

namespace {

std::vector<std::vector<int>> tree_adjacency(const LabeledTree& T) {
    std::vector<std::vector<int>> adj(T.n + 1);
    for (const auto& [a, b] : T.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

// Binomial expansion of (v - 1)^k in the chosen variable slot.
BivariatePolynomial shifted_power(int k, bool x_variable) {
    BivariatePolynomial out;
    long long binom = 1;
    for (int i = 0; i <= k; ++i) {
        const long long coeff = ((k - i) % 2 == 0) ? binom : -binom;
        out.add_term(x_variable ? i : 0, x_variable ? 0 : i, coeff);
        binom = binom * (k - i) / (i + 1);
    }
    return out;
}

}  // namespace

int EdgeOrder::rank_of(const Edge& e) const {
    const auto it = rank.find(e);
    if (it == rank.end())
        throw std::invalid_argument("edge {" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + "} is not ranked");
    return it->second;
}

EdgeOrder bfs_edge_order(const PermutationGraph& g, const RootedTree& rt) {
    if (rt.n != g.n) throw std::invalid_argument("tree size does not match graph");
    std::vector<int> visit_order(g.n);
    for (int v = 1; v <= g.n; ++v) visit_order[v - 1] = v;
    std::sort(visit_order.begin(), visit_order.end(), [&](int a, int b) {
        if (rt.height[a] != rt.height[b]) return rt.height[a] < rt.height[b];
        return a > b;
    });

    EdgeOrder ord;
    std::vector<char> visited(g.n + 1, 0);
    int next_rank = 0;
    for (int v : visit_order) {
        // adj is ascending; walk it backwards so larger neighbors come first.
        for (auto it = g.adj[v].rbegin(); it != g.adj[v].rend(); ++it)
            if (!visited[*it]) ord.rank[make_edge(v, *it)] = ++next_rank;
        visited[v] = 1;
    }
    if (next_rank != g.edge_count()) throw std::logic_error("edge order missed an edge");
    return ord;
}

std::vector<Edge> fundamental_cycle(const LabeledTree& T, const Edge& e) {
    const auto adj = tree_adjacency(T);
    // Path from e.first to e.second inside T, found by BFS.
    std::vector<int> from(T.n + 1, -1);
    std::vector<int> queue{e.first};
    from[e.first] = 0;
    for (size_t head = 0; head < queue.size() && from[e.second] < 0; ++head) {
        const int v = queue[head];
        for (int u : adj[v])
            if (from[u] < 0) {
                from[u] = v;
                queue.push_back(u);
            }
    }
    if (from[e.second] < 0) throw std::invalid_argument("tree does not connect the edge ends");
    std::vector<Edge> cycle{make_edge(e.first, e.second)};
    for (int v = e.second; v != e.first; v = from[v]) cycle.push_back(make_edge(v, from[v]));
    return cycle;
}

std::vector<Edge> fundamental_cocycle(const PermutationGraph& g, const LabeledTree& T,
                                      const Edge& e) {
    const auto adj = tree_adjacency(T);
    // Two-color the components of T minus e, then scan g's edges across the cut.
    std::vector<char> side(T.n + 1, 0);
    std::vector<int> stack{e.first};
    side[e.first] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
            if (make_edge(v, u) == e) continue;
            if (!side[u]) {
                side[u] = 1;
                stack.push_back(u);
            }
        }
    }
    std::vector<Edge> cocycle;
    for (const auto& edge : g.edges)
        if (side[edge.first] != side[edge.second]) cocycle.push_back(edge);
    return cocycle;
}

int external_activity(const PermutationGraph& g, const LabeledTree& T, const EdgeOrder& ord) {
    int active = 0;
    for (const auto& e : g.edges) {
        if (std::binary_search(T.edges.begin(), T.edges.end(), e)) continue;
        const int mine = ord.rank_of(e);
        bool maximal = true;
        for (const auto& f : fundamental_cycle(T, e))
            if (ord.rank_of(f) > mine) {
                maximal = false;
                break;
            }
        if (maximal) ++active;
    }
    return active;
}

int internal_activity(const PermutationGraph& g, const LabeledTree& T, const EdgeOrder& ord) {
    int active = 0;
    for (const auto& e : T.edges) {
        const int mine = ord.rank_of(e);
        bool maximal = true;
        for (const auto& f : fundamental_cocycle(g, T, e))
            if (ord.rank_of(f) > mine) {
                maximal = false;
                break;
            }
        if (maximal) ++active;
    }
    return active;
}

BivariatePolynomial tutte_subset_expansion(const PermutationGraph& g, int guard_edges) {
    const int m = g.edge_count();
    if (m > guard_edges)
        throw std::runtime_error("size guard: " + std::to_string(m) + " edges exceeds limit " +
                                 std::to_string(guard_edges));
    // counts[cc][size] over all edge subsets, then one polynomial expansion.
    std::vector<std::vector<long long>> counts(g.n + 1, std::vector<long long>(m + 1, 0));
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        UnionFind uf(g.n);
        int cc = g.n;
        int size = 0;
        for (int i = 0; i < m; ++i)
            if (mask & (1UL << i)) {
                ++size;
                if (uf.unite(g.edges[i].first, g.edges[i].second)) --cc;
            }
        ++counts[cc][size];
    }
    BivariatePolynomial out;
    for (int cc = 1; cc <= g.n; ++cc)
        for (int size = 0; size <= m; ++size)
            if (counts[cc][size] != 0) {
                BivariatePolynomial term = shifted_power(cc - 1, true) *
                                           shifted_power(cc + size - g.n, false);
                out += BivariatePolynomial::constant(counts[cc][size]) * term;
            }
    return out;
}

namespace {

// Multigraph on vertices 0..nv-1; loops are stored as a==b pairs.
BivariatePolynomial tutte_multigraph(int nv, std::vector<std::pair<int, int>> edges) {
    int loops = 0;
    std::vector<std::pair<int, int>> plain;
    for (const auto& e : edges) {
        if (e.first == e.second)
            ++loops;
        else
            plain.push_back(e);
    }
    BivariatePolynomial result;
    if (plain.empty()) {
        result = BivariatePolynomial::constant(1);
    } else {
        const auto e = plain[0];
        std::vector<std::pair<int, int>> rest(plain.begin() + 1, plain.end());

        UnionFind uf(nv);
        for (const auto& f : rest) uf.unite(f.first + 1, f.second + 1);
        const bool bridge = !uf.connected(e.first + 1, e.second + 1);

        // Contraction: merge e.second into e.first and relabel compactly.
        std::vector<int> relabel(nv);
        int next = 0;
        for (int v = 0; v < nv; ++v)
            relabel[v] = (v == e.second) ? -1 : next++;
        relabel[e.second] = relabel[e.first];
        std::vector<std::pair<int, int>> contracted;
        for (const auto& f : rest) contracted.emplace_back(relabel[f.first], relabel[f.second]);
        BivariatePolynomial with = tutte_multigraph(nv - 1, std::move(contracted));

        if (bridge) {
            result = BivariatePolynomial::monomial(1, 0) * with;
        } else {
            result = tutte_multigraph(nv, std::move(rest)) + with;
        }
    }
    if (loops > 0) result = result * BivariatePolynomial::monomial(0, loops);
    return result;
}

}  // namespace

BivariatePolynomial tutte_deletion_contraction(const PermutationGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.edges) edges.emplace_back(a - 1, b - 1);
    return tutte_multigraph(g.n, std::move(edges));
}

BivariatePolynomial tutte_via_activities(const PermutationGraph& g, int sink) {
    BivariatePolynomial out;
    for (const auto& tree : enumerate_spanning_trees(g)) {
        const RootedTree rt = root_at(tree, sink);
        const EdgeOrder ord = bfs_edge_order(g, rt);
        out.add_term(internal_activity(g, tree, ord), external_activity(g, tree, ord), 1);
    }
    return out;
}

int tree_inversions(const RootedTree& rt) {
    int count = 0;
    for (int v = 1; v <= rt.n; ++v)
        for (int u = rt.parent[v]; u != 0; u = rt.parent[u])
            if (u < v) ++count;
    return count;
}

}  // namespace permsand
