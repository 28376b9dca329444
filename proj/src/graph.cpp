#include "permsand/graph.hpp"

#include <algorithm>

namespace permsand {

bool PermutationGraph::has_edge(int a, int b) const {
    if (a < 1 || b < 1 || a > n || b > n || a == b) return false;
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

PermutationGraph build_perm_graph(const Permutation& p) {
    PermutationGraph g;
    g.source = p;
    g.n = p.size();
    for (const auto& [big, small] : inversions(p)) g.edges.push_back(make_edge(big, small));
    std::sort(g.edges.begin(), g.edges.end());
    g.adj.assign(g.n + 1, {});
    g.degree.assign(g.n + 1, 0);
    for (const auto& [a, b] : g.edges) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    for (int v = 1; v <= g.n; ++v) {
        std::sort(g.adj[v].begin(), g.adj[v].end());
        g.degree[v] = static_cast<int>(g.adj[v].size());
    }
    return g;
}

bool is_connected(const PermutationGraph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int visited = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
    }
    return visited == g.n;
}

}  // namespace permsand
