#include "permsand/bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace permsand {

namespace {

void check_spanning(const PermutationGraph& g, const RootedTree& rt) {
    if (rt.n != g.n) throw std::invalid_argument("tree size does not match graph");
    for (const auto& [a, b] : rt.edges)
        if (!g.has_edge(a, b))
            throw std::invalid_argument("tree edge {" + std::to_string(a) + "," +
                                        std::to_string(b) + "} is not a graph edge");
}

bool forms_inversion(const Permutation& p, int a, int b) {
    const int big = std::max(a, b), small = std::min(a, b);
    return p.position_of(big) < p.position_of(small);
}

}  // namespace

TreeWeights tree_weights(const PermutationGraph& g, const RootedTree& rt) {
    check_spanning(g, rt);
    TreeWeights w;
    w.lambda.assign(g.n + 1, 0);
    w.mu.assign(g.n + 1, 0);
    w.nu.assign(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v) {
        for (int u : g.adj[v]) {
            if (rt.height[u] > rt.height[v])
                ++w.lambda[v];
            else if (rt.height[u] == rt.height[v])
                ++w.mu[v];
            else if (v != rt.root && rt.height[u] == rt.height[v] - 1 && u < rt.parent[v])
                ++w.nu[v];
        }
    }
    return w;
}

Configuration tree_to_config(const PermutationGraph& g, const RootedTree& rt) {
    const TreeWeights w = tree_weights(g, rt);
    Configuration c;
    c.sink = rt.root;
    c.grains.assign(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v) c.grains[v] = w.lambda[v] + w.mu[v] + w.nu[v];
    return c;
}

RootedTree config_to_tree(const PermutationGraph& g, const Configuration& c) {
    const auto canon = is_recurrent(g, c);
    if (!canon) throw std::invalid_argument("configuration is not recurrent");
    const auto& parts = canon->parts;

    std::vector<int> round_of(g.n + 1, 0);
    for (size_t j = 0; j < parts.size(); ++j)
        for (int v : parts[j]) round_of[v] = static_cast<int>(j);

    RootedTree rt;
    rt.n = g.n;
    rt.root = c.sink;
    rt.parent.assign(g.n + 1, 0);
    rt.height.assign(g.n + 1, 0);
    for (size_t j = 1; j < parts.size(); ++j) {
        for (int v : parts[j]) {
            rt.height[v] = static_cast<int>(j);
            int received_before = 0;
            std::vector<int> eligible;
            for (int u : g.adj[v]) {
                if (round_of[u] < static_cast<int>(j)) ++received_before;
                if (round_of[u] == static_cast<int>(j) - 1) eligible.push_back(u);
            }
            const int r = c.grains[v] + received_before - g.degree[v];
            if (r < 0 || r >= static_cast<int>(eligible.size()))
                throw std::logic_error("leftover grain count out of range");
            // eligible is ascending (adjacency lists are sorted): pick the
            // (r+1)-th smallest, so that r neighbors sit below the parent.
            rt.parent[v] = eligible[r];
            rt.edges.push_back(make_edge(v, rt.parent[v]));
        }
    }
    std::sort(rt.edges.begin(), rt.edges.end());
    return rt;
}

int level_via_weights(const TreeWeights& w) {
    int sum_mu = 0, sum_nu = 0;
    for (size_t v = 1; v < w.mu.size(); ++v) {
        sum_mu += w.mu[v];
        sum_nu += w.nu[v];
    }
    if (sum_mu % 2 != 0) throw std::logic_error("same-height neighbor count must be even");
    return sum_mu / 2 + sum_nu;
}

TreeWeights ferrers_weights(const PermutationGraph& g, const RootedTree& rt) {
    check_spanning(g, rt);
    const auto split = single_descent_decompose(g.source);
    if (!split) throw std::invalid_argument("permutation does not have a single descent");
    std::vector<char> in_first(g.n + 1, 0);
    for (int v : split->first) in_first[v] = 1;

    TreeWeights w;
    w.lambda.assign(g.n + 1, 0);
    w.mu.assign(g.n + 1, 0);
    w.nu.assign(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v) {
        for (int u = 1; u <= g.n; ++u) {
            if (u == v) continue;
            if (rt.height[u] > rt.height[v]) {
                if (in_first[v] && !in_first[u] && u < v) ++w.lambda[v];
                if (!in_first[v] && in_first[u] && u > v) ++w.lambda[v];
            } else if (v != rt.root && rt.height[u] == rt.height[v] - 1) {
                const int lo = std::min(rt.parent[v], v), hi = std::max(rt.parent[v], v);
                if (lo < u && u < hi) ++w.nu[v];
            }
        }
    }
    return w;
}

bool is_compatible_partition(const Permutation& p, int sink, const OrderedPartition& P) {
    const int n = p.size();
    std::vector<char> seen(n + 1, 0);
    int covered = 0;
    for (const auto& part : P.parts) {
        if (part.empty()) throw std::invalid_argument("empty block in ordered partition");
        for (int v : part) {
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("blocks do not partition the vertex set");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("blocks do not partition the vertex set");

    if (P.parts.empty() || P.parts[0].size() != 1 || P.parts[0][0] != sink) return false;
    for (const auto& part : P.parts)
        for (size_t i = 0; i < part.size(); ++i)
            for (size_t j = i + 1; j < part.size(); ++j)
                if (forms_inversion(p, part[i], part[j])) return false;
    for (size_t j = 1; j < P.parts.size(); ++j)
        for (int v : P.parts[j]) {
            bool linked = false;
            for (int u : P.parts[j - 1])
                if (forms_inversion(p, v, u)) {
                    linked = true;
                    break;
                }
            if (!linked) return false;
        }
    return true;
}

OrderedPartition minrec_to_partition(const PermutationGraph& g, const Configuration& c) {
    const auto canon = is_recurrent(g, c);
    if (!canon) throw std::invalid_argument("configuration is not recurrent");
    if (level(g, c) != 0) throw std::invalid_argument("configuration is not minimal recurrent");
    return *canon;
}

Configuration partition_to_minrec(const PermutationGraph& g, const OrderedPartition& P) {
    if (P.parts.empty()) throw std::invalid_argument("empty partition");
    const int sink = P.parts[0].empty() ? 0 : P.parts[0][0];
    if (!is_compatible_partition(g.source, sink, P))
        throw std::invalid_argument("ordered partition is not compatible");

    RootedTree rt;
    rt.n = g.n;
    rt.root = sink;
    rt.parent.assign(g.n + 1, 0);
    rt.height.assign(g.n + 1, 0);
    std::vector<int> round_of(g.n + 1, 0);
    for (size_t j = 0; j < P.parts.size(); ++j)
        for (int v : P.parts[j]) round_of[v] = static_cast<int>(j);
    for (size_t j = 1; j < P.parts.size(); ++j) {
        for (int v : P.parts[j]) {
            rt.height[v] = static_cast<int>(j);
            int best = 0;
            for (int u : g.adj[v])
                if (round_of[u] == static_cast<int>(j) - 1 && (best == 0 || u < best)) best = u;
            rt.parent[v] = best;  // min eligible neighbor; nonempty by compatibility
            rt.edges.push_back(make_edge(v, best));
        }
    }
    std::sort(rt.edges.begin(), rt.edges.end());
    return tree_to_config(g, rt);
}

std::vector<Configuration> recurrent_via_trees(const PermutationGraph& g, int sink) {
    std::vector<Configuration> out;
    for (const auto& tree : enumerate_spanning_trees(g))
        out.push_back(tree_to_config(g, root_at(tree, sink)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace permsand
