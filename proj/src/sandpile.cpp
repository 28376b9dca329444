#include "permsand/sandpile.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace permsand {

namespace {

void check_shape(const PermutationGraph& g, const Configuration& c) {
    if (c.size() != g.n)
        throw std::invalid_argument("configuration size does not match graph");
    if (c.sink < 1 || c.sink > g.n) throw std::invalid_argument("sink out of range");
    for (int v = 1; v <= g.n; ++v)
        if (c.grains[v] < 0) throw std::invalid_argument("negative grain count");
}

void check_connected_sandpile(const PermutationGraph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("sandpile dynamics need a connected graph "
                                    "(permutation is decomposable)");
}

void apply_topple(const PermutationGraph& g, Configuration& c, int v) {
    c.grains[v] -= g.degree[v];
    for (int u : g.adj[v]) ++c.grains[u];
}

}  // namespace

int Configuration::total() const {
    int s = 0;
    for (size_t v = 1; v < grains.size(); ++v) s += grains[v];
    return s;
}

std::string Configuration::to_string() const {
    std::string out = "(";
    for (int v = 1; v <= size(); ++v) {
        if (v > 1) out += ',';
        out += std::to_string(grains[v]);
    }
    return out + ")";
}

bool Configuration::operator<(const Configuration& o) const {
    return std::tie(sink, grains) < std::tie(o.sink, o.grains);
}

Configuration make_configuration(int sink, std::vector<int> grains_by_vertex) {
    Configuration c;
    c.sink = sink;
    c.grains.assign(1, 0);
    c.grains.insert(c.grains.end(), grains_by_vertex.begin(), grains_by_vertex.end());
    return c;
}

std::string OrderedPartition::to_string() const {
    bool compact = true;
    for (const auto& part : parts)
        for (int v : part)
            if (v > 9) compact = false;
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += '-';
        for (size_t j = 0; j < parts[i].size(); ++j) {
            if (!compact && j > 0) out += ',';
            out += std::to_string(parts[i][j]);
        }
    }
    return out;
}

bool is_stable(const PermutationGraph& g, const Configuration& c) {
    check_shape(g, c);
    for (int v = 1; v <= g.n; ++v)
        if (v != c.sink && c.grains[v] >= g.degree[v]) return false;
    return true;
}

Configuration topple(const PermutationGraph& g, const Configuration& c, int v) {
    check_shape(g, c);
    if (v < 1 || v > g.n) throw std::invalid_argument("vertex out of range");
    if (v != c.sink && c.grains[v] < g.degree[v])
        throw std::invalid_argument("toppling stable non-sink vertex " + std::to_string(v));
    Configuration out = c;
    apply_topple(g, out, v);
    return out;
}

Configuration stabilize(const PermutationGraph& g, Configuration c) {
    check_shape(g, c);
    check_connected_sandpile(g);
    std::vector<int> stack;
    std::vector<char> queued(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v)
        if (v != c.sink && c.grains[v] >= g.degree[v]) {
            stack.push_back(v);
            queued[v] = 1;
        }
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        queued[v] = 0;
        while (c.grains[v] >= g.degree[v]) {
            apply_topple(g, c, v);
            for (int u : g.adj[v])
                if (u != c.sink && !queued[u] && c.grains[u] >= g.degree[u]) {
                    stack.push_back(u);
                    queued[u] = 1;
                }
        }
    }
    return c;
}

std::optional<OrderedPartition> is_recurrent(const PermutationGraph& g, const Configuration& c) {
    check_shape(g, c);
    check_connected_sandpile(g);
    const int n = g.n;
    const int s = c.sink;
    if (c.grains[s] != g.degree[s]) return std::nullopt;
    for (int v = 1; v <= n; ++v)
        if (v != s && c.grains[v] >= g.degree[v]) return std::nullopt;

    Configuration work = c;
    std::vector<char> toppled(n + 1, 0);
    apply_topple(g, work, s);
    toppled[s] = 1;
    int fired = 1;
    OrderedPartition canon;
    canon.parts.push_back({s});
    while (fired < n) {
        std::vector<int> round;
        for (int v = 1; v <= n; ++v)
            if (!toppled[v] && work.grains[v] >= g.degree[v]) round.push_back(v);
        if (round.empty()) return std::nullopt;
        for (int v : round) {
            apply_topple(g, work, v);
            toppled[v] = 1;
        }
        fired += static_cast<int>(round.size());
        canon.parts.push_back(std::move(round));
    }
    if (!(work == c))
        throw std::logic_error("toppling every vertex once did not restore the configuration");
    return canon;
}

int level(const PermutationGraph& g, const Configuration& c) {
    check_shape(g, c);
    return c.total() - g.edge_count();
}

std::vector<Configuration> enumerate_recurrent(const PermutationGraph& g, int sink, int guard_n) {
    check_connected_sandpile(g);
    if (sink < 1 || sink > g.n) throw std::invalid_argument("sink out of range");
    if (g.n > guard_n)
        throw std::runtime_error("size guard: n=" + std::to_string(g.n) + " exceeds limit " +
                                 std::to_string(guard_n));
    std::vector<int> others;
    for (int v = 1; v <= g.n; ++v)
        if (v != sink) others.push_back(v);

    Configuration c;
    c.sink = sink;
    c.grains.assign(g.n + 1, 0);
    c.grains[sink] = g.degree[sink];

    std::vector<Configuration> out;
    // Odometer over the stable grain ranges [0, d_v - 1] of non-sink vertices.
    while (true) {
        if (is_recurrent(g, c)) out.push_back(c);
        size_t pos = 0;
        while (pos < others.size()) {
            const int v = others[pos];
            if (c.grains[v] + 1 < g.degree[v]) {
                ++c.grains[v];
                break;
            }
            c.grains[v] = 0;
            ++pos;
        }
        if (pos == others.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Polynomial level_polynomial(const PermutationGraph& g, int sink, int guard_n) {
    std::vector<long long> coeffs;
    for (const auto& c : enumerate_recurrent(g, sink, guard_n)) {
        const int lv = level(g, c);
        if (lv >= static_cast<int>(coeffs.size())) coeffs.resize(lv + 1, 0);
        ++coeffs[lv];
    }
    return Polynomial(std::move(coeffs));
}

std::vector<Configuration> enumerate_minimal_recurrent(const PermutationGraph& g, int sink,
                                                       int guard_n) {
    std::vector<Configuration> out;
    for (auto& c : enumerate_recurrent(g, sink, guard_n))
        if (level(g, c) == 0) out.push_back(std::move(c));
    return out;
}

}  // namespace permsand
