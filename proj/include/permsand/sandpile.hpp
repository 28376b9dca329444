#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permsand/graph.hpp"
#include "permsand/polynomial.hpp"

namespace permsand {

// Grain counts per vertex with a designated sink. grains is 1-based with
// slot 0 unused. A recurrent configuration keeps the sink's count stored
// explicitly (equal to the sink degree).
struct Configuration {
    int sink = 0;
    std::vector<int> grains;

    int size() const { return static_cast<int>(grains.size()) - 1; }
    int total() const;
    std::string to_string() const;  // "(0,3,3,1,3,0)"

    bool operator==(const Configuration&) const = default;
    bool operator<(const Configuration& o) const;
};

Configuration make_configuration(int sink, std::vector<int> grains_by_vertex);

// Ordered set partition of [n]; blocks are kept sorted ascending.
struct OrderedPartition {
    std::vector<std::vector<int>> parts;

    std::string to_string() const;  // "3-25-146", comma-separated labels past 9

    bool operator==(const OrderedPartition&) const = default;
    bool operator<(const OrderedPartition& o) const { return parts < o.parts; }
};

bool is_stable(const PermutationGraph& g, const Configuration& c);

// Sends one grain along every edge at v. Toppling a stable vertex is a
// contract violation unless v is the sink (the recurrence test fires the
// sink unconditionally).
Configuration topple(const PermutationGraph& g, const Configuration& c, int v);

// Topples unstable non-sink vertices until none remain. The result does
// not depend on the order of topplings.
Configuration stabilize(const PermutationGraph& g, Configuration c);

// Decides recurrence by the round procedure: fire the sink, then in each
// round fire every currently unstable vertex. Returns the canonical
// toppling (vertices grouped by firing round) when every vertex fires,
// empty otherwise.
std::optional<OrderedPartition> is_recurrent(const PermutationGraph& g, const Configuration& c);

// Total grains minus edge count; in [0, |E|-|V|+1] for recurrent inputs.
int level(const PermutationGraph& g, const Configuration& c);

// Brute force over the product space of stable grain counts, filtered by
// the recurrence test.
std::vector<Configuration> enumerate_recurrent(const PermutationGraph& g, int sink,
                                               int guard_n = 10);

Polynomial level_polynomial(const PermutationGraph& g, int sink, int guard_n = 10);

// Level-zero subset of the recurrent configurations.
std::vector<Configuration> enumerate_minimal_recurrent(const PermutationGraph& g, int sink,
                                                       int guard_n = 10);

}  // namespace permsand
