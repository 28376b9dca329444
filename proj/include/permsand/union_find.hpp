#pragma once

#include <numeric>
#include <vector>

namespace permsand {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    // Returns false if a and b were already connected.
    bool unite(int a, int b) {
        const int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
        return true;
    }
    bool connected(int a, int b) { return find(a) == find(b); }
};

}  // namespace permsand
