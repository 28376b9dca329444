#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "permsand/trees.hpp"

using namespace permsand;

namespace {

// t maps 1..n, slot 0 unused.
std::vector<int> tiers(std::initializer_list<int> by_vertex) {
    std::vector<int> t{0};
    t.insert(t.end(), by_vertex.begin(), by_vertex.end());
    return t;
}

const LabeledTree kFiveTree = make_tree(5, {{4, 5}, {1, 5}, {2, 5}, {2, 3}});

LabeledTree random_tree(int n, std::mt19937& rng) {
    const auto all = oracle::all_labeled_trees(n);
    return all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
}

// A random valid tiering built from a random linear extension of the
// orientation that sends each edge's larger endpoint below its smaller one,
// with adjacent tiers merged where no edge objects.
std::vector<int> random_tiering(const LabeledTree& T, std::mt19937& rng) {
    const int n = T.n;
    std::vector<std::vector<int>> below(n + 1);  // below[a] = vertices forced under a
    std::vector<int> pending(n + 1, 0);
    for (const auto& [a, b] : T.edges) {  // a < b: b needs the smaller tier
        below[b].push_back(a);
        ++pending[a];
    }
    std::vector<int> order;
    std::vector<int> ready;
    for (int v = 1; v <= n; ++v)
        if (pending[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        const size_t pick = std::uniform_int_distribution<size_t>(0, ready.size() - 1)(rng);
        const int v = ready[pick];
        ready.erase(ready.begin() + pick);
        order.push_back(v);
        for (int u : below[v])
            if (--pending[u] == 0) ready.push_back(u);
    }
    std::vector<int> t(n + 1, 0);
    int tier = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        bool can_merge = i > 0 && std::bernoulli_distribution(0.5)(rng);
        if (can_merge) {
            for (size_t j = 0; j < i && can_merge; ++j)
                if (t[order[j]] == tier) {
                    const Edge e = make_edge(order[i], order[j]);
                    if (std::binary_search(T.edges.begin(), T.edges.end(), e)) can_merge = false;
                }
        }
        if (!can_merge) ++tier;
        t[order[i]] = tier;
    }
    return t;
}

}  // namespace

TEST_CASE("make_tree validates") {
    CHECK_THROWS_AS(make_tree(3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_tree(3, {{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_tree(3, {{1, 2}, {2, 4}}), std::invalid_argument);
    CHECK(make_tree(1, {}).n == 1);
}

TEST_CASE("tiering check") {
    CHECK(is_tiering(kFiveTree, tiers({2, 3, 1, 2, 1})));
    CHECK(is_tiering(make_tree(1, {}), tiers({1})));
    CHECK_FALSE(is_tiering(make_tree(2, {{1, 2}}), tiers({1, 2})));
    CHECK(is_tiering(make_tree(2, {{1, 2}}), tiers({2, 1})));
    // Tier values must fill an initial segment.
    CHECK_FALSE(is_tiering(make_tree(2, {{1, 2}}), tiers({3, 1})));
}

TEST_CASE("fully_tier refines tiers") {
    const auto t = fully_tier(kFiveTree, tiers({2, 3, 1, 2, 1}));
    CHECK(t == tiers({3, 5, 1, 4, 2}));

    // Already-bijective tierings keep their ordering.
    const auto again = fully_tier(kFiveTree, t);
    CHECK(again == t);

    CHECK_THROWS_AS(fully_tier(make_tree(2, {{1, 2}}), tiers({1, 2})), std::invalid_argument);

    std::mt19937 rng(99);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 60; ++trial) {
            const LabeledTree T = random_tree(n, rng);
            const auto t0 = random_tiering(T, rng);
            REQUIRE(is_tiering(T, t0));
            const auto t1 = fully_tier(T, t0);
            CHECK(is_tiering(T, t1));
            std::set<int> values(t1.begin() + 1, t1.end());
            CHECK(static_cast<int>(values.size()) == n);  // bijective
            CHECK(*values.rbegin() == n);
            // Order between distinct original tiers is preserved.
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    if (t0[a] < t0[b]) CHECK(t1[a] < t1[b]);
        }
}

TEST_CASE("spanning trees are tiered by the inverse word") {
    const Permutation p = Permutation::parse("514362");
    const LabeledTree fig = make_tree(6, {{3, 2}, {3, 5}, {2, 6}, {5, 1}, {5, 4}});
    CHECK(is_spanning_tiered(fig, p));
    CHECK_FALSE(is_spanning_tiered(make_tree(2, {{1, 2}}), Permutation::parse("12")));

    std::mt19937 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> w(6);
        std::iota(w.begin(), w.end(), 1);
        std::shuffle(w.begin(), w.end(), rng);
        const Permutation q(w);
        const auto g = build_perm_graph(q);
        const LabeledTree T = random_tree(6, rng);
        bool all_edges_present = true;
        for (const auto& [a, b] : T.edges) all_edges_present = all_edges_present && g.has_edge(a, b);
        CHECK(is_spanning_tiered(T, q) == all_edges_present);
        // Same statement through the tier map of the inverse word.
        std::vector<int> inv(7, 0);
        for (int v = 1; v <= 6; ++v) inv[v] = q.position_of(v);
        CHECK(is_spanning_tiered(T, q) == is_tiering(T, inv));
    }
}

TEST_CASE("spanning tree counts") {
    CHECK(spanning_tree_count(build_perm_graph(Permutation::parse("3421"))) == 8);
    CHECK(spanning_tree_count(build_perm_graph(Permutation::parse("21"))) == 1);
    CHECK(spanning_tree_count(build_perm_graph(Permutation::parse("321"))) == 3);
    CHECK(spanning_tree_count(build_perm_graph(Permutation::parse("1"))) == 1);
}

TEST_CASE("spanning tree enumeration") {
    const auto triangle = enumerate_spanning_trees(build_perm_graph(Permutation::parse("321")));
    CHECK(triangle.size() == 3);

    const auto g3421 = build_perm_graph(Permutation::parse("3421"));
    CHECK(enumerate_spanning_trees(g3421).size() == 8);

    const auto g514362 = build_perm_graph(Permutation::parse("514362"));
    const auto trees = enumerate_spanning_trees(g514362);
    CHECK(static_cast<long long>(trees.size()) == spanning_tree_count(g514362));
    const LabeledTree fig = make_tree(6, {{3, 2}, {3, 5}, {2, 6}, {5, 1}, {5, 4}});
    CHECK(std::find(trees.begin(), trees.end(), fig) != trees.end());

    // Both routes agree, and match the determinant, over all connected
    // inversion graphs at small n.
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : all_indecomposable(n)) {
            const auto g = build_perm_graph(p);
            auto fast = enumerate_spanning_trees(g);
            auto naive = enumerate_spanning_trees_naive(g);
            std::sort(fast.begin(), fast.end());
            std::sort(naive.begin(), naive.end());
            CHECK(fast == naive);
            CHECK(static_cast<long long>(fast.size()) == spanning_tree_count(g));
            CHECK(std::adjacent_find(fast.begin(), fast.end()) == fast.end());
        }
    for (const auto& p : all_indecomposable(7)) {
        const auto g = build_perm_graph(p);
        CHECK(static_cast<long long>(enumerate_spanning_trees(g).size()) ==
              spanning_tree_count(g));
    }

    CHECK_THROWS_AS(enumerate_spanning_trees(build_perm_graph(Permutation::parse("87654321"))),
                    std::runtime_error);  // 28 edges, over the guard
}

TEST_CASE("rooting a tree") {
    const LabeledTree fig = make_tree(6, {{3, 2}, {3, 5}, {2, 6}, {5, 1}, {5, 4}});
    const RootedTree rt = root_at(fig, 3);
    CHECK(rt.height[3] == 0);
    CHECK(rt.height[2] == 1);
    CHECK(rt.height[5] == 1);
    CHECK(rt.height[1] == 2);
    CHECK(rt.height[4] == 2);
    CHECK(rt.height[6] == 2);
    CHECK(rt.height_fibers() ==
          std::vector<std::vector<int>>{{3}, {2, 5}, {1, 4, 6}});

    const RootedTree tiny = root_at(make_tree(2, {{1, 2}}), 1);
    CHECK(tiny.parent[2] == 1);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const LabeledTree T = random_tree(7, rng);
        const int s = std::uniform_int_distribution<int>(1, 7)(rng);
        const RootedTree rt2 = root_at(T, s);
        int fiber_total = 0;
        for (const auto& fiber : rt2.height_fibers()) fiber_total += fiber.size();
        CHECK(fiber_total == 7);
        for (int v = 1; v <= 7; ++v)
            if (v != s) CHECK(rt2.height[v] == rt2.height[rt2.parent[v]] + 1);
    }
}

TEST_CASE("tiered tree count identity at desk scale") {
    // Fully tiered pairs (tree, bijective tiering) are counted by the
    // total number of recurrent configurations across connected inversion
    // graphs, i.e. by total spanning tree counts.
    for (int n = 1; n <= 5; ++n) {
        long long tiered = 0;
        for (const auto& T : oracle::all_labeled_trees(n)) {
            std::vector<int> t(n + 1);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 1);
            do {
                for (int v = 1; v <= n; ++v) t[v] = perm[v - 1];
                if (is_tiering(T, t)) ++tiered;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        long long tree_total = 0;
        for (const auto& p : all_indecomposable(n))
            tree_total += spanning_tree_count(build_perm_graph(p));
        CHECK(tiered == tree_total);
    }
}
