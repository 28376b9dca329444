#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "permsand/sandpile.hpp"
#include "permsand/trees.hpp"

using namespace permsand;

namespace {

const Permutation kP3421 = Permutation::parse("3421");

}  // namespace

TEST_CASE("toppling moves one grain per incident edge") {
    const auto g = build_perm_graph(kP3421);
    const auto c = make_configuration(3, {1, 2, 2, 1});
    // Firing vertex 3 (neighbors 1 and 2) empties it.
    const auto c1 = topple(g, c, 3);
    CHECK(c1 == make_configuration(3, {2, 3, 0, 1}));
    const auto c2 = topple(g, c1, 2);
    CHECK(c2 == make_configuration(3, {3, 0, 1, 2}));

    const auto tiny = build_perm_graph(Permutation::parse("21"));
    CHECK(topple(tiny, make_configuration(1, {1, 0}), 1) == make_configuration(1, {0, 1}));

    CHECK_THROWS_AS(topple(g, c, 1), std::invalid_argument);  // stable non-sink
}

TEST_CASE("stabilize") {
    const auto g = build_perm_graph(kP3421);
    const auto stable = make_configuration(3, {1, 2, 2, 1});
    CHECK(stabilize(g, stable) == stable);

    CHECK(stabilize(g, make_configuration(3, {3, 0, 1, 2})) == stable);

    const auto tiny = build_perm_graph(Permutation::parse("21"));
    const auto piled = make_configuration(1, {0, 5});
    CHECK(stabilize(tiny, piled) == oracle::stabilize_stepwise(tiny, piled));
    CHECK(stabilize(tiny, piled) == make_configuration(1, {5, 0}));
}

TEST_CASE("stabilization is order independent") {
    std::mt19937 rng(31337);
    for (const auto& text : {"3421", "321", "25341", "514362"}) {
        const auto g = build_perm_graph(Permutation::parse(text));
        for (int trial = 0; trial < 50; ++trial) {
            Configuration c;
            c.sink = std::uniform_int_distribution<int>(1, g.n)(rng);
            c.grains.assign(g.n + 1, 0);
            for (int v = 1; v <= g.n; ++v)
                c.grains[v] = std::uniform_int_distribution<int>(0, 2 * g.degree[v])(rng);
            const auto fast = stabilize(g, c);
            CHECK(fast == oracle::stabilize_stepwise(g, c));
            // A randomized toppling order reaches the same fixed point.
            Configuration work = c;
            while (true) {
                std::vector<int> unstable;
                for (int v = 1; v <= g.n; ++v)
                    if (v != work.sink && work.grains[v] >= g.degree[v]) unstable.push_back(v);
                if (unstable.empty()) break;
                std::shuffle(unstable.begin(), unstable.end(), rng);
                work = topple(g, work, unstable.front());
            }
            CHECK(work == fast);
        }
    }
}

TEST_CASE("recurrence test and canonical toppling") {
    const auto g = build_perm_graph(kP3421);
    const auto canon = is_recurrent(g, make_configuration(3, {1, 2, 2, 1}));
    REQUIRE(canon.has_value());
    CHECK(canon->parts == std::vector<std::vector<int>>{{3}, {2}, {1, 4}});
    CHECK(canon->to_string() == "3-2-14");

    CHECK_FALSE(is_recurrent(g, make_configuration(3, {0, 0, 2, 0})).has_value());

    const auto big = build_perm_graph(Permutation::parse("514362"));
    const auto canon2 = is_recurrent(big, make_configuration(3, {0, 3, 3, 1, 3, 0}));
    REQUIRE(canon2.has_value());
    CHECK(canon2->parts == std::vector<std::vector<int>>{{3}, {2, 5}, {1, 4, 6}});
    CHECK(canon2->to_string() == "3-25-146");
}

TEST_CASE("level") {
    const auto g = build_perm_graph(kP3421);
    CHECK(level(g, make_configuration(3, {1, 2, 2, 1})) == 1);
    const auto big = build_perm_graph(Permutation::parse("514362"));
    CHECK(level(big, make_configuration(3, {0, 3, 3, 1, 3, 0})) == 2);

    // Tree-shaped graphs only admit level 0.
    const auto path = build_perm_graph(Permutation::parse("231"));
    REQUIRE(path.edge_count() == path.n - 1);
    for (int s = 1; s <= path.n; ++s)
        for (const auto& c : enumerate_recurrent(path, s)) CHECK(level(path, c) == 0);
}

TEST_CASE("recurrent enumeration") {
    const auto triangle = build_perm_graph(Permutation::parse("321"));
    const auto recs = enumerate_recurrent(triangle, 1);
    CHECK(recs.size() == 3);
    std::multiset<int> levels;
    for (const auto& c : recs) levels.insert(level(triangle, c));
    CHECK(levels == std::multiset<int>{0, 0, 1});

    CHECK(enumerate_recurrent(build_perm_graph(kP3421), 3).size() == 8);

    const auto tiny = build_perm_graph(Permutation::parse("21"));
    CHECK(enumerate_recurrent(tiny, 1) ==
          std::vector<Configuration>{make_configuration(1, {1, 0})});

    CHECK_THROWS_AS(enumerate_recurrent(build_perm_graph(Permutation::parse("21")), 1, 1),
                    std::runtime_error);
    CHECK_THROWS_AS(enumerate_recurrent(build_perm_graph(Permutation::parse("2143")), 1),
                    std::invalid_argument);  // decomposable
}

TEST_CASE("recurrent count equals tree determinant, any sink") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : all_indecomposable(n)) {
            const auto g = build_perm_graph(p);
            const long long trees = spanning_tree_count(g);
            for (int s = 1; s <= n; ++s)
                CHECK(static_cast<long long>(enumerate_recurrent(g, s).size()) == trees);
        }
}

TEST_CASE("level bounds and closure") {
    std::mt19937 rng(8);
    for (const auto& p : all_indecomposable(5)) {
        const auto g = build_perm_graph(p);
        const int slack = g.edge_count() - g.n + 1;
        for (int s = 1; s <= g.n; ++s)
            for (const auto& c : enumerate_recurrent(g, s)) {
                const int lv = level(g, c);
                CHECK(lv >= 0);
                CHECK(lv <= slack);
                // Toppling every vertex once, in canonical round order,
                // lands back on the start.
                const auto canon = is_recurrent(g, c);
                Configuration work = c;
                for (const auto& part : canon->parts)
                    for (int v : part) work = topple(g, work, v);
                CHECK(work == c);
            }
    }
}

TEST_CASE("level polynomial") {
    const auto triangle = build_perm_graph(Permutation::parse("321"));
    CHECK(level_polynomial(triangle, 1) == Polynomial({2, 1}));
    CHECK(level_polynomial(triangle, 1).to_string() == "2 + x");

    const auto path = build_perm_graph(Permutation::parse("231"));
    CHECK(level_polynomial(path, 2) == Polynomial({1}));

    const auto g = build_perm_graph(kP3421);
    CHECK(level_polynomial(g, 3).sum_coeffs() == 8);

    // Independent of the sink at small n.
    for (int n = 2; n <= 6; ++n)
        for (const auto& p : all_indecomposable(n)) {
            const auto graph = build_perm_graph(p);
            const auto reference = level_polynomial(graph, 1);
            for (int s = 2; s <= n; ++s) CHECK(level_polynomial(graph, s) == reference);
        }
}

TEST_CASE("minimal recurrent enumeration") {
    const auto g = build_perm_graph(Permutation::parse("25341"));
    CHECK(enumerate_minimal_recurrent(g, 3).size() == 4);

    const auto tiny = build_perm_graph(Permutation::parse("21"));
    CHECK(enumerate_minimal_recurrent(tiny, 1) ==
          std::vector<Configuration>{make_configuration(1, {1, 0})});

    const auto triangle = build_perm_graph(Permutation::parse("321"));
    CHECK(enumerate_minimal_recurrent(triangle, 1).size() == 2);
}
