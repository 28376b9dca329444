#include <doctest.h>

#include "permsand/serialize.hpp"

using namespace permsand;

TEST_CASE("records round trip") {
    const Permutation p = Permutation::parse("514362");
    const auto g = build_perm_graph(p);
    const auto tree = make_tree(6, {{3, 2}, {3, 5}, {2, 6}, {5, 1}, {5, 4}});
    const auto rt = root_at(tree, 3);
    const auto c = make_configuration(3, {0, 3, 3, 1, 3, 0});
    const OrderedPartition part{{{3}, {2, 5}, {1, 4, 6}}};
    const Polynomial poly({2, 1});
    BivariatePolynomial biv;
    biv.add_term(2, 0, 1);
    biv.add_term(1, 0, 1);
    biv.add_term(0, 1, 1);
    DotGrid grid = leaf_grid(Permutation::parse("21"));
    grid.internals = {{1, 1}};

    CHECK(permutation_from_record(to_record(p)) == p);
    CHECK(graph_from_record(to_record(g)).edges == g.edges);
    CHECK(configuration_from_record(to_record(c)) == c);
    CHECK(partition_from_record(to_record(part)) == part);
    CHECK(tree_from_record(to_record(tree)) == tree);
    CHECK(rooted_tree_from_record(to_record(rt)) == rt);
    CHECK(polynomial_from_record(to_record(poly)) == poly);
    CHECK(bivariate_from_record(to_record(biv)) == biv);
    CHECK(grid_from_record(to_record(grid)) == grid);

    // Dispatch through the type tag is the identity on serialized records.
    for (const json& rec : {to_record(p), to_record(g), to_record(c), to_record(part),
                            to_record(tree), to_record(rt), to_record(poly), to_record(biv),
                            to_record(grid), check_record("demo", true)})
        CHECK(parse_record(rec) == rec);

    CHECK_THROWS_AS(parse_record(json{{"type", "mystery"}}), std::invalid_argument);
}

TEST_CASE("records parse from plain text") {
    const json rec = json::parse(
        R"({"type":"configuration","sink":3,"grains":[0,3,3,1,3,0],"level":2})");
    const Configuration c = configuration_from_record(rec);
    CHECK(c.sink == 3);
    CHECK(c.grains[2] == 3);

    const json bad = json::parse(R"({"type":"tree","n":3,"edges":[[1,2]]})");
    CHECK_THROWS_AS(tree_from_record(bad), std::invalid_argument);
}
