#include "permsand/serialize.hpp"

#include <stdexcept>

namespace permsand {

namespace {

json edges_to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const auto& [a, b] : edges) out.push_back(json::array({a, b}));
    return out;
}

std::vector<Edge> edges_from_json(const json& j) {
    std::vector<Edge> out;
    for (const auto& e : j) out.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
    return out;
}

json cells_to_json(const std::set<Cell>& cells) {
    json out = json::array();
    for (const auto& [r, c] : cells) out.push_back(json::array({r, c}));
    return out;
}

std::set<Cell> cells_from_json(const json& j) {
    std::set<Cell> out;
    for (const auto& c : j) out.insert({c.at(0).get<int>(), c.at(1).get<int>()});
    return out;
}

}  // namespace

json to_record(const Permutation& p) {
    return json{{"type", "permutation"}, {"word", p.word()}};
}

json to_record(const PermutationGraph& g) {
    return json{{"type", "graph"},
                {"n", g.n},
                {"word", g.source.word()},
                {"edges", edges_to_json(g.edges)}};
}

json to_record(const Configuration& c) {
    std::vector<int> grains(c.grains.begin() + 1, c.grains.end());
    return json{{"type", "configuration"}, {"sink", c.sink}, {"grains", grains}};
}

json to_record(const OrderedPartition& P) {
    return json{{"type", "partition"}, {"parts", P.parts}};
}

json to_record(const LabeledTree& T) {
    return json{{"type", "tree"}, {"n", T.n}, {"edges", edges_to_json(T.edges)}};
}

json to_record(const RootedTree& rt) {
    std::vector<int> parent(rt.parent.begin() + 1, rt.parent.end());
    return json{{"type", "rooted_tree"},
                {"n", rt.n},
                {"edges", edges_to_json(rt.edges)},
                {"root", rt.root},
                {"parent", parent}};
}

json to_record(const Polynomial& p) {
    return json{{"type", "polynomial"}, {"coeffs", p.coeffs()}};
}

json to_record(const BivariatePolynomial& p) {
    json terms = json::array();
    for (const auto& [xd, yd, c] : p.sorted_terms()) terms.push_back(json::array({xd, yd, c}));
    return json{{"type", "bivariate"}, {"terms", terms}};
}

json to_record(const DotGrid& M) {
    return json{{"type", "grid"},
                {"n", M.n},
                {"leaves", cells_to_json(M.leaves)},
                {"internal", cells_to_json(M.internals)}};
}

Permutation permutation_from_record(const json& j) {
    return Permutation(j.at("word").get<std::vector<int>>());
}

PermutationGraph graph_from_record(const json& j) {
    PermutationGraph g = build_perm_graph(Permutation(j.at("word").get<std::vector<int>>()));
    if (g.n != j.at("n").get<int>() || g.edges != edges_from_json(j.at("edges")))
        throw std::invalid_argument("graph record does not match its permutation");
    return g;
}

Configuration configuration_from_record(const json& j) {
    return make_configuration(j.at("sink").get<int>(), j.at("grains").get<std::vector<int>>());
}

OrderedPartition partition_from_record(const json& j) {
    return OrderedPartition{j.at("parts").get<std::vector<std::vector<int>>>()};
}

LabeledTree tree_from_record(const json& j) {
    return make_tree(j.at("n").get<int>(), edges_from_json(j.at("edges")));
}

RootedTree rooted_tree_from_record(const json& j) {
    const LabeledTree T = make_tree(j.at("n").get<int>(), edges_from_json(j.at("edges")));
    RootedTree rt = root_at(T, j.at("root").get<int>());
    std::vector<int> parent(rt.parent.begin() + 1, rt.parent.end());
    if (parent != j.at("parent").get<std::vector<int>>())
        throw std::invalid_argument("rooted tree record has an inconsistent parent map");
    return rt;
}

Polynomial polynomial_from_record(const json& j) {
    return Polynomial(j.at("coeffs").get<std::vector<long long>>());
}

BivariatePolynomial bivariate_from_record(const json& j) {
    BivariatePolynomial p;
    for (const auto& t : j.at("terms"))
        p.add_term(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<long long>());
    return p;
}

DotGrid grid_from_record(const json& j) {
    DotGrid M;
    M.n = j.at("n").get<int>();
    M.leaves = cells_from_json(j.at("leaves"));
    M.internals = cells_from_json(j.at("internal"));
    return M;
}

json parse_record(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "permutation") return to_record(permutation_from_record(j));
    if (type == "graph") return to_record(graph_from_record(j));
    if (type == "configuration") return to_record(configuration_from_record(j));
    if (type == "partition") return to_record(partition_from_record(j));
    if (type == "tree") return to_record(tree_from_record(j));
    if (type == "rooted_tree") return to_record(rooted_tree_from_record(j));
    if (type == "polynomial") return to_record(polynomial_from_record(j));
    if (type == "bivariate") return to_record(bivariate_from_record(j));
    if (type == "grid") return to_record(grid_from_record(j));
    if (type == "check") return check_record(j.at("name").get<std::string>(), j.at("pass").get<bool>());
    if (type == "count")
        return json{{"type", "count"},
                    {"name", j.at("name").get<std::string>()},
                    {"value", j.at("value").get<long long>()}};
    if (type == "oeis_row") {
        json out{{"type", "oeis_row"}, {"n", j.at("n").get<int>()},
                 {"count", j.at("count").get<long long>()}};
        if (j.contains("expected")) {
            out["expected"] = j.at("expected").get<long long>();
            out["pass"] = j.at("pass").get<bool>();
        }
        return out;
    }
    throw std::invalid_argument("unknown record type '" + type + "'");
}

json check_record(const std::string& name, bool pass) {
    return json{{"type", "check"}, {"name", name}, {"pass", pass}};
}

}  // namespace permsand
