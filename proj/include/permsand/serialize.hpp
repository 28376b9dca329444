#pragma once

#include <string>

#include <json.hpp>

#include "permsand/bijections.hpp"
#include "permsand/cnab.hpp"

namespace permsand {

using nlohmann::json;

// Every record carries a "type" tag so that line-delimited streams are
// self-describing. parse_record dispatches on it and re-serializes, which
// is what the round-trip checks exercise.

json to_record(const Permutation& p);
json to_record(const PermutationGraph& g);
json to_record(const Configuration& c);
json to_record(const OrderedPartition& P);
json to_record(const LabeledTree& T);
json to_record(const RootedTree& rt);
json to_record(const Polynomial& p);
json to_record(const BivariatePolynomial& p);
json to_record(const DotGrid& M);

Permutation permutation_from_record(const json& j);
PermutationGraph graph_from_record(const json& j);
Configuration configuration_from_record(const json& j);
OrderedPartition partition_from_record(const json& j);
LabeledTree tree_from_record(const json& j);
RootedTree rooted_tree_from_record(const json& j);
Polynomial polynomial_from_record(const json& j);
BivariatePolynomial bivariate_from_record(const json& j);
DotGrid grid_from_record(const json& j);

// Parses any known record type and serializes it again; throws
// std::invalid_argument on an unknown type tag.
json parse_record(const json& j);

json check_record(const std::string& name, bool pass);

}  // namespace permsand
