#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropm0n/cycle.hpp"
#include "tropm0n/psi.hpp"
#include "tropm0n/qspace.hpp"
#include "tropm0n/split.hpp"
#include "tropm0n/trees.hpp"
#include "tropm0n/types.hpp"

namespace tropm0n {

using Json = nlohmann::json;

// Version of the on-disk JSON formats.  Top-level documents carry it as
// "schema"; readers reject anything else.
inline constexpr int kSchemaVersion = 1;

// Canonical text form: two-space indent, keys in sorted order, trailing
// newline.  Identical values always dump to identical bytes.
std::string dump(const Json& j);

// Integers are JSON numbers when they fit in 64 bits, else decimal strings.
// Rationals additionally use "p/q" strings when not integral.
Json integer_to_json(const Integer& x);
Json rational_to_json(const Rational& x);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

// A split is its canonical side, ascending:  [1, 2].
Json split_to_json(const Split& s);
Split split_from_json(int n, const Json& j);

// {"n": 5, "splits": [[1, 2], [1, 2, 3]]}
Json cone_to_json(const ConeType& cone);
ConeType cone_from_json(const Json& j);

// {"schema": 1, "n": 5, "dim": 1, "cones": [{"splits": [...], "weight": 1},
// ...]} with cones ascending.  This is the golden-file format of the command
// line tool.
Json cycle_to_json(const Cycle& cycle);
Cycle cycle_from_json(const Json& j);

// Coordinates in 2-subset order as a plain array of integers or "p/q"
// strings.
Json vector_to_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j);

// {"schema": 1, "n": 5, "diffs": [{"cone": [[...]], "left_weight": ...,
// "right_weight": ...}, ...]}.  Empty diffs means the cycles agree.
Json diffs_to_json(int n, const std::vector<WeightDiff>& diffs);

// Input to the embedding: a combinatorial type with positive edge lengths.
// {"schema": 1, "n": 5, "edges": [{"side": [1, 2], "length": "3/2"}, ...]}
struct MetricTree {
  ConeType cone;
  std::map<Split, Rational> lengths;
};

MetricTree metric_tree_from_json(const Json& j);
Json metric_tree_to_json(const MetricTree& tree);

// Graphviz drawing of the dual tree: leaves as labelled nodes, interior
// vertices as points.
std::string cone_to_dot(const ConeType& cone, const std::string& name = "curve");

}  // namespace tropm0n
