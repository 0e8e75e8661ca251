#include "tropm0n/io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tropm0n {

namespace {

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object()) {
    throw std::invalid_argument("expected a JSON object");
  }
  const auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

int require_int(const Json& j, const char* key) {
  const Json& field = require_field(j, key);
  if (!field.is_number_integer()) {
    throw std::invalid_argument(std::string("field \"") + key +
                                "\" must be an integer");
  }
  return field.get<int>();
}

void check_schema(const Json& j) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema version");
  }
}

Integer parse_integer(const std::string& s) {
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  bool digits = s.size() > start;
  for (std::size_t i = start; i < s.size(); ++i) {
    digits = digits && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  if (!digits) {
    throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
  }
  return Integer(s);
}

std::vector<Split> splits_from_json(int n, const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("splits must be an array");
  }
  std::vector<Split> out;
  out.reserve(j.size());
  for (const Json& side : j) {
    out.push_back(split_from_json(n, side));
  }
  return out;
}

}  // namespace

std::string dump(const Json& j) {
  return j.dump(2) + "\n";
}

Json integer_to_json(const Integer& x) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) {
    return Json(x.convert_to<std::int64_t>());
  }
  return Json(x.str());
}

Json rational_to_json(const Rational& x) {
  if (denominator(x) == 1) {
    return integer_to_json(numerator(x));
  }
  return Json(x.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) {
    return Integer(j.get<std::uint64_t>());
  }
  if (j.is_number_integer()) {
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    return parse_integer(j.get<std::string>());
  }
  throw std::invalid_argument("expected an integer or a decimal string");
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
      return Rational(parse_integer(s));
    }
    const Integer num = parse_integer(s.substr(0, slash));
    const Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in \"" + s + "\"");
    }
    return Rational(num) / Rational(den);
  }
  return Rational(integer_from_json(j));
}

Json split_to_json(const Split& s) {
  return Json(s.labels());
}

Split split_from_json(int n, const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("a split is an array of labels");
  }
  std::vector<int> labels;
  labels.reserve(j.size());
  for (const Json& label : j) {
    if (!label.is_number_integer()) {
      throw std::invalid_argument("split labels must be integers");
    }
    labels.push_back(label.get<int>());
  }
  return Split(n, labels);
}

Json cone_to_json(const ConeType& cone) {
  Json splits = Json::array();
  for (const Split& s : cone.splits()) {
    splits.push_back(split_to_json(s));
  }
  return Json{{"n", cone.n()}, {"splits", std::move(splits)}};
}

ConeType cone_from_json(const Json& j) {
  const int n = require_int(j, "n");
  return ConeType(n, splits_from_json(n, require_field(j, "splits")));
}

Json cycle_to_json(const Cycle& cycle) {
  Json cones = Json::array();
  for (const auto& [cone, weight] : cycle.weights()) {
    Json splits = Json::array();
    for (const Split& s : cone.splits()) {
      splits.push_back(split_to_json(s));
    }
    cones.push_back(Json{{"splits", std::move(splits)},
                         {"weight", integer_to_json(weight)}});
  }
  return Json{{"schema", kSchemaVersion},
              {"n", cycle.n()},
              {"dim", cycle.dim()},
              {"cones", std::move(cones)}};
}

Cycle cycle_from_json(const Json& j) {
  check_schema(j);
  const int n = require_int(j, "n");
  const int dim = require_int(j, "dim");
  const Json& cones = require_field(j, "cones");
  if (!cones.is_array()) {
    throw std::invalid_argument("field \"cones\" must be an array");
  }
  std::map<ConeType, Integer> weights;
  for (const Json& entry : cones) {
    ConeType cone(n, splits_from_json(n, require_field(entry, "splits")));
    Integer weight = integer_from_json(require_field(entry, "weight"));
    if (!weights.emplace(std::move(cone), std::move(weight)).second) {
      throw std::invalid_argument("repeated cone");
    }
  }
  return Cycle(n, dim, std::move(weights));
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(rational_to_json(v[i]));
  }
  return out;
}

RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("expected an array of coordinates");
  }
  RationalVector v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const Json& entry : j) {
    v[i++] = rational_from_json(entry);
  }
  return v;
}

Json diffs_to_json(int n, const std::vector<WeightDiff>& diffs) {
  Json list = Json::array();
  for (const WeightDiff& d : diffs) {
    Json splits = Json::array();
    for (const Split& s : d.cone.splits()) {
      splits.push_back(split_to_json(s));
    }
    list.push_back(Json{{"cone", std::move(splits)},
                        {"left_weight", integer_to_json(d.left)},
                        {"right_weight", integer_to_json(d.right)}});
  }
  return Json{{"schema", kSchemaVersion}, {"n", n}, {"diffs", std::move(list)}};
}

MetricTree metric_tree_from_json(const Json& j) {
  check_schema(j);
  const int n = require_int(j, "n");
  const Json& edges = require_field(j, "edges");
  if (!edges.is_array()) {
    throw std::invalid_argument("field \"edges\" must be an array");
  }
  std::map<Split, Rational> lengths;
  for (const Json& edge : edges) {
    Split side = split_from_json(n, require_field(edge, "side"));
    Rational length = rational_from_json(require_field(edge, "length"));
    if (!lengths.emplace(std::move(side), std::move(length)).second) {
      throw std::invalid_argument("repeated edge side");
    }
  }
  std::vector<Split> splits;
  splits.reserve(lengths.size());
  for (const auto& entry : lengths) {
    splits.push_back(entry.first);
  }
  return MetricTree{ConeType(n, std::move(splits)), std::move(lengths)};
}

Json metric_tree_to_json(const MetricTree& tree) {
  Json edges = Json::array();
  for (const auto& [side, length] : tree.lengths) {
    edges.push_back(Json{{"side", split_to_json(side)},
                         {"length", rational_to_json(length)}});
  }
  return Json{{"schema", kSchemaVersion},
              {"n", tree.cone.n()},
              {"edges", std::move(edges)}};
}

std::string cone_to_dot(const ConeType& cone, const std::string& name) {
  const TreeView tree = cone_to_tree(cone);
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=point];\n";
  for (int v = 0; v < tree.vertex_count; ++v) {
    out << "  v" << v << ";\n";
  }
  for (int label = 1; label <= tree.n; ++label) {
    out << "  l" << label << " [shape=plaintext, label=\"" << label << "\"];\n";
  }
  for (const TreeView::BoundedEdge& edge : tree.edges) {
    out << "  v" << edge.u << " -- v" << edge.v << ";\n";
  }
  for (int label = 1; label <= tree.n; ++label) {
    out << "  l" << label << " -- v" << tree.leaf_vertex[label - 1] << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tropm0n
