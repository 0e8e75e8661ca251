#include "tropm0n/trees.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tropm0n {

namespace {

void require_same_n(int n, const Split& s) {
  if (s.n() != n) {
    throw std::invalid_argument("split belongs to a different n");
  }
}

}  // namespace

ConeType::ConeType(int n, std::vector<Split> splits)
    : n_(n), splits_(std::move(splits)) {
  if (n_ < 3) {
    throw std::invalid_argument("cones require n >= 3");
  }
  std::sort(splits_.begin(), splits_.end());
  for (std::size_t i = 0; i < splits_.size(); ++i) {
    require_same_n(n_, splits_[i]);
    if (i > 0 && splits_[i] == splits_[i - 1]) {
      throw std::invalid_argument("repeated split in cone");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!compatible(splits_[i], splits_[j])) {
        throw std::invalid_argument("incompatible splits in cone");
      }
    }
  }
}

ConeType ConeType::origin(int n) { return ConeType(n, {}); }

bool ConeType::contains(const Split& s) const {
  return std::binary_search(splits_.begin(), splits_.end(), s);
}

ConeType ConeType::with_split(const Split& s) const {
  std::vector<Split> extended = splits_;
  extended.push_back(s);
  return ConeType(n_, std::move(extended));
}

ConeType ConeType::without_index(int i) const {
  if (i < 0 || i >= dim()) {
    throw std::invalid_argument("face index out of range");
  }
  std::vector<Split> reduced = splits_;
  reduced.erase(reduced.begin() + i);
  return ConeType(n_, std::move(reduced));
}

bool ConeType::operator<(const ConeType& other) const {
  if (n_ != other.n_) {
    return n_ < other.n_;
  }
  return std::lexicographical_compare(splits_.begin(), splits_.end(),
                                      other.splits_.begin(), other.splits_.end());
}

int TreeView::valence_at_leaf(int label) const {
  if (label < 1 || label > n) {
    throw std::invalid_argument("leaf label out of range");
  }
  return valence.at(leaf_vertex.at(label - 1));
}

TreeView cone_to_tree(const ConeType& cone) {
  const int n = cone.n();
  // Laminar family on canonical sides: each split's parent is the smallest
  // strictly containing side, or the root when there is none.
  std::vector<Split> parts = cone.splits();
  std::sort(parts.begin(), parts.end(), [](const Split& a, const Split& b) {
    if (a.side_size() != b.side_size()) {
      return a.side_size() < b.side_size();
    }
    return a < b;
  });

  TreeView tree;
  tree.n = n;
  tree.vertex_count = static_cast<int>(parts.size()) + 1;
  tree.valence.assign(tree.vertex_count, 0);
  tree.leaf_vertex.assign(n, 0);

  for (std::size_t i = 0; i < parts.size(); ++i) {
    int parent = 0;
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if ((parts[i].mask() & parts[j].mask()) == parts[i].mask()) {
        parent = static_cast<int>(j) + 1;
        break;
      }
    }
    tree.edges.push_back({parent, static_cast<int>(i) + 1, parts[i]});
    tree.valence[parent] += 1;
    tree.valence[i + 1] += 1;
  }

  for (int l = 1; l <= n; ++l) {
    int vertex = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].mask() >> (l - 1) & 1) {
        vertex = static_cast<int>(i) + 1;
        break;
      }
    }
    tree.leaf_vertex[l - 1] = vertex;
    tree.valence[vertex] += 1;
  }
  return tree;
}

namespace {

// Leaves on the component of `start` after removing edge `cut`.
std::uint64_t cut_side(const TreeView& tree, int cut, int start) {
  std::vector<char> seen(tree.vertex_count, 0);
  std::vector<int> stack = {start};
  seen[start] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e = 0; e < static_cast<int>(tree.edges.size()); ++e) {
      if (e == cut) {
        continue;
      }
      const auto& edge = tree.edges[e];
      int next = -1;
      if (edge.u == v) {
        next = edge.v;
      } else if (edge.v == v) {
        next = edge.u;
      }
      if (next >= 0 && !seen[next]) {
        seen[next] = 1;
        stack.push_back(next);
      }
    }
  }
  std::uint64_t side = 0;
  for (int l = 1; l <= tree.n; ++l) {
    if (seen[tree.leaf_vertex[l - 1]]) {
      side |= std::uint64_t{1} << (l - 1);
    }
  }
  return side;
}

void validate_tree(const TreeView& tree) {
  if (tree.n < 3) {
    throw std::invalid_argument("trees require n >= 3");
  }
  if (tree.vertex_count < 1 ||
      static_cast<int>(tree.edges.size()) != tree.vertex_count - 1) {
    throw std::invalid_argument("tree must have vertex_count - 1 bounded edges");
  }
  if (static_cast<int>(tree.leaf_vertex.size()) != tree.n) {
    throw std::invalid_argument("tree must place all n leaves");
  }
  std::vector<int> degree(tree.vertex_count, 0);
  for (const auto& edge : tree.edges) {
    if (edge.u < 0 || edge.u >= tree.vertex_count || edge.v < 0 ||
        edge.v >= tree.vertex_count || edge.u == edge.v) {
      throw std::invalid_argument("bounded edge endpoints out of range");
    }
    degree[edge.u] += 1;
    degree[edge.v] += 1;
  }
  for (int v : tree.leaf_vertex) {
    if (v < 0 || v >= tree.vertex_count) {
      throw std::invalid_argument("leaf vertex out of range");
    }
    degree[v] += 1;
  }
  if (static_cast<int>(tree.valence.size()) != tree.vertex_count) {
    throw std::invalid_argument("valence table size mismatch");
  }
  for (int v = 0; v < tree.vertex_count; ++v) {
    if (degree[v] != tree.valence[v]) {
      throw std::invalid_argument("stored valence disagrees with adjacency");
    }
    if (degree[v] < 3) {
      throw std::invalid_argument("tree has a vertex of valence < 3");
    }
  }
  std::vector<char> seen(tree.vertex_count, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& edge : tree.edges) {
      int next = -1;
      if (edge.u == v) {
        next = edge.v;
      } else if (edge.v == v) {
        next = edge.u;
      }
      if (next >= 0 && !seen[next]) {
        seen[next] = 1;
        reached += 1;
        stack.push_back(next);
      }
    }
  }
  if (reached != tree.vertex_count) {
    throw std::invalid_argument("tree is not connected");
  }
}

}  // namespace

ConeType tree_to_cone(const TreeView& tree) {
  validate_tree(tree);
  std::vector<Split> splits;
  for (int e = 0; e < static_cast<int>(tree.edges.size()); ++e) {
    const Split computed(tree.n, cut_side(tree, e, tree.edges[e].v));
    if (computed != tree.edges[e].split) {
      throw std::invalid_argument("stored split disagrees with adjacency");
    }
    splits.push_back(computed);
  }
  return ConeType(tree.n, std::move(splits));
}

TreeView make_tree(int n, int vertex_count, std::vector<int> leaf_vertex,
                   const std::vector<std::pair<int, int>>& bounded_edges) {
  TreeView tree;
  tree.n = n;
  tree.vertex_count = vertex_count;
  tree.leaf_vertex = std::move(leaf_vertex);
  tree.valence.assign(std::max(vertex_count, 0), 0);
  if (n < 3 || vertex_count < 1 ||
      static_cast<int>(tree.leaf_vertex.size()) != n) {
    throw std::invalid_argument("malformed tree data");
  }
  for (const auto& [u, v] : bounded_edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count || u == v) {
      throw std::invalid_argument("bounded edge endpoints out of range");
    }
    tree.edges.push_back({u, v, Split(std::max(n, 4), std::uint64_t{3})});
    tree.valence[u] += 1;
    tree.valence[v] += 1;
  }
  for (int v : tree.leaf_vertex) {
    if (v < 0 || v >= vertex_count) {
      throw std::invalid_argument("leaf vertex out of range");
    }
    tree.valence[v] += 1;
  }
  for (int e = 0; e < static_cast<int>(tree.edges.size()); ++e) {
    tree.edges[e].split = Split(n, cut_side(tree, e, tree.edges[e].v));
  }
  validate_tree(tree);
  return tree;
}

std::vector<ConeType> enumerate_cones(int n, int dim) {
  if (n < 3) {
    throw std::invalid_argument("enumerate_cones requires n >= 3");
  }
  if (dim < 0 || dim > n - 3) {
    throw std::invalid_argument("cone dimension must lie in 0..n-3");
  }
  const std::vector<Split> splits = all_splits(n);
  std::vector<ConeType> out;
  std::vector<Split> chosen;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(chosen.size()) == dim) {
      out.emplace_back(n, chosen);
      return;
    }
    const std::size_t needed = dim - chosen.size();
    for (std::size_t i = start; i + needed <= splits.size(); ++i) {
      const bool fits = std::all_of(chosen.begin(), chosen.end(), [&](const Split& s) {
        return compatible(s, splits[i]);
      });
      if (fits) {
        chosen.push_back(splits[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<ConeType> faces(const ConeType& cone) {
  std::vector<ConeType> out;
  out.reserve(cone.dim());
  for (int i = 0; i < cone.dim(); ++i) {
    out.push_back(cone.without_index(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Split, ConeType>> resolutions(const ConeType& cone) {
  std::vector<std::pair<Split, ConeType>> out;
  for (const Split& s : all_splits(cone.n())) {
    if (cone.contains(s)) {
      continue;
    }
    const bool fits =
        std::all_of(cone.splits().begin(), cone.splits().end(),
                    [&](const Split& t) { return compatible(s, t); });
    if (fits) {
      out.emplace_back(s, cone.with_split(s));
    }
  }
  return out;
}

std::vector<std::vector<int>> leaf_sets_at_vertices(const ConeType& cone,
                                                    std::span<const int> exponents) {
  if (static_cast<int>(exponents.size()) != cone.n()) {
    throw std::invalid_argument("need one exponent per leaf");
  }
  const TreeView tree = cone_to_tree(cone);
  std::vector<std::vector<int>> sets(tree.vertex_count);
  for (int l = 1; l <= cone.n(); ++l) {
    if (exponents[l - 1] < 0) {
      throw std::invalid_argument("exponents must be nonnegative");
    }
    if (exponents[l - 1] >= 1) {
      sets[tree.leaf_vertex[l - 1]].push_back(l);
    }
  }
  return sets;
}

}  // namespace tropm0n
