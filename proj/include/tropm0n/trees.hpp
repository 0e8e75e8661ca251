#pragma once

#include <span>
#include <vector>

#include "tropm0n/split.hpp"

namespace tropm0n {

// Cone of the space of n-marked tropical curves: a set of pairwise
// compatible splits, kept sorted.  The empty set is the origin (the cone of
// the star tree); maximal cones have n-3 splits.
class ConeType {
 public:
  ConeType(int n, std::vector<Split> splits);
  static ConeType origin(int n);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(splits_.size()); }
  const std::vector<Split>& splits() const { return splits_; }

  bool contains(const Split& s) const;
  ConeType with_split(const Split& s) const;
  ConeType without_index(int i) const;

  bool operator==(const ConeType& other) const = default;
  bool operator<(const ConeType& other) const;

 private:
  int n_;
  std::vector<Split> splits_;
};

// Combinatorial tree dual to a cone.  Vertex ids are 0..vertex_count-1 and
// deterministic for trees produced by cone_to_tree.  Leaf l sits at vertex
// leaf_vertex[l-1].  Valence counts leaf edges and bounded edges together;
// every vertex has valence >= 3.
struct TreeView {
  int n = 0;
  int vertex_count = 0;
  std::vector<int> leaf_vertex;
  struct BoundedEdge {
    int u = 0;
    int v = 0;
    Split split;
  };
  std::vector<BoundedEdge> edges;
  std::vector<int> valence;

  int valence_at_leaf(int label) const;
};

// Builds the tree whose bounded edges are exactly the cone's splits.
TreeView cone_to_tree(const ConeType& cone);

// Inverse direction: recomputes each bounded edge's split from the adjacency
// (checking it against the stored one) and returns the cone.  Validates the
// tree: connected, acyclic, leaves 1..n placed, no vertex of valence < 3.
ConeType tree_to_cone(const TreeView& tree);

// Assembles a TreeView from adjacency data, deriving splits and valences.
TreeView make_tree(int n, int vertex_count, std::vector<int> leaf_vertex,
                   const std::vector<std::pair<int, int>>& bounded_edges);

// All cones of dimension dim, ascending.  0 <= dim <= n-3.
std::vector<ConeType> enumerate_cones(int n, int dim);

// Codimension-one faces (one split removed), ascending.
std::vector<ConeType> faces(const ConeType& cone);

// Splits s compatible with the cone but not in it, with the extended cone,
// ascending by s.  Empty for maximal cones.
std::vector<std::pair<Split, ConeType>> resolutions(const ConeType& cone);

// For each vertex of cone_to_tree(cone): the ascending list of leaves l at
// that vertex with exponents[l-1] >= 1.
std::vector<std::vector<int>> leaf_sets_at_vertices(const ConeType& cone,
                                                    std::span<const int> exponents);

}  // namespace tropm0n
