#pragma once

#include <map>
#include <vector>

#include "tropm0n/split.hpp"
#include "tropm0n/trees.hpp"
#include "tropm0n/types.hpp"

namespace tropm0n {

// Weighted fan of cones of one common dimension.  Weights are nonzero; the
// underlying map is ordered, so iteration and serialization are
// deterministic.
class Cycle {
 public:
  Cycle(int n, int dim);
  Cycle(int n, int dim, std::map<ConeType, Integer> weights);

  int n() const { return n_; }
  int dim() const { return dim_; }
  const std::map<ConeType, Integer>& weights() const { return weights_; }

  // 0 for cones not in the support.
  Integer weight(const ConeType& cone) const;

  bool empty() const { return weights_.empty(); }
  std::size_t cone_count() const { return weights_.size(); }

  bool operator==(const Cycle& other) const = default;

 private:
  int n_;
  int dim_;
  std::map<ConeType, Integer> weights_;
};

// All maximal cones with weight 1.
Cycle fundamental(int n);

// Cones of dimension n-4 whose tree has leaf k at its 4-valent vertex, all
// with weight 1.  Requires n >= 4.
Cycle psi_class(int n, int k);

struct RidgeNeighbor {
  ConeType facet;
  Split added_split;  // the facet's split missing from the ridge
  Integer weight;
};

struct RidgeStar {
  ConeType ridge;
  std::vector<RidgeNeighbor> neighbors;
};

// Codimension-one faces of the cycle's cones with their incident weighted
// facets, ascending by ridge.  Requires dim >= 1.
std::vector<RidgeStar> ridge_stars(const Cycle& cycle);

struct BalancingReport {
  bool balanced = true;
  std::vector<ConeType> violations;  // ridges where the weighted sum of
                                     // facet rays leaves the ridge's span
};

// Checks that around every ridge the weighted sum of the added splits'
// vectors lies in the span of the ridge's own splits and the pair sums.
BalancingReport check_balancing(const Cycle& cycle);

}  // namespace tropm0n
