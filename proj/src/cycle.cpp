#include "tropm0n/cycle.hpp"

#include <stdexcept>

#include "tropm0n/linalg.hpp"
#include "tropm0n/parallel.hpp"
#include "tropm0n/qspace.hpp"

namespace tropm0n {

Cycle::Cycle(int n, int dim) : n_(n), dim_(dim) {
  if (n < 3 || dim < 0 || dim > n - 3) {
    throw std::invalid_argument("cycle dimension must lie in 0..n-3");
  }
}

Cycle::Cycle(int n, int dim, std::map<ConeType, Integer> weights)
    : Cycle(n, dim) {
  for (const auto& [cone, weight] : weights) {
    if (cone.n() != n || cone.dim() != dim) {
      throw std::invalid_argument("cycle cones must share n and dimension");
    }
    if (weight == 0) {
      throw std::invalid_argument("cycle weights must be nonzero");
    }
  }
  weights_ = std::move(weights);
}

Integer Cycle::weight(const ConeType& cone) const {
  const auto it = weights_.find(cone);
  return it == weights_.end() ? Integer(0) : it->second;
}

Cycle fundamental(int n) {
  std::map<ConeType, Integer> weights;
  for (const ConeType& c : enumerate_cones(n, n - 3)) {
    weights.emplace(c, 1);
  }
  return Cycle(n, n - 3, std::move(weights));
}

Cycle psi_class(int n, int k) {
  if (n < 4) {
    throw std::invalid_argument("psi classes require n >= 4");
  }
  if (k < 1 || k > n) {
    throw std::invalid_argument("leaf label out of range");
  }
  std::map<ConeType, Integer> weights;
  for (const ConeType& c : enumerate_cones(n, n - 4)) {
    const TreeView tree = cone_to_tree(c);
    if (tree.valence_at_leaf(k) == 4) {
      weights.emplace(c, 1);
    }
  }
  return Cycle(n, n - 4, std::move(weights));
}

std::vector<RidgeStar> ridge_stars(const Cycle& cycle) {
  if (cycle.dim() < 1) {
    throw std::invalid_argument("points have no ridges");
  }
  std::map<ConeType, std::vector<RidgeNeighbor>> stars;
  for (const auto& [cone, weight] : cycle.weights()) {
    for (int i = 0; i < cone.dim(); ++i) {
      stars[cone.without_index(i)].push_back(
          {cone, cone.splits()[i], weight});
    }
  }
  std::vector<RidgeStar> out;
  out.reserve(stars.size());
  for (auto& [ridge, neighbors] : stars) {
    out.push_back({ridge, std::move(neighbors)});
  }
  return out;
}

BalancingReport check_balancing(const Cycle& cycle) {
  BalancingReport report;
  if (cycle.dim() == 0 || cycle.empty()) {
    return report;
  }
  const int n = cycle.n();
  const IntegerMatrix phi = pair_sums_matrix(n);
  const std::vector<RidgeStar> stars = ridge_stars(cycle);
  std::vector<char> bad(stars.size(), 0);
  parallel_for(stars.size(), [&](std::size_t i) {
    const RidgeStar& star = stars[i];
    RationalSpan span(phi.rows());
    for (Eigen::Index j = 0; j < phi.cols(); ++j) {
      span.insert(to_rational(IntegerVector(phi.col(j))));
    }
    for (const Split& s : star.ridge.splits()) {
      span.insert(to_rational(split_vector(s)));
    }
    RationalVector flux = RationalVector::Zero(phi.rows());
    for (const RidgeNeighbor& neighbor : star.neighbors) {
      flux += Rational(neighbor.weight) *
              to_rational(split_vector(neighbor.added_split));
    }
    if (!span.contains(flux)) {
      bad[i] = 1;
    }
  });
  for (std::size_t i = 0; i < stars.size(); ++i) {
    if (bad[i]) {
      report.balanced = false;
      report.violations.push_back(stars[i].ridge);
    }
  }
  return report;
}

}  // namespace tropm0n
