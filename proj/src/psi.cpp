#include "tropm0n/psi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "tropm0n/identities.hpp"
#include "tropm0n/pair_index.hpp"
#include "tropm0n/parallel.hpp"
#include "tropm0n/qspace.hpp"

namespace tropm0n {
namespace {

Integer normalization(int n) { return Integer((n - 1) * (n - 2)) / 2; }

void require_label(int n, int k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("leaf label out of range");
  }
}

void require_cuttable(const Cycle& cycle) {
  if (cycle.dim() < 1) {
    throw std::invalid_argument("cannot cut a zero-dimensional cycle");
  }
}

void require_cut_budget(const PsiSpec& spec) {
  if (spec.result_dim() < 0) {
    throw std::invalid_argument(
        "exponent total " + std::to_string(spec.total()) +
        " exceeds the cycle dimension " + std::to_string(spec.n() - 3));
  }
}

// One cut label per exponent unit, ascending.
std::vector<int> ascending_labels(const PsiSpec& spec) {
  std::vector<int> labels;
  labels.reserve(spec.total());
  for (int i = 1; i <= spec.n(); ++i) {
    labels.insert(labels.end(), spec.exponent(i), i);
  }
  return labels;
}

Cycle assemble(int n, int dim, const std::vector<RidgeStar>& stars,
               const std::vector<Integer>& weights) {
  std::map<ConeType, Integer> result;
  for (std::size_t i = 0; i < stars.size(); ++i) {
    if (weights[i] != 0) {
      result.emplace(stars[i].ridge, weights[i]);
    }
  }
  return Cycle(n, dim, std::move(result));
}

template <typename WeightFn>
Cycle divisor_by(const Cycle& cycle, const WeightFn& weight_of) {
  require_cuttable(cycle);
  const std::vector<RidgeStar> stars = ridge_stars(cycle);
  std::vector<Integer> weights(stars.size());
  parallel_for(stars.size(),
               [&](std::size_t i) { weights[i] = weight_of(stars[i]); });
  return assemble(cycle.n(), cycle.dim() - 1, stars, weights);
}

}  // namespace

PsiSpec::PsiSpec(int n, std::vector<int> exponents)
    : n_(n), exponents_(std::move(exponents)) {
  if (n_ < 3) {
    throw std::invalid_argument("need at least three leaves");
  }
  if (static_cast<int>(exponents_.size()) != n_) {
    throw std::invalid_argument("need one exponent per leaf");
  }
  for (int e : exponents_) {
    if (e < 0) {
      throw std::invalid_argument("exponents must be nonnegative");
    }
  }
}

int PsiSpec::total() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Integer weil_ridge_weight(int n, int k, const RidgeStar& star) {
  require_label(n, k);
  const PairIndex idx(n);
  RationalVector sum = RationalVector::Zero(idx.count());
  Rational parts = 0;
  for (const RidgeNeighbor& neighbor : star.neighbors) {
    const RationalVector scaled =
        Rational(neighbor.weight) * to_rational(split_vector(neighbor.added_split));
    parts += psi_potential(n, k, scaled);
    sum += scaled;
  }
  const Integer weight = to_integer(parts - psi_potential(n, k, sum));
  if (weight % normalization(n) != 0) {
    throw std::logic_error("ridge weight escapes the psi-class normalization");
  }
  return weight;
}

Integer psi_ridge_weight(int n, int k, const RidgeStar& star) {
  require_label(n, k);
  std::vector<std::uint64_t> away;
  away.reserve(star.neighbors.size());
  for (const RidgeNeighbor& neighbor : star.neighbors) {
    away.push_back(neighbor.added_split.side_avoiding(k));
  }
  bool first = true;
  Integer best = 0;
  for (int a = 1; a <= n; ++a) {
    if (a == k) continue;
    for (int b = a + 1; b <= n; ++b) {
      if (b == k) continue;
      const std::uint64_t pair_mask =
          (std::uint64_t{1} << (a - 1)) | (std::uint64_t{1} << (b - 1));
      Integer sum = 0;
      for (std::size_t i = 0; i < away.size(); ++i) {
        if ((away[i] & pair_mask) == pair_mask) {
          sum += star.neighbors[i].weight;
        }
      }
      if (first || sum < best) {
        best = sum;
        first = false;
      }
    }
  }
  return best;
}

Cycle weil_divisor(const Cycle& cycle, int k) {
  return divisor_by(cycle, [&](const RidgeStar& star) {
    return weil_ridge_weight(cycle.n(), k, star);
  });
}

Cycle psi_divisor(const Cycle& cycle, int k) {
  return divisor_by(cycle, [&](const RidgeStar& star) {
    return psi_ridge_weight(cycle.n(), k, star);
  });
}

Cycle psi_product(const PsiSpec& spec) {
  return psi_product_ordered(spec, ascending_labels(spec));
}

Cycle psi_product_ordered(const PsiSpec& spec, std::span<const int> labels) {
  require_cut_budget(spec);
  std::vector<int> counts(spec.n(), 0);
  for (int label : labels) {
    require_label(spec.n(), label);
    ++counts[label - 1];
  }
  if (!std::equal(counts.begin(), counts.end(), spec.exponents().begin())) {
    throw std::invalid_argument("cut order must match the exponents");
  }
  Cycle result = fundamental(spec.n());
  for (int label : labels) {
    result = psi_divisor(result, label);
  }
  return result;
}

Cycle psi_product_generic(const PsiSpec& spec) {
  require_cut_budget(spec);
  const Integer scale = normalization(spec.n());
  Cycle result = fundamental(spec.n());
  for (int label : ascending_labels(spec)) {
    const Cycle raw = weil_divisor(result, label);
    std::map<ConeType, Integer> scaled;
    for (const auto& [cone, weight] : raw.weights()) {
      scaled.emplace(cone, weight / scale);
    }
    result = Cycle(raw.n(), raw.dim(), std::move(scaled));
  }
  return result;
}

Cycle psi_product_closed_form(const PsiSpec& spec) {
  require_cut_budget(spec);
  const std::vector<ConeType> cones =
      enumerate_cones(spec.n(), spec.result_dim());
  Integer denominator = 1;
  for (int e : spec.exponents()) {
    denominator *= factorial(e);
  }
  std::vector<Integer> weights(cones.size());
  parallel_for(cones.size(), [&](std::size_t i) {
    const TreeView tree = cone_to_tree(cones[i]);
    const std::vector<std::vector<int>> leaf_sets =
        leaf_sets_at_vertices(cones[i], spec.exponents());
    Integer numerator = 1;
    for (int v = 0; v < tree.vertex_count; ++v) {
      int vertex_total = 0;
      for (int leaf : leaf_sets[v]) {
        vertex_total += spec.exponent(leaf);
      }
      if (tree.valence[v] != vertex_total + 3) {
        numerator = 0;
        break;
      }
      numerator *= factorial(vertex_total);
    }
    if (numerator != 0 && numerator % denominator != 0) {
      throw std::logic_error("closed-form weight is not integral");
    }
    weights[i] = numerator / denominator;
  });
  std::map<ConeType, Integer> result;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (weights[i] != 0) {
      result.emplace(cones[i], weights[i]);
    }
  }
  return Cycle(spec.n(), spec.result_dim(), std::move(result));
}

std::vector<WeightDiff> diff_cycles(const Cycle& left, const Cycle& right) {
  if (left.n() != right.n() || left.dim() != right.dim()) {
    throw std::invalid_argument("cycles live in different spaces");
  }
  std::vector<WeightDiff> diffs;
  auto l = left.weights().begin();
  auto r = right.weights().begin();
  while (l != left.weights().end() || r != right.weights().end()) {
    if (r == right.weights().end() ||
        (l != left.weights().end() && l->first < r->first)) {
      diffs.push_back({l->first, l->second, 0});
      ++l;
    } else if (l == left.weights().end() || r->first < l->first) {
      diffs.push_back({r->first, 0, r->second});
      ++r;
    } else {
      if (l->second != r->second) {
        diffs.push_back({l->first, l->second, r->second});
      }
      ++l;
      ++r;
    }
  }
  return diffs;
}

ProductComparison compare_products(const PsiSpec& spec) {
  Cycle iterated = psi_product(spec);
  Cycle closed = psi_product_closed_form(spec);
  std::vector<WeightDiff> diffs = diff_cycles(iterated, closed);
  return {std::move(iterated), std::move(closed), std::move(diffs)};
}

CheckedProduct psi_product_checked(const PsiSpec& spec, std::uint64_t seed,
                                   std::size_t ridges_per_step) {
  require_cut_budget(spec);
  std::mt19937_64 rng(seed);
  const Integer scale = normalization(spec.n());
  Cycle result = fundamental(spec.n());
  std::size_t checked = 0;
  for (int label : ascending_labels(spec)) {
    require_cuttable(result);
    const std::vector<RidgeStar> stars = ridge_stars(result);
    std::vector<Integer> weights(stars.size());
    parallel_for(stars.size(), [&](std::size_t i) {
      weights[i] = psi_ridge_weight(spec.n(), label, stars[i]);
    });
    std::vector<std::size_t> order(stars.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    order.resize(std::min(ridges_per_step, order.size()));
    for (std::size_t i : order) {
      if (weil_ridge_weight(spec.n(), label, stars[i]) != scale * weights[i]) {
        throw std::runtime_error("normalized and direct ridge weights disagree");
      }
      ++checked;
    }
    result = assemble(result.n(), result.dim() - 1, stars, weights);
  }
  return {std::move(result), checked};
}

}  // namespace tropm0n
