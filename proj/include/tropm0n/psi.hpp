#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tropm0n/cycle.hpp"
#include "tropm0n/trees.hpp"
#include "tropm0n/types.hpp"

namespace tropm0n {

// Exponent vector of a psi-class product on n leaves.  The product is only
// evaluable while total() <= n-3.
class PsiSpec {
 public:
  PsiSpec(int n, std::vector<int> exponents);

  int n() const { return n_; }
  const std::vector<int>& exponents() const { return exponents_; }
  int exponent(int label) const { return exponents_[label - 1]; }

  int total() const;
  int result_dim() const { return n_ - 3 - total(); }

 private:
  int n_;
  std::vector<int> exponents_;
};

// Weight of the ridge in the Weil divisor of the potential of leaf k:
// weighted potential values of the neighbor rays minus the potential of
// their weighted sum.  Always a multiple of C(n-1, 2) (asserted).
Integer weil_ridge_weight(int n, int k, const RidgeStar& star);

// The same weight divided by C(n-1, 2), evaluated directly: the minimum
// over 2-subsets T avoiding k of the total weight of the neighbors whose
// added split puts T on the side away from k.
Integer psi_ridge_weight(int n, int k, const RidgeStar& star);

// Weil divisor of the potential of leaf k.  Ridges of weight 0 are
// dropped; the result lives one dimension down.  Requires dim >= 1.
Cycle weil_divisor(const Cycle& cycle, int k);

// weil_divisor normalized by C(n-1, 2): cutting with the psi class of
// leaf k.  Uses the minimum formula, so weights stay integral throughout.
Cycle psi_divisor(const Cycle& cycle, int k);

// Iterated psi_divisor over the fundamental cycle, cutting each leaf
// exponent-many times in ascending leaf order.
Cycle psi_product(const PsiSpec& spec);

// The same product cutting in the given order; labels must match the
// exponents with multiplicity.
Cycle psi_product_ordered(const PsiSpec& spec, std::span<const int> labels);

// The product along the unnormalized divisors, dividing each step by
// C(n-1, 2).  Slower by a large factor; kept as an independent path.
Cycle psi_product_generic(const PsiSpec& spec);

// Direct evaluation without any divisors: keeps the cones of the result
// dimension whose every vertex V has valence K(V) + 3, where K(V) sums the
// exponents of the leaves at V; such a cone gets weight
// prod_V K(V)! / prod_i k_i! (an integer, asserted).
Cycle psi_product_closed_form(const PsiSpec& spec);

struct WeightDiff {
  ConeType cone;
  Integer left;
  Integer right;
};

// Cone-by-cone weight differences, ascending by cone.  Empty iff equal.
std::vector<WeightDiff> diff_cycles(const Cycle& left, const Cycle& right);

struct ProductComparison {
  Cycle iterated;
  Cycle closed_form;
  std::vector<WeightDiff> diffs;

  bool equal() const { return diffs.empty(); }
};

// Runs the iterated and the closed-form path and diffs them.
ProductComparison compare_products(const PsiSpec& spec);

struct CheckedProduct {
  Cycle result;
  std::size_t ridges_checked;
};

// psi_product that revalidates up to ridges_per_step sampled ridges of
// every step against the unnormalized path; throws on any disagreement.
CheckedProduct psi_product_checked(const PsiSpec& spec, std::uint64_t seed,
                                   std::size_t ridges_per_step);

}  // namespace tropm0n
