#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tropm0n/pair_index.hpp"
#include "tropm0n/split.hpp"
#include "tropm0n/trees.hpp"
#include "tropm0n/types.hpp"

namespace tropm0n {

// Ambient coordinates are indexed by the 2-subsets of [n] in PairIndex
// order.  Vectors are considered modulo the image of pair_sums, which is the
// kernel of the distance-matrix description of a tree metric.

// (pair_sums(a))_{ij} = a_i + a_j.
template <typename Scalar>
Vector<Scalar> pair_sums(int n, const Vector<Scalar>& leaf_values) {
  const PairIndex idx(n);
  if (leaf_values.size() != n) {
    throw std::invalid_argument("need one value per leaf");
  }
  Vector<Scalar> out(idx.count());
  for (int p = 0; p < idx.count(); ++p) {
    const auto& [i, j] = idx.pair(p);
    out[p] = leaf_values[i - 1] + leaf_values[j - 1];
  }
  return out;
}

// Column j is pair_sums of the j-th unit vector.
IntegerMatrix pair_sums_matrix(int n);

// Entry at pair {i,j} is 1 when the split separates i from j, else 0.  This
// is the primitive generator of the split's ray.
IntegerVector split_vector(const Split& s);

// Metric of the curve with the given edge lengths: entry {i,j} is the path
// distance between leaves i and j, up to pair_sums of leaf lengths.  Lengths
// must cover exactly the cone's splits and be positive.
RationalVector embed_curve(const ConeType& cone,
                           const std::map<Split, Rational>& lengths);

bool quotient_equal(int n, const RationalVector& v, const RationalVector& w);

// dim of the quotient of the ambient space by the image of pair_sums.
int quotient_dim(int n);

// The unique expansion of v as a nonnegative combination of the split
// vectors of 2-subsets avoiding leaf k, with at least one zero coefficient,
// modulo pair_sums.
struct PositiveRepresentation {
  int n = 0;
  int k = 0;
  std::vector<std::pair<int, int>> pairs;  // 2-subsets avoiding k, ascending
  std::vector<Rational> coeffs;            // aligned with pairs

  Rational total() const;
  const Rational& coeff(int i, int j) const;
};

PositiveRepresentation positive_representation(int n, int k,
                                               const RationalVector& v);

// Value of the piecewise-linear potential of leaf k: the coefficient sum of
// the positive representation.  Its Weil divisor is a multiple of the psi
// class of leaf k.
Rational psi_potential(int n, int k, const RationalVector& v);

// Whether the split vectors of 2-subsets avoiding k span the quotient.
bool spans_quotient(int n, int k);

// Whether the projected split vectors of a maximal cone form part of a basis
// of the lattice generated by all split vectors.
bool unimodular_cone(const ConeType& maximal_cone);
bool unimodular_rays(int n, const std::vector<IntegerVector>& rays);

}  // namespace tropm0n
