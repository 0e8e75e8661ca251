#pragma once

#include <span>

#include "tropm0n/types.hpp"

namespace tropm0n {

// x (x-1) ... (x-p+1); the empty product when p = 0.
Integer falling_power(const Integer& x, int p);

Integer factorial(int m);

// Zero when bottom is negative or exceeds top.  top must be nonnegative.
Integer binomial(long top, long bottom);

// total! / prod(parts[i]!).  Parts must be nonnegative and sum to total.
Integer multinomial(int total, std::span<const int> parts);

// The checkers below evaluate both sides of a combinatorial identity by
// exhaustive subset (or composition) enumeration and report equality.  They
// are deliberately independent of the divisor code they back up.  K(I)
// denotes the sum of the weights k over an index subset I.

// Subset sum of falling-power products:
//   sum over nonempty I of K(I)^[|I|-1] (K-K(I))^[m-|I|]  ==  m K^[m-1]
// with m = |k| >= 1 and K a free integer.
bool check_falling_sum_identity(std::span<const int> k, long K);

// The same sum extended by a distinguished weight k1 = k[0]:
//   (K-k1)^[m] + sum over nonempty I of (k1+1) (K(I)+k1)^[|I|-1] (K-K(I)-k1)^[m-|I|]
//   ==  (K+1)^[m]
// where I runs over subsets of the remaining m = |k|-1 indices.  Holds for
// any integer K, not only the total of k; both versions are exercised.
bool check_falling_sum_extension(std::span<const int> k, long K);
bool check_falling_sum_extension(std::span<const int> k);

// Factorial form of the extension, which distributes a ridge weight over
// the ways of splitting a vertex:
//   sum over all I of (K(I)+k1)! (K-K(I)-k1)! C(K+1-m, K(I)+k1+1-|I|)
//   ==  (K+1)! / (k1+1)
// with I over subsets of the index set of kM and m = |kM|.  Requires
// nonnegative weights, K >= K(M)+k1 and K+1 >= m so every term is defined;
// the right side is then integral (asserted).
bool check_ridge_distribution_identity(int k1, std::span<const int> kM, long K);

// Multinomial expansion of a falling power of a sum:
//   (x1+...+xr)^[p]  ==  sum over compositions a of p of p!/prod(a_i!) prod x_i^[a_i]
bool check_falling_multinomial(std::span<const long> xs, int p);

// For nonnegative a with sum(a) < m = |a|:
//   sum over I with K(I) == |I|-1 of (|I|-1)! (m-|I|)!  ==  m!
// (here the weights are the a_i; the empty set never qualifies).
bool check_subset_factorial_identity(std::span<const int> a);

}  // namespace tropm0n
