#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tropm0n {

// Outcome of one verification suite.  Only the first few counterexamples are
// kept verbatim; failure_count has the full tally.
struct VerifyReport {
  std::string suite;
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;

  bool passed() const { return failure_count == 0; }
};

// Quotient-space groundwork for n = 4..max_n: the vanishing sum of the
// spanning set of every leaf, recovery of every unit vector from split
// vectors, and positive representations of random integer vectors
// (nonnegative, one zero coefficient, recombination, determinism).
VerifyReport verify_lemmas(int max_n, int samples_per_n = 200,
                           std::uint64_t seed = 1);

// Balancing of the fundamental cycle and every psi class for n = 4..max_n,
// and of every product cycle of positive dimension for n <= min(max_n, 6).
// Products are built one divisor at a time, so this covers every
// intermediate cycle of every iterated product.
VerifyReport verify_balancing(int max_n);

// Lattice basis test for every maximal cone, n = 4..max_n.
VerifyReport verify_unimodular(int max_n);

// Iterated divisors against the closed-form weights: every exponent vector
// with total at most n-3, exhaustively for n = 4..min(max_n, 6), plus
// random_specs random vectors for each n = 7..max_n.
VerifyReport verify_theorem(int max_n, int random_specs = 50,
                            std::uint64_t seed = 1);

// Combinatorial identity sweeps sized by the largest tuple length.
VerifyReport verify_identities(int max_m);

}  // namespace tropm0n
