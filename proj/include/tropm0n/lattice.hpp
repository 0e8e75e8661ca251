#pragma once

#include <vector>

#include "tropm0n/types.hpp"

namespace tropm0n {

// Smith decomposition left * a * right = diag with unimodular transforms and
// nonnegative diagonal entries, each dividing the next.
struct SmithDecomposition {
  IntegerMatrix left;
  IntegerMatrix diag;
  IntegerMatrix right;
  int rank = 0;

  std::vector<Integer> elementary_divisors() const;
};

SmithDecomposition smith_normal_form(IntegerMatrix a);

// Basis (as columns) of {x in Z^c : a x = 0}; the basis generates the full
// kernel lattice, not a finite-index sublattice.
IntegerMatrix integer_kernel(const IntegerMatrix& a);

// Basis (as columns) of span_Q(columns of a) intersected with Z^r.
IntegerMatrix saturate_columns(const IntegerMatrix& a);

// Basis (as columns) of the lattice generated by the columns of a.
IntegerMatrix column_lattice_basis(const IntegerMatrix& a);

// Whether the columns of a extend to a basis of the lattice generated by the
// columns of generators (columns of a must lie in that lattice).
bool extends_to_lattice_basis(const IntegerMatrix& a,
                              const IntegerMatrix& generators);

// Exact inverse of a matrix with determinant +-1.
IntegerMatrix unimodular_inverse(const IntegerMatrix& a);

}  // namespace tropm0n
