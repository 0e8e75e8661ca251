#include "tropm0n/lattice.hpp"

#include <doctest.h>

#include <random>

#include "tropm0n/linalg.hpp"

using namespace tropm0n;

namespace {

IntegerMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c =
      r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntegerMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int x : row) {
      m(i, j++) = x;
    }
    ++i;
  }
  return m;
}

void check_decomposition(const IntegerMatrix& a) {
  const SmithDecomposition d = smith_normal_form(a);
  CHECK(d.left * a * d.right == d.diag);
  // Transforms are unimodular.
  CHECK(unimodular_inverse(d.left).rows() == a.rows());
  CHECK(unimodular_inverse(d.right).rows() == a.cols());
  // Diagonal, nonnegative, divisor chain, zeros after the rank.
  for (Eigen::Index i = 0; i < d.diag.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.diag.cols(); ++j) {
      if (i != j) {
        CHECK(d.diag(i, j) == 0);
      }
    }
  }
  const auto divisors = d.elementary_divisors();
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    CHECK(divisors[i] > 0);
    if (i > 0) {
      CHECK(divisors[i] % divisors[i - 1] == 0);
    }
  }
  for (Eigen::Index i = d.rank; i < std::min(d.diag.rows(), d.diag.cols());
       ++i) {
    CHECK(d.diag(i, i) == 0);
  }
  // Rank agrees with rational rank.
  RationalSpan span(a.rows());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    span.insert(to_rational(IntegerVector(a.col(j))));
  }
  CHECK(span.rank() == d.rank);
}

}  // namespace

TEST_CASE("smith normal form on fixed matrices") {
  const SmithDecomposition d1 = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
  CHECK(d1.elementary_divisors() == std::vector<Integer>{2, 4});

  const SmithDecomposition d2 =
      smith_normal_form(IntegerMatrix::Identity(3, 3));
  CHECK(d2.elementary_divisors() == std::vector<Integer>{1, 1, 1});

  const SmithDecomposition d3 = smith_normal_form(from_rows({{4, 0}, {0, 6}}));
  CHECK(d3.elementary_divisors() == std::vector<Integer>{2, 12});

  const SmithDecomposition d4 = smith_normal_form(from_rows({{0, 0}, {0, 0}}));
  CHECK(d4.rank == 0);

  const SmithDecomposition d5 = smith_normal_form(from_rows({{2, 6, 4}}));
  CHECK(d5.elementary_divisors() == std::vector<Integer>{2});
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<int> size(0, 6);
  for (int trial = 0; trial < 120; ++trial) {
    IntegerMatrix a(size(rng), size(rng));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        a(i, j) = entry(rng);
      }
    }
    check_decomposition(a);
  }
}

TEST_CASE("integer kernel") {
  const IntegerMatrix k1 = integer_kernel(from_rows({{1, 2, 3}}));
  REQUIRE(k1.cols() == 2);
  CHECK(from_rows({{1, 2, 3}}) * k1 == IntegerMatrix::Zero(1, 2));

  const IntegerMatrix k2 = integer_kernel(from_rows({{2, 4}, {1, 2}}));
  REQUIRE(k2.cols() == 1);
  // The kernel lattice is generated by (2, -1), not a multiple of it.
  CHECK((k2(0, 0) == 2 || k2(0, 0) == -2));

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    IntegerMatrix a(3, 5);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        a(i, j) = entry(rng);
      }
    }
    const IntegerMatrix k = integer_kernel(a);
    CHECK(a * k == IntegerMatrix::Zero(3, k.cols()));
    // The kernel basis is saturated: its own divisors are all 1.
    for (const Integer& divisor :
         smith_normal_form(k).elementary_divisors()) {
      CHECK(divisor == 1);
    }
  }
}

TEST_CASE("saturation of a column span") {
  // The lattice of integer points in span{(2,2)} is generated by (1,1).
  const IntegerMatrix sat = saturate_columns(from_rows({{2}, {2}}));
  REQUIRE(sat.cols() == 1);
  CHECK(sat(0, 0) == sat(1, 0));
  CHECK((sat(0, 0) == 1 || sat(0, 0) == -1));

  // A full-rank span saturates to the whole ambient lattice.
  const IntegerMatrix full = saturate_columns(from_rows({{2, 0}, {0, 3}}));
  CHECK(full.cols() == 2);
  for (const Integer& divisor :
       smith_normal_form(full).elementary_divisors()) {
    CHECK(divisor == 1);
  }
}

TEST_CASE("column lattice basis") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    IntegerMatrix g(4, 6);
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      for (Eigen::Index j = 0; j < g.cols(); ++j) {
        g(i, j) = entry(rng);
      }
    }
    const IntegerMatrix basis = column_lattice_basis(g);
    // Every generator is an integer combination of the basis.
    const Eigen::FullPivLU<RationalMatrix> lu(to_rational(basis));
    const RationalMatrix coords = lu.solve(to_rational(g));
    CHECK(to_rational(basis) * coords == to_rational(g));
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
      for (Eigen::Index j = 0; j < coords.cols(); ++j) {
        CHECK(denominator(coords(i, j)) == 1);
      }
    }
    // Conversely each basis column lies in the generated lattice: the two
    // lattices have equal covolume in their common span.
    const auto basis_divisors = smith_normal_form(basis).elementary_divisors();
    const auto gen_divisors = smith_normal_form(g).elementary_divisors();
    Integer p1 = 1;
    Integer p2 = 1;
    for (const Integer& x : basis_divisors) {
      p1 *= x;
    }
    for (const Integer& x : gen_divisors) {
      p2 *= x;
    }
    CHECK(p1 == p2);
  }
}

TEST_CASE("extending to a lattice basis") {
  const IntegerMatrix z2 = IntegerMatrix::Identity(2, 2);
  CHECK(extends_to_lattice_basis(from_rows({{1}, {0}}), z2));
  CHECK(extends_to_lattice_basis(from_rows({{3}, {2}}), z2));
  CHECK_FALSE(extends_to_lattice_basis(from_rows({{2}, {0}}), z2));
  CHECK_FALSE(extends_to_lattice_basis(from_rows({{1, 1}, {1, -1}}), z2));
  CHECK(extends_to_lattice_basis(from_rows({{1, 0}, {1, 1}}), z2));

  // Index-2 sublattice {(a,b) : a+b even}.
  const IntegerMatrix even = from_rows({{1, 1}, {1, -1}});
  CHECK(extends_to_lattice_basis(from_rows({{1}, {1}}), even));
  CHECK(extends_to_lattice_basis(from_rows({{0}, {2}}), even));
  CHECK_FALSE(extends_to_lattice_basis(from_rows({{1}, {0}}), even));
  CHECK_FALSE(extends_to_lattice_basis(from_rows({{2}, {2}}), even));

  // Empty extension is vacuously fine.
  CHECK(extends_to_lattice_basis(IntegerMatrix(2, 0), z2));
}

TEST_CASE("unimodular inverse") {
  const IntegerMatrix u = from_rows({{2, 1}, {1, 1}});
  const IntegerMatrix inv = unimodular_inverse(u);
  CHECK(u * inv == IntegerMatrix::Identity(2, 2));
  CHECK_THROWS_AS(unimodular_inverse(from_rows({{2, 0}, {0, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(unimodular_inverse(from_rows({{1, 1}, {1, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(unimodular_inverse(from_rows({{1, 1, 0}, {0, 1, 1}})),
                  std::invalid_argument);
}
