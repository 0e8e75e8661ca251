#include "tropm0n/lattice.hpp"

#include <stdexcept>

namespace tropm0n {

namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

std::vector<Integer> SmithDecomposition::elementary_divisors() const {
  std::vector<Integer> out;
  for (int i = 0; i < rank; ++i) {
    out.push_back(diag(i, i));
  }
  return out;
}

SmithDecomposition smith_normal_form(IntegerMatrix a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  SmithDecomposition d;
  d.left = IntegerMatrix::Identity(rows, rows);
  d.right = IntegerMatrix::Identity(cols, cols);

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    // Move a smallest nonzero entry of the remaining block to (t, t).
    Eigen::Index pi = -1;
    Eigen::Index pj = -1;
    for (Eigen::Index i = t; i < rows; ++i) {
      for (Eigen::Index j = t; j < cols; ++j) {
        if (a(i, j) != 0 &&
            (pi < 0 || abs_int(a(i, j)) < abs_int(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) {
      break;
    }
    a.row(t).swap(a.row(pi));
    d.left.row(t).swap(d.left.row(pi));
    a.col(t).swap(a.col(pj));
    d.right.col(t).swap(d.right.col(pj));

    for (bool settled = false; !settled;) {
      settled = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) {
          continue;
        }
        const Integer q = a(i, t) / a(t, t);
        if (q != 0) {
          a.row(i) -= q * a.row(t);
          d.left.row(i) -= q * d.left.row(t);
        }
        if (a(i, t) != 0) {
          // The remainder is a smaller pivot candidate.
          a.row(t).swap(a.row(i));
          d.left.row(t).swap(d.left.row(i));
          settled = false;
          break;
        }
      }
      if (!settled) {
        continue;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) {
          continue;
        }
        const Integer q = a(t, j) / a(t, t);
        if (q != 0) {
          a.col(j) -= q * a.col(t);
          d.right.col(j) -= q * d.right.col(t);
        }
        if (a(t, j) != 0) {
          a.col(t).swap(a.col(j));
          d.right.col(t).swap(d.right.col(j));
          settled = false;
          break;
        }
      }
      if (!settled) {
        continue;
      }
      // Pivot must divide the remaining block for the divisor chain.
      for (Eigen::Index i = t + 1; i < rows && settled; ++i) {
        for (Eigen::Index j = t + 1; j < cols && settled; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            a.row(t) += a.row(i);
            d.left.row(t) += d.left.row(i);
            settled = false;
          }
        }
      }
    }
    if (a(t, t) < 0) {
      a.row(t) = -a.row(t);
      d.left.row(t) = -d.left.row(t);
    }
    d.rank = static_cast<int>(t) + 1;
  }
  d.diag = std::move(a);
  return d;
}

IntegerMatrix integer_kernel(const IntegerMatrix& a) {
  const SmithDecomposition d = smith_normal_form(a);
  return d.right.rightCols(a.cols() - d.rank);
}

IntegerMatrix saturate_columns(const IntegerMatrix& a) {
  const IntegerMatrix complement = integer_kernel(a.transpose());
  return integer_kernel(complement.transpose());
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("only square matrices can be inverted");
  }
  if (a.rows() == 0) {
    return a;
  }
  const Eigen::FullPivLU<RationalMatrix> lu(to_rational(a));
  if (!lu.isInvertible()) {
    throw std::invalid_argument("matrix is singular");
  }
  const RationalMatrix inv =
      lu.solve(RationalMatrix::Identity(a.rows(), a.rows()));
  IntegerMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (denominator(inv(i, j)) != 1) {
        throw std::invalid_argument("matrix is not unimodular");
      }
      out(i, j) = numerator(inv(i, j));
    }
  }
  return out;
}

IntegerMatrix column_lattice_basis(const IntegerMatrix& a) {
  const SmithDecomposition d = smith_normal_form(a);
  const IntegerMatrix left_inverse = unimodular_inverse(d.left);
  IntegerMatrix basis(a.rows(), d.rank);
  for (int j = 0; j < d.rank; ++j) {
    basis.col(j) = d.diag(j, j) * left_inverse.col(j);
  }
  return basis;
}

bool extends_to_lattice_basis(const IntegerMatrix& a,
                              const IntegerMatrix& generators) {
  if (a.rows() != generators.rows()) {
    throw std::invalid_argument("row dimension mismatch");
  }
  if (a.cols() == 0) {
    return true;
  }
  const IntegerMatrix basis = column_lattice_basis(generators);
  if (basis.cols() == 0) {
    return false;
  }
  const Eigen::FullPivLU<RationalMatrix> lu(to_rational(basis));
  const RationalMatrix solution = lu.solve(to_rational(a));
  const RationalMatrix residual = to_rational(basis) * solution - to_rational(a);
  for (Eigen::Index i = 0; i < residual.rows(); ++i) {
    for (Eigen::Index j = 0; j < residual.cols(); ++j) {
      if (residual(i, j) != 0) {
        return false;  // some column lies outside the rational span
      }
    }
  }
  IntegerMatrix coords(basis.cols(), a.cols());
  for (Eigen::Index i = 0; i < solution.rows(); ++i) {
    for (Eigen::Index j = 0; j < solution.cols(); ++j) {
      if (denominator(solution(i, j)) != 1) {
        return false;  // some column lies outside the lattice itself
      }
      coords(i, j) = numerator(solution(i, j));
    }
  }
  const SmithDecomposition d = smith_normal_form(coords);
  if (d.rank != a.cols()) {
    return false;
  }
  for (const Integer& divisor : d.elementary_divisors()) {
    if (divisor != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace tropm0n
