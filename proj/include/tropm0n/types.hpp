#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace tropm0n {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerVector = Vector<Integer>;
using IntegerMatrix = Matrix<Integer>;
using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

inline RationalVector to_rational(const IntegerVector& v) {
  return v.template cast<Rational>();
}

inline RationalMatrix to_rational(const IntegerMatrix& m) {
  return m.template cast<Rational>();
}

// Throws unless every entry is integral.
IntegerVector to_integer(const RationalVector& v);
Integer to_integer(const Rational& x);

}  // namespace tropm0n
