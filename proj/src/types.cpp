#include "tropm0n/types.hpp"

#include <stdexcept>

namespace tropm0n {

Integer to_integer(const Rational& x) {
  if (denominator(x) != 1) {
    throw std::runtime_error("expected an integral value");
  }
  return numerator(x);
}

IntegerVector to_integer(const RationalVector& v) {
  IntegerVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out[i] = to_integer(v[i]);
  }
  return out;
}

}  // namespace tropm0n
