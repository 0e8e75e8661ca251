#include "tropm0n/linalg.hpp"

#include <stdexcept>

namespace tropm0n {

RationalSpan::RationalSpan(Eigen::Index dim) : dim_(dim) {
  if (dim < 0) {
    throw std::invalid_argument("span dimension must be nonnegative");
  }
}

RationalVector RationalSpan::reduce(RationalVector v) const {
  if (v.size() != dim_) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational coeff = v[pivots_[i]];
    if (coeff != 0) {
      v -= coeff * basis_[i];
    }
  }
  return v;
}

bool RationalSpan::contains(const RationalVector& v) const {
  const RationalVector r = reduce(v);
  for (Eigen::Index i = 0; i < dim_; ++i) {
    if (r[i] != 0) {
      return false;
    }
  }
  return true;
}

bool RationalSpan::insert(RationalVector v) {
  v = reduce(std::move(v));
  Eigen::Index pivot = -1;
  for (Eigen::Index i = 0; i < dim_; ++i) {
    if (v[i] != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) {
    return false;
  }
  v /= v[pivot];
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational coeff = basis_[i][pivot];
    if (coeff != 0) {
      basis_[i] -= coeff * v;
    }
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace tropm0n
