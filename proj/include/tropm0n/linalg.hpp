#pragma once

#include "tropm0n/types.hpp"

namespace tropm0n {

// Incrementally maintained reduced basis of a rational subspace, for exact
// membership and rank queries.  Every basis vector has entry 1 at its pivot
// (the first nonzero position) and entry 0 at all other pivots.
class RationalSpan {
 public:
  explicit RationalSpan(Eigen::Index dim);

  // Returns true when v enlarges the span.
  bool insert(RationalVector v);

  bool contains(const RationalVector& v) const;
  RationalVector reduce(RationalVector v) const;

  int rank() const { return static_cast<int>(basis_.size()); }
  Eigen::Index dim() const { return dim_; }

 private:
  Eigen::Index dim_;
  std::vector<Eigen::Index> pivots_;
  std::vector<RationalVector> basis_;
};

}  // namespace tropm0n
