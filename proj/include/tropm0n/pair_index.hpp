#pragma once

#include <utility>
#include <vector>

namespace tropm0n {

// Fixed ordering of the 2-subsets {i,j} of {1,...,n}: ascending in (i,j)
// with i < j.  All length-C(n,2) vectors in this library use this order.
class PairIndex {
 public:
  explicit PairIndex(int n);

  int n() const { return n_; }
  int count() const { return static_cast<int>(pairs_.size()); }

  // Labels are 1-based; i != j, order irrelevant.
  int index(int i, int j) const;
  const std::pair<int, int>& pair(int index) const { return pairs_.at(index); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> lookup_;
};

}  // namespace tropm0n
