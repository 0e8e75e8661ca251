#include "tropm0n/pair_index.hpp"

#include <stdexcept>

namespace tropm0n {

PairIndex::PairIndex(int n) : n_(n) {
  if (n < 3) {
    throw std::invalid_argument("PairIndex requires n >= 3");
  }
  pairs_.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  lookup_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      lookup_[static_cast<std::size_t>(i - 1) * n + (j - 1)] =
          static_cast<int>(pairs_.size());
      lookup_[static_cast<std::size_t>(j - 1) * n + (i - 1)] =
          static_cast<int>(pairs_.size());
      pairs_.emplace_back(i, j);
    }
  }
}

int PairIndex::index(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || i == j) {
    throw std::invalid_argument("pair labels out of range");
  }
  return lookup_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

}  // namespace tropm0n
