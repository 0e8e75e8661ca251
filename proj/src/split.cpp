#include "tropm0n/split.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tropm0n {

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::vector<int> mask_labels(std::uint64_t mask) {
  std::vector<int> labels;
  while (mask) {
    int bit = std::countr_zero(mask);
    labels.push_back(bit + 1);
    mask &= mask - 1;
  }
  return labels;
}

namespace {

std::uint64_t canonicalize(int n, std::uint64_t side) {
  if (n < 4 || n > 64) {
    throw std::invalid_argument("splits exist for 4 <= n <= 64");
  }
  const std::uint64_t all = full_mask(n);
  if (side & ~all) {
    throw std::invalid_argument("split side contains labels beyond n");
  }
  if (side & (std::uint64_t{1} << (n - 1))) {
    side = all & ~side;
  }
  const int size = std::popcount(side);
  if (size < 2 || n - size < 2) {
    throw std::invalid_argument("both sides of a split need >= 2 labels");
  }
  return side;
}

std::uint64_t labels_to_mask(const std::vector<int>& labels) {
  std::uint64_t mask = 0;
  for (int l : labels) {
    if (l < 1 || l > 64) {
      throw std::invalid_argument("split labels must lie in 1..64");
    }
    const std::uint64_t bit = std::uint64_t{1} << (l - 1);
    if (mask & bit) {
      throw std::invalid_argument("repeated label in split side");
    }
    mask |= bit;
  }
  return mask;
}

}  // namespace

Split::Split(int n, std::uint64_t side_mask)
    : n_(n), mask_(canonicalize(n, side_mask)) {}

Split::Split(int n, const std::vector<int>& side_labels)
    : Split(n, labels_to_mask(side_labels)) {}

int Split::side_size() const { return std::popcount(mask_); }

std::vector<int> Split::labels() const { return mask_labels(mask_); }

bool Split::separates(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::invalid_argument("labels out of range");
  }
  const bool a = mask_ >> (i - 1) & 1;
  const bool b = mask_ >> (j - 1) & 1;
  return a != b;
}

std::uint64_t Split::side_containing(int label) const {
  if (label < 1 || label > n_) {
    throw std::invalid_argument("label out of range");
  }
  return (mask_ >> (label - 1) & 1) ? mask_ : full_mask(n_) & ~mask_;
}

std::uint64_t Split::side_avoiding(int label) const {
  return full_mask(n_) & ~side_containing(label);
}

bool Split::operator<(const Split& other) const {
  if (n_ != other.n_) {
    return n_ < other.n_;
  }
  if (mask_ == other.mask_) {
    return false;
  }
  // First differing label decides; a set that is a prefix of the other
  // comes first.
  const std::uint64_t diff = mask_ ^ other.mask_;
  const std::uint64_t low = diff & (~diff + 1);
  if (mask_ & low) {
    return (other.mask_ & ~(low | (low - 1))) != 0;
  }
  return (mask_ & ~(low | (low - 1))) == 0;
}

bool compatible(const Split& a, const Split& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("splits of different n are incomparable");
  }
  // Both canonical sides avoid label n, so their union never covers [n]:
  // compatibility reduces to disjointness or nesting.
  const std::uint64_t x = a.mask();
  const std::uint64_t y = b.mask();
  const std::uint64_t common = x & y;
  return common == 0 || common == x || common == y;
}

std::vector<Split> all_splits(int n) {
  if (n < 3 || n > 64) {
    throw std::invalid_argument("all_splits requires 3 <= n <= 64");
  }
  std::vector<Split> out;
  if (n == 3) {
    return out;
  }
  // Canonical sides are the subsets of [n-1] of size 2..n-2.
  std::vector<int> stack;
  auto emit = [&](auto&& self, int next, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(n, stack);
      return;
    }
    for (int l = next; l + remaining <= n; ++l) {
      stack.push_back(l);
      self(self, l + 1, remaining - 1);
      stack.pop_back();
    }
  };
  for (int size = 2; size <= n - 2; ++size) {
    emit(emit, 1, size);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tropm0n
