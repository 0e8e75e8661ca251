#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace tropm0n {

// Bipartition {I, [n] \ I} of the leaf labels {1,...,n} with both sides of
// size at least 2.  Stored canonically as the side that does not contain
// label n, encoded as a bitmask with bit (l-1) for label l.
class Split {
 public:
  Split(int n, std::uint64_t side_mask);
  Split(int n, const std::vector<int>& side_labels);

  int n() const { return n_; }
  std::uint64_t mask() const { return mask_; }

  int side_size() const;
  std::vector<int> labels() const;  // canonical side, ascending

  bool separates(int i, int j) const;
  std::uint64_t side_containing(int label) const;
  std::uint64_t side_avoiding(int label) const;

  bool operator==(const Split& other) const = default;
  // Lexicographic on the ascending label sequence of the canonical side.
  bool operator<(const Split& other) const;

 private:
  int n_;
  std::uint64_t mask_;
};

// Whether two splits of the same [n] occur together in some tree.
bool compatible(const Split& a, const Split& b);

// All splits of [n] in ascending order.  Count is 2^(n-1) - n - 1.
std::vector<Split> all_splits(int n);

std::uint64_t full_mask(int n);
std::vector<int> mask_labels(std::uint64_t mask);

}  // namespace tropm0n
