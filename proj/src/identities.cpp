#include "tropm0n/identities.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tropm0n {
namespace {

long masked_sum(std::span<const int> k, unsigned mask) {
  long total = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (mask & (1u << i)) {
      total += k[i];
    }
  }
  return total;
}

void require_enumerable(std::span<const int> k) {
  if (k.size() > 25) {
    throw std::invalid_argument("subset enumeration limited to 25 weights");
  }
}

void require_nonnegative(std::span<const int> k) {
  for (int v : k) {
    if (v < 0) {
      throw std::invalid_argument("weights must be nonnegative");
    }
  }
}

}  // namespace

Integer falling_power(const Integer& x, int p) {
  if (p < 0) {
    throw std::invalid_argument("falling power needs a nonnegative exponent");
  }
  Integer out = 1;
  for (int i = 0; i < p; ++i) {
    out *= x - i;
  }
  return out;
}

Integer factorial(int m) {
  if (m < 0) {
    throw std::invalid_argument("factorial of a negative number");
  }
  return falling_power(m, m);
}

Integer binomial(long top, long bottom) {
  if (top < 0) {
    throw std::invalid_argument("binomial needs a nonnegative top");
  }
  if (bottom < 0 || bottom > top) {
    return 0;
  }
  const int b = static_cast<int>(bottom);
  return falling_power(top, b) / factorial(b);
}

Integer multinomial(int total, std::span<const int> parts) {
  require_nonnegative(parts);
  if (std::accumulate(parts.begin(), parts.end(), 0L) != total) {
    throw std::invalid_argument("multinomial parts must sum to the total");
  }
  Integer out = factorial(total);
  for (int part : parts) {
    out /= factorial(part);
  }
  return out;
}

bool check_falling_sum_identity(std::span<const int> k, long K) {
  const int m = static_cast<int>(k.size());
  if (m < 1) {
    throw std::invalid_argument("need at least one weight");
  }
  require_enumerable(k);
  Integer lhs = 0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    const int size = std::popcount(mask);
    const long ki = masked_sum(k, mask);
    lhs += falling_power(ki, size - 1) * falling_power(Integer(K) - ki, m - size);
  }
  return lhs == m * falling_power(K, m - 1);
}

bool check_falling_sum_extension(std::span<const int> k, long K) {
  if (k.empty()) {
    throw std::invalid_argument("need the distinguished weight");
  }
  const int k1 = k[0];
  const std::span<const int> rest = k.subspan(1);
  const int m = static_cast<int>(rest.size());
  require_enumerable(rest);
  Integer lhs = falling_power(Integer(K) - k1, m);
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    const int size = std::popcount(mask);
    const long ki = masked_sum(rest, mask) + k1;
    lhs += (k1 + 1) * falling_power(ki, size - 1) *
           falling_power(Integer(K) - ki, m - size);
  }
  return lhs == falling_power(Integer(K) + 1, m);
}

bool check_falling_sum_extension(std::span<const int> k) {
  if (k.empty()) {
    throw std::invalid_argument("need the distinguished weight");
  }
  return check_falling_sum_extension(
      k, std::accumulate(k.begin(), k.end(), 0L));
}

bool check_ridge_distribution_identity(int k1, std::span<const int> kM,
                                       long K) {
  const int m = static_cast<int>(kM.size());
  require_enumerable(kM);
  require_nonnegative(kM);
  if (k1 < 0) {
    throw std::invalid_argument("distinguished weight must be nonnegative");
  }
  if (K < masked_sum(kM, (1u << m) - 1) + k1) {
    throw std::invalid_argument("total must cover the weight sum");
  }
  if (K + 1 < m) {
    throw std::invalid_argument("total too small for the index set");
  }
  Integer lhs = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    const int size = std::popcount(mask);
    const long ki = masked_sum(kM, mask) + k1;
    lhs += factorial(static_cast<int>(ki)) *
           factorial(static_cast<int>(K - ki)) *
           binomial(K + 1 - m, ki + 1 - size);
  }
  const Integer top = factorial(static_cast<int>(K) + 1);
  if (top % (k1 + 1) != 0) {
    throw std::logic_error("right side of the distribution identity is not integral");
  }
  return lhs == top / (k1 + 1);
}

bool check_falling_multinomial(std::span<const long> xs, int p) {
  if (xs.empty()) {
    throw std::invalid_argument("need at least one base");
  }
  if (p < 0) {
    throw std::invalid_argument("need a nonnegative exponent");
  }
  Integer sum = 0;
  for (long x : xs) {
    sum += x;
  }
  Integer rhs = 0;
  std::vector<int> a(xs.size(), 0);
  auto visit = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == a.size()) {
      a[i] = left;
      Integer term = multinomial(p, a);
      for (std::size_t j = 0; j < a.size(); ++j) {
        term *= falling_power(xs[j], a[j]);
      }
      rhs += term;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[i] = v;
      self(self, i + 1, left - v);
    }
  };
  visit(visit, 0, p);
  return falling_power(sum, p) == rhs;
}

bool check_subset_factorial_identity(std::span<const int> a) {
  const int m = static_cast<int>(a.size());
  if (m < 1) {
    throw std::invalid_argument("need at least one entry");
  }
  require_enumerable(a);
  require_nonnegative(a);
  if (masked_sum(a, (1u << m) - 1) >= m) {
    throw std::invalid_argument("entry sum must stay below the length");
  }
  Integer lhs = 0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    const int size = std::popcount(mask);
    if (masked_sum(a, mask) == size - 1) {
      lhs += factorial(size - 1) * factorial(m - size);
    }
  }
  return lhs == factorial(m);
}

}  // namespace tropm0n
