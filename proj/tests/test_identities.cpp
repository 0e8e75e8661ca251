#include "tropm0n/identities.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace tropm0n;

namespace {

// All vectors of the given length with entries in 0..max_entry, visited in
// counter order.
template <typename Fn>
void for_each_tuple(int length, int max_entry, const Fn& fn) {
  std::vector<int> k(length, 0);
  while (true) {
    fn(k);
    int i = 0;
    while (i < length && k[i] == max_entry) {
      k[i] = 0;
      ++i;
    }
    if (i == length) {
      return;
    }
    ++k[i];
  }
}

}  // namespace

TEST_CASE("falling powers") {
  CHECK(falling_power(5, 3) == 60);
  CHECK(falling_power(5, 0) == 1);
  CHECK(falling_power(-3, 0) == 1);
  CHECK(falling_power(3, 5) == 0);
  CHECK(falling_power(-2, 3) == -24);
  CHECK(falling_power(Integer("1000000000000"), 2) ==
        Integer("999999999999000000000000"));
  CHECK_THROWS_AS(falling_power(4, -1), std::invalid_argument);
}

TEST_CASE("factorials and binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);

  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);

  for (long top = 0; top <= 12; ++top) {
    for (long bottom = 0; bottom <= top; ++bottom) {
      // Pascal recurrence as the independent definition.
      const Integer lhs = binomial(top + 1, bottom + 1);
      CHECK(lhs == binomial(top, bottom) + binomial(top, bottom + 1));
    }
  }
}

TEST_CASE("multinomials") {
  CHECK(multinomial(2, std::vector<int>{1, 1, 0, 0, 0}) == 2);
  CHECK(multinomial(2, std::vector<int>{2, 0, 0, 0, 0}) == 1);
  CHECK(multinomial(3, std::vector<int>{1, 1, 1, 0, 0, 0}) == 6);
  CHECK(multinomial(4, std::vector<int>{2, 2}) == 6);
  CHECK(multinomial(0, std::vector<int>{0, 0}) == 1);
  CHECK_THROWS_AS(multinomial(3, std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(multinomial(1, std::vector<int>{2, -1}), std::invalid_argument);
}

TEST_CASE("falling sum identity by hand and errors") {
  // k = (1,2), K = 5: subsets give 4 + 3 + 3 = 10 = 2 * 5^[1].
  CHECK(check_falling_sum_identity(std::vector<int>{1, 2}, 5));
  CHECK(check_falling_sum_identity(std::vector<int>{3}, 7));
  CHECK(check_falling_sum_identity(std::vector<int>{2, 1}, -3));
  CHECK_THROWS_AS(check_falling_sum_identity(std::vector<int>{}, 4),
                  std::invalid_argument);
}

TEST_CASE("falling sum identity sweep") {
  for (int m = 1; m <= 4; ++m) {
    for_each_tuple(m, 4, [&](const std::vector<int>& k) {
      for (long K = -2; K <= 12; ++K) {
        CHECK(check_falling_sum_identity(k, K));
      }
    });
  }
  // Spot checks at the sweep edge kept small; the acceptance run covers the
  // full grid.
  for_each_tuple(6, 2, [&](const std::vector<int>& k) {
    CHECK(check_falling_sum_identity(k, 25));
  });
}

TEST_CASE("falling sum extension by hand") {
  CHECK(check_falling_sum_extension(std::vector<int>{3}));  // empty index set
  // k = (0,1): K = 1, left = 1^[1] + 1*1^[0]*0^[0] = 2 = (K+1)^[1].
  CHECK(check_falling_sum_extension(std::vector<int>{0, 1}));
  CHECK_THROWS_AS(check_falling_sum_extension(std::vector<int>{}),
                  std::invalid_argument);
}

TEST_CASE("falling sum extension sweep") {
  for (int m = 0; m <= 4; ++m) {
    for_each_tuple(m + 1, 4, [&](const std::vector<int>& k) {
      CHECK(check_falling_sum_extension(k));
    });
  }
}

TEST_CASE("falling sum extension holds for a free total") {
  for (int m = 0; m <= 3; ++m) {
    for_each_tuple(m + 1, 3, [&](const std::vector<int>& k) {
      for (long K = -4; K <= 10; ++K) {
        CHECK(check_falling_sum_extension(k, K));
      }
    });
  }
}

TEST_CASE("ridge distribution identity by hand") {
  // Empty index set, k1 = 1, K = 1: 1! 0! C(2,2) = 1 = 2!/2.
  CHECK(check_ridge_distribution_identity(1, std::vector<int>{}, 1));
  // m = 1, k1 = 0, kM = (1), K = 1: subsets {} and {1} give
  // 0! 1! C(1,1) + 1! 0! C(1,1) = 2 = 2!/1.
  CHECK(check_ridge_distribution_identity(0, std::vector<int>{1}, 1));
}

TEST_CASE("ridge distribution identity sweep") {
  for (int m = 0; m <= 4; ++m) {
    for (int k1 = 0; k1 <= 3; ++k1) {
      for_each_tuple(m, 3, [&](const std::vector<int>& kM) {
        long base = k1;
        for (int v : kM) {
          base += v;
        }
        for (long slack = 0; slack <= 6; ++slack) {
          const long K = base + slack;
          if (K + 1 < m) {
            continue;
          }
          CHECK(check_ridge_distribution_identity(k1, kM, K));
        }
      });
    }
  }
}

TEST_CASE("ridge distribution identity rejects bad parameters") {
  CHECK_THROWS_AS(check_ridge_distribution_identity(-1, std::vector<int>{}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_ridge_distribution_identity(0, std::vector<int>{-1}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_ridge_distribution_identity(2, std::vector<int>{2}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      check_ridge_distribution_identity(0, std::vector<int>{0, 0, 0}, 1),
      std::invalid_argument);
}

TEST_CASE("falling multinomial expansion") {
  // (2+3)^[2] = 20 = 2 + 2*2*3 + 6.
  CHECK(check_falling_multinomial(std::vector<long>{2, 3}, 2));
  CHECK(check_falling_multinomial(std::vector<long>{5}, 3));
  CHECK(check_falling_multinomial(std::vector<long>{0, 0, 0}, 2));

  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> base(-6, 6);
  std::uniform_int_distribution<int> length(1, 4);
  std::uniform_int_distribution<int> power(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> xs(length(rng));
    for (long& x : xs) {
      x = base(rng);
    }
    CHECK(check_falling_multinomial(xs, power(rng)));
  }
  CHECK_THROWS_AS(check_falling_multinomial(std::vector<long>{}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_falling_multinomial(std::vector<long>{1}, -1),
                  std::invalid_argument);
}

TEST_CASE("subset factorial identity") {
  // All-zero entries leave only the singletons: m * (m-1)! = m!.
  for (int m = 1; m <= 6; ++m) {
    CHECK(check_subset_factorial_identity(std::vector<int>(m, 0)));
  }
  // Every valid tuple with entries summing below the length.
  for (int m = 1; m <= 6; ++m) {
    for_each_tuple(m, m - 1, [&](const std::vector<int>& a) {
      long total = 0;
      for (int v : a) {
        total += v;
      }
      if (total < m) {
        CHECK(check_subset_factorial_identity(a));
      }
    });
  }
  CHECK_THROWS_AS(check_subset_factorial_identity(std::vector<int>{1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_subset_factorial_identity(std::vector<int>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_subset_factorial_identity(std::vector<int>{-1, 0}),
                  std::invalid_argument);
}
