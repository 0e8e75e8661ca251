#include "tropm0n/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "tropm0n/cycle.hpp"
#include "tropm0n/identities.hpp"
#include "tropm0n/pair_index.hpp"
#include "tropm0n/parallel.hpp"
#include "tropm0n/psi.hpp"
#include "tropm0n/qspace.hpp"
#include "tropm0n/split.hpp"
#include "tropm0n/trees.hpp"
#include "tropm0n/types.hpp"

namespace tropm0n {

namespace {

constexpr std::size_t kMaxStoredFailures = 16;

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++report_.checks;
    if (!ok) {
      ++report_.failure_count;
      if (report_.failures.size() < kMaxStoredFailures) {
        report_.failures.push_back(describe());
      }
    }
  }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

std::string join_ints(std::span<const int> v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out << ",";
    }
    out << v[i];
  }
  return out.str();
}

std::string format_spec(int n, std::span<const int> k) {
  return "n=" + std::to_string(n) + " k=(" + join_ints(k) + ")";
}

std::string format_cone(const ConeType& cone) {
  if (cone.dim() == 0) {
    return "origin";
  }
  std::ostringstream out;
  for (const Split& s : cone.splits()) {
    const std::vector<int> labels = s.labels();
    out << "{" << join_ints(labels) << "}";
  }
  return out.str();
}

std::vector<int> tuple_from_index(std::size_t index, int length, int base) {
  std::vector<int> t(length);
  for (int i = 0; i < length; ++i) {
    t[i] = static_cast<int>(index % base);
    index /= base;
  }
  return t;
}

std::size_t integer_power(int base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= static_cast<std::size_t>(base);
  }
  return out;
}

// All exponent vectors of length n with total at most max_total, ascending
// by total so each one's parent (largest nonzero entry decremented) comes
// first.
std::vector<std::vector<int>> exponent_vectors(int n, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(n, 0);
  const auto recurse = [&](auto&& self, int position, int remaining) -> void {
    if (position == n) {
      out.push_back(current);
      return;
    }
    for (int value = 0; value <= remaining; ++value) {
      current[position] = value;
      self(self, position + 1, remaining - value);
    }
    current[position] = 0;
  };
  recurse(recurse, 0, max_total);
  std::stable_sort(out.begin(), out.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     return std::accumulate(a.begin(), a.end(), 0) <
                            std::accumulate(b.begin(), b.end(), 0);
                   });
  return out;
}

int highest_cut_label(const std::vector<int>& spec) {
  for (int i = static_cast<int>(spec.size()) - 1; i >= 0; --i) {
    if (spec[i] > 0) {
      return i + 1;
    }
  }
  throw std::logic_error("empty exponent vector has no cut");
}

std::vector<int> random_spec(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> total_dist(1, n - 3);
  std::uniform_int_distribution<int> leaf(0, n - 1);
  std::vector<int> spec(n, 0);
  const int total = total_dist(rng);
  for (int t = 0; t < total; ++t) {
    ++spec[leaf(rng)];
  }
  return spec;
}

}  // namespace

VerifyReport verify_lemmas(int max_n, int samples_per_n, std::uint64_t seed) {
  if (max_n < 4) {
    throw std::invalid_argument("lemma suite needs max_n >= 4");
  }
  if (samples_per_n < 0) {
    throw std::invalid_argument("sample count must be nonnegative");
  }
  Recorder rec("lemmas");
  for (int n = 4; n <= max_n; ++n) {
    const PairIndex idx(n);
    const RationalVector zero = RationalVector::Zero(idx.count());

    // The split vectors of 2-subsets avoiding k sum to a pair sum, hence
    // vanish in the quotient.
    for (int k = 1; k <= n; ++k) {
      IntegerVector sum = IntegerVector::Zero(idx.count());
      for (int p = 0; p < idx.count(); ++p) {
        const auto& [i, j] = idx.pair(p);
        if (i != k && j != k) {
          sum += split_vector(Split(n, std::vector<int>{i, j}));
        }
      }
      IntegerVector a = IntegerVector::Constant(n, n - 3);
      a[k - 1] = 1;
      rec.check(sum == pair_sums<Integer>(n, a), [&] {
        return "spanning-set sum is not the expected pair sum, n=" +
               std::to_string(n) + " k=" + std::to_string(k);
      });
      rec.check(quotient_equal(n, to_rational(sum), zero), [&] {
        return "spanning-set sum does not vanish in the quotient, n=" +
               std::to_string(n) + " k=" + std::to_string(k);
      });
    }

    // Every unit vector is reached from split vectors modulo pair sums,
    // through 2-subsets avoiding any chosen leaf k.
    for (int k = 1; k <= n; ++k) {
      for (int p = 0; p < idx.count(); ++p) {
        const auto& [i, j] = idx.pair(p);
        IntegerVector twice_unit = IntegerVector::Zero(idx.count());
        twice_unit[p] = 2;
        bool ok = false;
        if (i != k && j != k) {
          IntegerVector a = IntegerVector::Zero(n);
          a[i - 1] = 1;
          a[j - 1] = 1;
          ok = (pair_sums<Integer>(n, a) -
                split_vector(Split(n, std::vector<int>{i, j}))) == twice_unit;
        } else {
          const int s1 = i == k ? j : i;
          IntegerVector sum = IntegerVector::Zero(idx.count());
          for (int t = 1; t <= n; ++t) {
            if (t != s1 && t != k) {
              sum += split_vector(Split(n, std::vector<int>{s1, t}));
            }
          }
          IntegerVector a = IntegerVector::Constant(n, 1);
          a[s1 - 1] = n - 4;
          a[k - 1] = 0;
          ok = (sum - pair_sums<Integer>(n, a)) == twice_unit;
        }
        rec.check(ok, [&] {
          return "unit vector recovery failed, n=" + std::to_string(n) +
                 " k=" + std::to_string(k) + " pair {" + std::to_string(i) +
                 "," + std::to_string(j) + "}";
        });
      }
    }

    // Positive representations of random integer vectors: nonnegative with
    // a zero coefficient, recombine to the input, and are reproducible.
    const std::size_t samples = static_cast<std::size_t>(samples_per_n);
    std::vector<std::uint8_t> flaws(samples, 0);
    std::vector<int> chosen_leaf(samples, 0);
    parallel_for(samples, [&](std::size_t s) {
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n) * 1000003 +
                          static_cast<std::uint64_t>(s) * 7919);
      std::uniform_int_distribution<int> entry(-9, 9);
      std::uniform_int_distribution<int> leaf(1, n);
      RationalVector v(idx.count());
      for (int c = 0; c < idx.count(); ++c) {
        v[c] = entry(rng);
      }
      const int k = leaf(rng);
      chosen_leaf[s] = k;
      const PositiveRepresentation rep = positive_representation(n, k, v);
      std::uint8_t flaw = 0;
      bool zero_hit = false;
      RationalVector combo = RationalVector::Zero(idx.count());
      for (std::size_t c = 0; c < rep.coeffs.size(); ++c) {
        if (rep.coeffs[c] < 0) {
          flaw |= 1;
        }
        zero_hit = zero_hit || rep.coeffs[c] == 0;
        const auto& [i, j] = rep.pairs[c];
        combo += rep.coeffs[c] *
                 to_rational(split_vector(Split(n, std::vector<int>{i, j})));
      }
      if (!zero_hit) {
        flaw |= 2;
      }
      if (!quotient_equal(n, combo, v)) {
        flaw |= 4;
      }
      if (positive_representation(n, k, v).coeffs != rep.coeffs) {
        flaw |= 8;
      }
      flaws[s] = flaw;
    });
    for (std::size_t s = 0; s < samples; ++s) {
      rec.check(flaws[s] == 0, [&] {
        std::string what;
        if (flaws[s] & 1) {
          what += " negative-coefficient";
        }
        if (flaws[s] & 2) {
          what += " no-zero-coefficient";
        }
        if (flaws[s] & 4) {
          what += " recombination";
        }
        if (flaws[s] & 8) {
          what += " nondeterministic";
        }
        return "positive representation flawed (" + what + " ), n=" +
               std::to_string(n) + " k=" + std::to_string(chosen_leaf[s]) +
               " sample " + std::to_string(s);
      });
    }
  }
  return rec.take();
}

VerifyReport verify_balancing(int max_n) {
  if (max_n < 4) {
    throw std::invalid_argument("balancing suite needs max_n >= 4");
  }
  Recorder rec("balancing");
  for (int n = 4; n <= max_n; ++n) {
    const Cycle fund = fundamental(n);
    const BalancingReport r = check_balancing(fund);
    rec.check(r.balanced, [&] {
      return "fundamental cycle unbalanced, n=" + std::to_string(n) +
             " ridge " + format_cone(r.violations.front());
    });
    for (int k = 1; k <= n; ++k) {
      const Cycle psi = psi_class(n, k);
      if (psi.dim() < 1) {
        continue;
      }
      const BalancingReport pr = check_balancing(psi);
      rec.check(pr.balanced, [&] {
        return "psi class unbalanced, n=" + std::to_string(n) +
               " k=" + std::to_string(k) + " ridge " +
               format_cone(pr.violations.front());
      });
    }
  }

  // Every product cycle, built one divisor at a time over the exponent
  // vectors in ascending-total order; each vector's product is the parent's
  // with the highest remaining label cut.
  for (int n = 4; n <= std::min(max_n, 6); ++n) {
    std::map<std::vector<int>, Cycle> products;
    for (const std::vector<int>& spec : exponent_vectors(n, n - 3)) {
      if (std::accumulate(spec.begin(), spec.end(), 0) == 0) {
        products.emplace(spec, fundamental(n));
        continue;
      }
      const int label = highest_cut_label(spec);
      std::vector<int> parent = spec;
      --parent[label - 1];
      Cycle next = psi_divisor(products.at(parent), label);
      if (next.dim() >= 1) {
        const BalancingReport r = check_balancing(next);
        rec.check(r.balanced, [&] {
          return "product cycle unbalanced, " + format_spec(n, spec) +
                 " ridge " + format_cone(r.violations.front());
        });
      }
      products.emplace(spec, std::move(next));
    }
  }
  return rec.take();
}

VerifyReport verify_unimodular(int max_n) {
  if (max_n < 4) {
    throw std::invalid_argument("unimodularity suite needs max_n >= 4");
  }
  Recorder rec("unimodular");
  for (int n = 4; n <= max_n; ++n) {
    const std::vector<ConeType> cones = enumerate_cones(n, n - 3);
    std::vector<char> ok(cones.size(), 0);
    parallel_for(cones.size(),
                 [&](std::size_t i) { ok[i] = unimodular_cone(cones[i]); });
    for (std::size_t i = 0; i < cones.size(); ++i) {
      rec.check(ok[i] != 0, [&] {
        return "maximal cone fails the lattice basis test, n=" +
               std::to_string(n) + " cone " + format_cone(cones[i]);
      });
    }
  }
  return rec.take();
}

VerifyReport verify_theorem(int max_n, int random_specs, std::uint64_t seed) {
  if (max_n < 4) {
    throw std::invalid_argument("theorem suite needs max_n >= 4");
  }
  if (random_specs < 0) {
    throw std::invalid_argument("random spec count must be nonnegative");
  }
  Recorder rec("theorem");
  for (int n = 4; n <= std::min(max_n, 6); ++n) {
    std::map<std::vector<int>, Cycle> products;
    for (const std::vector<int>& spec : exponent_vectors(n, n - 3)) {
      if (std::accumulate(spec.begin(), spec.end(), 0) == 0) {
        products.emplace(spec, fundamental(n));
      } else {
        const int label = highest_cut_label(spec);
        std::vector<int> parent = spec;
        --parent[label - 1];
        products.emplace(spec, psi_divisor(products.at(parent), label));
      }
      const Cycle& iterated = products.at(spec);
      const Cycle closed = psi_product_closed_form(PsiSpec(n, spec));
      const std::vector<WeightDiff> diffs = diff_cycles(iterated, closed);
      rec.check(diffs.empty(), [&] {
        return "closed form disagrees with iterated divisors, " +
               format_spec(n, spec) + " first diff at cone " +
               format_cone(diffs.front().cone);
      });
    }
  }
  for (int n = 7; n <= max_n; ++n) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n) * 104729);
    for (int r = 0; r < random_specs; ++r) {
      const std::vector<int> spec = random_spec(n, rng);
      const ProductComparison cmp = compare_products(PsiSpec(n, spec));
      rec.check(cmp.equal(), [&] {
        return "closed form disagrees with iterated divisors, " +
               format_spec(n, spec) + " first diff at cone " +
               format_cone(cmp.diffs.front().cone);
      });
    }
  }
  return rec.take();
}

VerifyReport verify_identities(int max_m) {
  if (max_m < 1) {
    throw std::invalid_argument("identity suite needs max_m >= 1");
  }
  Recorder rec("identities");

  // Falling-sum identity over every tuple, for a window of integer K
  // including values below the tuple total.
  constexpr int kLowK = -2;
  constexpr int kHighK = 25;
  constexpr int kWindow = kHighK - kLowK + 1;
  for (int m = 1; m <= max_m; ++m) {
    const std::size_t tuples = integer_power(5, m);
    std::vector<char> ok(tuples * kWindow, 1);
    parallel_for(tuples, [&](std::size_t t) {
      const std::vector<int> k = tuple_from_index(t, m, 5);
      for (int K = kLowK; K <= kHighK; ++K) {
        ok[t * kWindow + static_cast<std::size_t>(K - kLowK)] =
            check_falling_sum_identity(k, K);
      }
    });
    for (std::size_t t = 0; t < tuples; ++t) {
      for (int K = kLowK; K <= kHighK; ++K) {
        rec.check(ok[t * kWindow + static_cast<std::size_t>(K - kLowK)] != 0,
                  [&] {
                    const std::vector<int> k = tuple_from_index(t, m, 5);
                    return "falling-sum identity fails, k=(" + join_ints(k) +
                           ") K=" + std::to_string(K);
                  });
      }
    }
  }

  // Extension identity at the derived K and two shifted values.
  constexpr int kShifts[] = {0, 1, 3};
  for (int length = 1; length <= max_m; ++length) {
    const std::size_t tuples = integer_power(5, length);
    std::vector<char> ok(tuples * 3, 1);
    parallel_for(tuples, [&](std::size_t t) {
      const std::vector<int> k = tuple_from_index(t, length, 5);
      const long base = std::accumulate(k.begin(), k.end(), 0L);
      for (int s = 0; s < 3; ++s) {
        ok[t * 3 + static_cast<std::size_t>(s)] =
            check_falling_sum_extension(k, base + kShifts[s]);
      }
    });
    for (std::size_t t = 0; t < tuples; ++t) {
      for (int s = 0; s < 3; ++s) {
        rec.check(ok[t * 3 + static_cast<std::size_t>(s)] != 0, [&] {
          const std::vector<int> k = tuple_from_index(t, length, 5);
          const long base = std::accumulate(k.begin(), k.end(), 0L);
          return "extension identity fails, k=(" + join_ints(k) +
                 ") K=" + std::to_string(base + kShifts[s]);
        });
      }
    }
  }

  // Ridge distribution identity over small vertex configurations and a few
  // values of slack between K and the exponents present.
  for (int m = 0; m <= std::max(max_m - 2, 0); ++m) {
    const std::size_t tuples = integer_power(4, m);
    for (std::size_t t = 0; t < tuples; ++t) {
      const std::vector<int> kM = tuple_from_index(t, m, 4);
      const long in_vertex = std::accumulate(kM.begin(), kM.end(), 0L);
      for (int k1 = 0; k1 <= 3; ++k1) {
        for (int slack = 0; slack <= 6; ++slack) {
          const long K = k1 + in_vertex + slack;
          if (K + 1 < m) {
            continue;
          }
          rec.check(check_ridge_distribution_identity(k1, kM, K), [&] {
            return "ridge distribution identity fails, k1=" +
                   std::to_string(k1) + " kM=(" + join_ints(kM) +
                   ") K=" + std::to_string(K);
          });
        }
      }
    }
  }

  // Falling power of a sum, randomized bases and powers.
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> length_dist(1, 4);
  std::uniform_int_distribution<long> base_dist(-6, 6);
  std::uniform_int_distribution<int> power_dist(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> xs(length_dist(rng));
    for (long& x : xs) {
      x = base_dist(rng);
    }
    const int p = power_dist(rng);
    rec.check(check_falling_multinomial(xs, p), [&] {
      std::ostringstream out;
      out << "falling power of a sum fails, xs=(";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out << (i ? "," : "") << xs[i];
      }
      out << ") p=" << p;
      return out.str();
    });
  }

  // Subset factorial identity over every valid tuple.
  for (int m = 1; m <= max_m; ++m) {
    std::vector<int> a(m, 0);
    const auto recurse = [&](auto&& self, int position, int remaining) -> void {
      if (position == m) {
        rec.check(check_subset_factorial_identity(a), [&] {
          return "subset factorial identity fails, a=(" + join_ints(a) + ")";
        });
        return;
      }
      for (int value = 0; value <= remaining; ++value) {
        a[position] = value;
        self(self, position + 1, remaining - value);
      }
      a[position] = 0;
    };
    recurse(recurse, 0, m - 1);
  }
  return rec.take();
}

}  // namespace tropm0n
