#include "tropm0n/cycle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "tropm0n/trees.hpp"

using namespace tropm0n;

namespace {

// Valence of the vertex at leaf k, read off the splits directly instead of
// going through cone_to_tree: the leaf edge, one bounded edge per maximal
// side away from k, and one leaf edge per other label separated from k by
// no split.
int leaf_valence(const ConeType& cone, int k) {
  std::vector<std::uint64_t> away;
  for (const Split& s : cone.splits()) {
    away.push_back(s.side_avoiding(k));
  }
  int valence = 1;
  for (std::size_t i = 0; i < away.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < away.size(); ++j) {
      if (j != i && (away[i] & away[j]) == away[i]) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      ++valence;
    }
  }
  std::uint64_t separated = 0;
  for (std::uint64_t a : away) {
    separated |= a;
  }
  for (int l = 1; l <= cone.n(); ++l) {
    if (l != k && ((separated >> (l - 1)) & 1) == 0) {
      ++valence;
    }
  }
  return valence;
}

Cycle with_weight(const Cycle& cycle, const ConeType& cone, Integer w) {
  std::map<ConeType, Integer> weights = cycle.weights();
  if (w == 0) {
    weights.erase(cone);
  } else {
    weights[cone] = std::move(w);
  }
  return Cycle(cycle.n(), cycle.dim(), std::move(weights));
}

}  // namespace

TEST_CASE("cycle validation") {
  CHECK_THROWS_AS(Cycle(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Cycle(5, -1), std::invalid_argument);
  CHECK_THROWS_AS(Cycle(5, 3), std::invalid_argument);
  CHECK_NOTHROW(Cycle(5, 2));

  const ConeType ray(5, {Split(5, {2, 3})});
  CHECK_THROWS_AS(Cycle(5, 2, {{ray, 1}}), std::invalid_argument);  // dim off
  CHECK_THROWS_AS(Cycle(5, 1, {{ray, 0}}), std::invalid_argument);  // zero
  CHECK_THROWS_AS(Cycle(6, 1, {{ray, 1}}), std::invalid_argument);  // n off

  const Cycle z(5, 1, {{ray, 3}});
  CHECK(z.weight(ray) == 3);
  CHECK(z.weight(ConeType(5, {Split(5, {2, 4})})) == 0);
  CHECK(z.cone_count() == 1);
  CHECK_FALSE(z.empty());
  CHECK(Cycle(5, 1).empty());
}

TEST_CASE("fundamental cycles") {
  const Cycle m3 = fundamental(3);
  CHECK(m3.dim() == 0);
  CHECK(m3.cone_count() == 1);
  CHECK(m3.weight(ConeType::origin(3)) == 1);

  const Cycle m4 = fundamental(4);
  CHECK(m4.dim() == 1);
  CHECK(m4.cone_count() == 3);

  const Cycle m5 = fundamental(5);
  CHECK(m5.cone_count() == 15);
  CHECK(fundamental(6).cone_count() == 105);
  for (const auto& [cone, weight] : m5.weights()) {
    CHECK(cone.dim() == 2);
    CHECK(weight == 1);
  }
}

TEST_CASE("psi classes on five leaves are the six pair rays") {
  const Cycle psi1 = psi_class(5, 1);
  CHECK(psi1.dim() == 1);
  std::set<ConeType> expected;
  for (int i = 2; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      expected.insert(ConeType(5, {Split(5, {i, j})}));
    }
  }
  CHECK(expected.size() == 6);
  std::set<ConeType> actual;
  for (const auto& [cone, weight] : psi1.weights()) {
    CHECK(weight == 1);
    actual.insert(cone);
  }
  CHECK(actual == expected);
}

TEST_CASE("psi class degenerate and error cases") {
  const Cycle psi41 = psi_class(4, 1);
  CHECK(psi41.dim() == 0);
  CHECK(psi41.cone_count() == 1);
  CHECK(psi41.weight(ConeType::origin(4)) == 1);

  CHECK_THROWS_AS(psi_class(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(psi_class(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(psi_class(5, 6), std::invalid_argument);
}

TEST_CASE("psi classes match an independent valence filter") {
  for (int n = 4; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      const Cycle psi = psi_class(n, k);
      std::set<ConeType> filtered;
      for (const ConeType& cone : enumerate_cones(n, n - 4)) {
        if (leaf_valence(cone, k) == 4) {
          filtered.insert(cone);
        }
      }
      CHECK(psi.cone_count() == filtered.size());
      for (const auto& [cone, weight] : psi.weights()) {
        CHECK(filtered.count(cone) == 1);
      }
    }
  }
}

TEST_CASE("ridge stars of small cycles") {
  const auto stars4 = ridge_stars(fundamental(4));
  REQUIRE(stars4.size() == 1);
  CHECK(stars4[0].ridge == ConeType::origin(4));
  CHECK(stars4[0].neighbors.size() == 3);
  for (const RidgeNeighbor& nb : stars4[0].neighbors) {
    CHECK(nb.weight == 1);
    CHECK(nb.facet == stars4[0].ridge.with_split(nb.added_split));
  }

  const auto stars_psi = ridge_stars(psi_class(5, 1));
  REQUIRE(stars_psi.size() == 1);
  CHECK(stars_psi[0].ridge == ConeType::origin(5));
  CHECK(stars_psi[0].neighbors.size() == 6);

  const auto stars5 = ridge_stars(fundamental(5));
  CHECK(stars5.size() == 10);
  for (const RidgeStar& star : stars5) {
    CHECK(star.ridge.dim() == 1);
    CHECK(star.neighbors.size() == 3);
    for (const RidgeNeighbor& nb : star.neighbors) {
      CHECK(nb.facet == star.ridge.with_split(nb.added_split));
      CHECK_FALSE(star.ridge.contains(nb.added_split));
    }
  }

  CHECK(std::is_sorted(stars5.begin(), stars5.end(),
                       [](const RidgeStar& a, const RidgeStar& b) {
                         return a.ridge < b.ridge;
                       }));
  CHECK_THROWS_AS(ridge_stars(fundamental(3)), std::invalid_argument);
}

TEST_CASE("ridge stars partition the face incidences") {
  for (const Cycle& cycle :
       {fundamental(5), fundamental(6), psi_class(6, 1), psi_class(6, 4)}) {
    std::size_t incidences = 0;
    for (const RidgeStar& star : ridge_stars(cycle)) {
      incidences += star.neighbors.size();
    }
    CHECK(incidences == cycle.cone_count() * cycle.dim());
  }
}

TEST_CASE("fundamental cycles and psi classes are balanced") {
  for (int n = 4; n <= 6; ++n) {
    const BalancingReport report = check_balancing(fundamental(n));
    CHECK(report.balanced);
    CHECK(report.violations.empty());
  }
  for (int k = 1; k <= 5; ++k) {
    CHECK(check_balancing(psi_class(5, k)).balanced);
  }
  CHECK(check_balancing(psi_class(6, 1)).balanced);
  CHECK(check_balancing(psi_class(6, 6)).balanced);
}

TEST_CASE("scaling preserves balance, lone reweighting breaks it") {
  const Cycle psi1 = psi_class(5, 1);
  std::map<ConeType, Integer> doubled;
  for (const auto& [cone, weight] : psi1.weights()) {
    doubled.emplace(cone, 2 * weight);
  }
  CHECK(check_balancing(Cycle(5, 1, std::move(doubled))).balanced);

  const Cycle m4 = fundamental(4);
  const ConeType first = m4.weights().begin()->first;
  const BalancingReport broken = check_balancing(with_weight(m4, first, 2));
  CHECK_FALSE(broken.balanced);
  REQUIRE(broken.violations.size() == 1);
  CHECK(broken.violations[0] == ConeType::origin(4));

  // Dropping one ray of the psi class leaves a sum outside the trivial span.
  const Cycle pruned = with_weight(psi1, psi1.weights().begin()->first, 0);
  CHECK_FALSE(check_balancing(pruned).balanced);
}

TEST_CASE("balancing accepts weight changes along pair sums relations") {
  // On four leaves the three rays satisfy v_a + v_b + v_c = pair sums of
  // the all-ones vector, so equal weights are forced; any equal weight
  // works, including negative ones.
  std::map<ConeType, Integer> weights;
  for (const ConeType& cone : enumerate_cones(4, 1)) {
    weights.emplace(cone, -7);
  }
  CHECK(check_balancing(Cycle(4, 1, std::move(weights))).balanced);
}
