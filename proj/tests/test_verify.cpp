#include "tropm0n/verify.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace tropm0n;

// Expected check counts double as enumeration oracles: per n the lemma suite
// runs 2n vanishing-sum checks, n * C(n,2) unit recoveries, and one check
// per random sample; the cycle suites run one check per cycle or cone.

TEST_CASE("lemma suite counts and passes") {
  const VerifyReport r = verify_lemmas(4, 10, 3);
  CHECK(r.suite == "lemmas");
  CHECK(r.checks == 8 + 24 + 10);
  CHECK(r.failure_count == 0);
  CHECK(r.failures.empty());
  CHECK(r.passed());

  const VerifyReport five = verify_lemmas(5, 50, 3);
  CHECK(five.checks == (8 + 24 + 50) + (10 + 50 + 50));
  CHECK(five.passed());

  // same seed, same outcome
  const VerifyReport again = verify_lemmas(4, 10, 3);
  CHECK(again.checks == r.checks);
  CHECK(again.failure_count == r.failure_count);
}

TEST_CASE("balancing suite covers classes and every product") {
  const VerifyReport r = verify_balancing(5);
  CHECK(r.suite == "balancing");
  // n=4: fundamental only (psi classes are points); n=5: fundamental, five
  // psi classes, five one-cut products of positive dimension
  CHECK(r.checks == 1 + 6 + 5);
  CHECK(r.passed());
}

TEST_CASE("unimodularity suite covers every maximal cone") {
  const VerifyReport r = verify_unimodular(5);
  CHECK(r.suite == "unimodular");
  CHECK(r.checks == 3 + 15);
  CHECK(r.passed());
}

TEST_CASE("theorem suite is exhaustive over exponent vectors") {
  const VerifyReport four = verify_theorem(4, 0, 1);
  CHECK(four.suite == "theorem");
  CHECK(four.checks == 5);  // the empty vector and four single cuts
  CHECK(four.passed());

  const VerifyReport five = verify_theorem(5, 0, 1);
  CHECK(five.checks == 5 + 21);
  CHECK(five.passed());
}

TEST_CASE("identity suite counts its sweeps") {
  const VerifyReport r = verify_identities(2);
  CHECK(r.suite == "identities");
  // falling-sum: (5 + 25) tuples over 28 values of K; extension: (5 + 25)
  // tuples at 3 values; ridge distribution: 4 values of k1 over 7 slacks;
  // 200 random falling-multinomial trials; subset factorial: 1 + 3 tuples
  CHECK(r.checks == 30 * 28 + 30 * 3 + 28 + 200 + 4);
  CHECK(r.passed());
}

TEST_CASE("suites reject unusable bounds") {
  CHECK_THROWS_AS(verify_lemmas(3, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_lemmas(4, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_balancing(3), std::invalid_argument);
  CHECK_THROWS_AS(verify_unimodular(3), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem(4, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_identities(0), std::invalid_argument);
}
