#include <doctest.h>

#include <cmath>

#include "gmds/rng.hpp"
#include "gmds/threshold_sum.hpp"
#include "support/oracles.hpp"

using namespace gmds;
using gmds::testing::brute_threshold_sum;
using gmds::testing::UnitContributor;

TEST_SUITE("threshold-sum") {
  TEST_CASE("small cases") {
    CHECK(threshold_exceed_sum({}, 1.0, 0.1) == 0.0);
    CHECK(threshold_exceed_sum({}, 0.0, 0.1) == 1.0);
    const Contributor one[] = {{0.3, 0.7, 1.0}};
    CHECK(threshold_exceed_sum(one, 1.0, 0.1) == doctest::Approx(0.3).epsilon(1e-15));
    const Contributor three[] = {{0.5, 0.5, 0.5}, {0.5, 0.5, 0.5}, {0.5, 0.5, 0.5}};
    // Patterns reaching 1.0: any two or all three; 3/8 + 1/8 = 0.5 of total 1.
    CHECK(threshold_exceed_sum(three, 1.0, 0.1) == doctest::Approx(0.5).epsilon(1e-15));
    const Contributor mixed[] = {{0.5, 0.5, 0.4}, {0.5, 0.5, 0.6}, {0.5, 0.5, 0.5}};
    const std::vector<UnitContributor> mixed_units = {{0.5, 0.5, 4}, {0.5, 0.5, 6}, {0.5, 0.5, 5}};
    CHECK(threshold_exceed_sum(mixed, 1.0, 0.1) == brute_threshold_sum(mixed_units, 10));
    CHECK(brute_threshold_sum(mixed_units, 10) == 0.375);
  }

  TEST_CASE("non-positive residual threshold returns the full product") {
    const Contributor cs[] = {{0.2, 0.3, 0.5}, {0.1, 0.4, 1.0}};
    CHECK(threshold_exceed_sum(cs, 0.0, 0.1) == doctest::Approx(0.5 * 0.5));
    CHECK(threshold_exceed_sum(cs, -0.3, 0.1) == doctest::Approx(0.25));
    CHECK_THROWS(threshold_exceed_sum(cs, 1.0, 0.0));
  }

  TEST_CASE("quantization") {
    CHECK(quantize_weight(0.7, 0.1) == 7);
    CHECK(quantize_weight(0.3, 0.1) == 3);
    CHECK(quantize_weight(0.449, 0.1) == 4);
    CHECK(quantize_threshold(1.0, 0.1) == 10);
    CHECK(quantize_threshold(0.4000000001, 0.1) == 4);
    CHECK(quantize_threshold(0.41, 0.1) == 5);
    CHECK(quantize_threshold(1e-6, 0.1) == 1);
    CHECK(quantize_threshold(0.0, 0.1) == 0);
    CHECK(quantize_threshold(-1.0, 0.1) == 0);
  }

  TEST_CASE("agrees bitwise with subset enumeration on dyadic factors") {
    // Dyadic factors and small K keep every partial sum exact.
    const double factors[] = {0.0, 0.25, 0.5, 0.75, 1.0, 1.25};
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t k = rng.below(11);
      std::vector<Contributor> cs;
      std::vector<UnitContributor> us;
      for (std::size_t i = 0; i < k; ++i) {
        const int units = static_cast<int>(rng.below(11));
        const double occ = factors[rng.below(6)], emp = factors[rng.below(6)];
        cs.push_back({occ, emp, units * 0.1});
        us.push_back({occ, emp, units});
      }
      const int t = static_cast<int>(rng.below(21));
      const double expected = brute_threshold_sum(us, t);
      const double got = threshold_exceed_sum(cs, t * 0.1, 0.1);
      CHECK(got == expected);
    }
  }

  TEST_CASE("agrees with subset enumeration on random reals") {
    Rng rng(8);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t k = 1 + rng.below(12);
      std::vector<Contributor> cs;
      std::vector<UnitContributor> us;
      for (std::size_t i = 0; i < k; ++i) {
        const int units = static_cast<int>(rng.below(11));
        const double occ = rng.uniform(), emp = rng.uniform();
        cs.push_back({occ, emp, units * 0.1});
        us.push_back({occ, emp, units});
      }
      const int t = static_cast<int>(rng.below(25));
      CHECK(threshold_exceed_sum(cs, t * 0.1, 0.1) ==
            doctest::Approx(brute_threshold_sum(us, t)).epsilon(1e-12));
    }
  }

  TEST_CASE("capped table totals") {
    CappedSumDp dp;
    dp.reset(3);
    dp.add(0.5, 0.5, 2);
    dp.add(0.5, 0.5, 2);
    CHECK(dp.total() == doctest::Approx(1.0));
    CHECK(dp.at_least(0) == doctest::Approx(1.0));
    CHECK(dp.at_least(2) == doctest::Approx(0.75));
    CHECK(dp.at_least(3) == doctest::Approx(0.25));
    CHECK(dp.at_least(4) == doctest::Approx(0.25));
  }
}
