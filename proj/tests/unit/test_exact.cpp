#include <doctest.h>

#include <cmath>
#include <numeric>

#include "gmds/er_generator.hpp"
#include "gmds/errors.hpp"
#include "gmds/exact.hpp"
#include "support/oracles.hpp"

using namespace gmds;

TEST_SUITE("exact-oracle") {
  TEST_CASE("tiny instances") {
    CHECK(exact_mds(WeightedGraph(3, 1.0)).size() == 3);
    WeightedGraph pair(2, 1.0);
    pair.add_edge(0, 1, 1.0, 1.0);
    CHECK(exact_mds(pair).size() == 1);
    WeightedGraph weak(2, 1.0);
    weak.add_edge(0, 1, 0.5, 0.5);
    CHECK(exact_mds(weak).size() == 2);
  }

  TEST_CASE("exact thermodynamics on two full-weight vertices") {
    WeightedGraph pair(2, 1.0);
    pair.add_edge(0, 1, 1.0, 1.0);
    const double beta = 1.3, b = std::exp(-beta);
    const auto ex = exact_thermo(pair, beta);
    // Satisfying configurations: 10, 01, 11.
    CHECK(ex.n_satisfying == 3);
    CHECK(ex.ln_z == doctest::Approx(std::log(2 * b + b * b)));
    CHECK(ex.q1[0] == doctest::Approx((b + b * b) / (2 * b + b * b)));
    CHECK(ex.s >= 0.0);
    CHECK(std::isnan(exact_thermo(pair, 0.0).f));
    CHECK(exact_thermo(pair, 0.0).s == doctest::Approx(std::log(3.0) / 2));
  }

  TEST_CASE("enumeration and branch and bound agree") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto dist = seed % 2 ? paper_weight_distribution(1.0) : directed_mds_distribution(1.0);
      const auto g = generate_er(14, 3.0 + (seed % 4), dist, seed);
      const auto a = exact_mds_enumerate(g);
      const auto b = exact_mds_branch_and_bound(g);
      CHECK(a.size() == b.size());
      CHECK(is_satisfying(g, a.configuration()));
      CHECK(is_satisfying(g, b.configuration()));
    }
  }

  TEST_CASE("no smaller satisfying set exists") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto g = generate_er(10, 3.0, paper_weight_distribution(1.0), seed + 300);
      const auto best = exact_mds(g).size();
      for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) >= best) continue;
        auto config = Configuration::empty(10);
        for (int b = 0; b < 10; ++b) config.states[b] = mask >> b & 1u;
        CHECK_FALSE(is_satisfying(g, config));
      }
    }
  }

  TEST_CASE("size is invariant under relabelling") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto g = generate_er(18, 4.0, paper_weight_distribution(1.0), seed);
      std::vector<VertexId> perm(18);
      std::iota(perm.begin(), perm.end(), 0u);
      Rng rng(seed);
      rng.shuffle(perm);
      CHECK(exact_mds(g).size() == exact_mds(gmds::testing::relabel(g, perm)).size());
    }
  }

  TEST_CASE("random graphs with N=12, M=21") {
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      total += exact_mds(generate_er(12, 3.5, paper_weight_distribution(1.0), seed)).size();
    }
    const double mean = total / 20;
    CHECK(mean > 4.0);
    CHECK(mean < 8.0);
  }

  TEST_CASE("refuses large instances") {
    CHECK_THROWS_AS(exact_mds(WeightedGraph(25, 1.0)), RefusalError);
    CHECK_THROWS_AS(exact_thermo(WeightedGraph(21, 1.0), 1.0), RefusalError);
    const auto g = generate_er(22, 4.0, paper_weight_distribution(1.0), 1);
    CHECK(is_satisfying(g, exact_mds(g).configuration()));
  }
}
