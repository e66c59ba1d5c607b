#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>
#include <set>

#include "gmds/er_generator.hpp"
#include "gmds/errors.hpp"

using namespace gmds;

TEST_SUITE("er-generator") {
  TEST_CASE("seven-atom weight law") {
    const auto dist = paper_weight_distribution(1.0);
    double total = 0.0;
    std::set<double> support;
    for (const auto& a : dist.atoms()) {
      total += a.probability;
      support.insert(a.value);
    }
    CHECK(std::abs(total - 1.0) <= 1e-15);
    CHECK(support == std::set<double>{0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0});

    const auto scaled = paper_weight_distribution(2.0);
    std::set<double> scaled_support;
    for (const auto& a : scaled.atoms()) scaled_support.insert(a.value);
    CHECK(scaled_support == std::set<double>{0.8, 1.0, 1.2, 1.4, 1.6, 1.8, 2.0});
  }

  TEST_CASE("mean degree zero gives an edgeless graph") {
    const auto g = generate_er(1000, 0.0, paper_weight_distribution(1.0), 1);
    CHECK(g.n_vertices() == 1000);
    CHECK(g.n_edges() == 0);
  }

  TEST_CASE("edge count and determinism") {
    const auto dist = paper_weight_distribution(1.0);
    const auto g = generate_er(1000, 10.0, dist, 42);
    CHECK(g.n_edges() == 5000);
    const auto h = generate_er(1000, 10.0, dist, 42);
    const auto k = generate_er(1000, 10.0, dist, 43);
    bool same = true, differ = false;
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
      const auto &a = g.edges()[e], &b = h.edges()[e], &c = k.edges()[e];
      same = same && a.u == b.u && a.v == b.v && a.w_uv == b.w_uv && a.w_vu == b.w_vu;
      differ = differ || a.u != c.u || a.v != c.v || a.w_uv != c.w_uv;
    }
    CHECK(same);
    CHECK(differ);
    CHECK(generate_er(101, 3.0, dist, 1).n_edges() == std::llround(3.0 * 101 / 2));
  }

  TEST_CASE("symmetric weights are symmetric; directed weights are one-way") {
    const auto g = generate_er(500, 6.0, paper_weight_distribution(1.0), 3);
    for (const auto& e : g.edges()) CHECK(e.w_uv == e.w_vu);
    const auto d = generate_er(500, 6.0, directed_mds_distribution(1.0), 3);
    std::size_t forward = 0;
    for (const auto& e : d.edges()) {
      const bool fwd = e.w_uv == 1.0 && e.w_vu == 0.0;
      const bool bwd = e.w_uv == 0.0 && e.w_vu == 1.0;
      CHECK((fwd || bwd));
      forward += fwd;
    }
    // 1500 fair coins: well within 5 sigma of half.
    CHECK(std::abs(static_cast<double>(forward) - 750.0) < 5 * std::sqrt(375.0));
  }

  TEST_CASE("weight histogram matches the law") {
    const auto dist = paper_weight_distribution(1.0);
    const auto g = generate_er(100000, 10.0, dist, 2024);
    std::map<double, std::size_t> counts;
    for (const auto& e : g.edges()) ++counts[e.w_uv];
    const double m = static_cast<double>(g.n_edges());
    for (const auto& a : dist.atoms()) {
      const double expected = m * a.probability;
      const double sigma = std::sqrt(m * a.probability * (1 - a.probability));
      CHECK(std::abs(counts[a.value] - expected) <= 3 * sigma);
    }
  }

  TEST_CASE("degree distribution is Poisson at the 1% level") {
    const std::size_t n = 100000;
    const double c = 10.0;
    const auto g = generate_er(n, c, paper_weight_distribution(1.0), 99);
    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : g.edges()) {
      ++deg[e.u];
      ++deg[e.v];
    }
    // Bins 0..3 and 19+ merged so every expected count is large.
    const int lo = 3, hi = 19;
    std::vector<double> observed(hi - lo + 1, 0.0), expected(hi - lo + 1, 0.0);
    for (auto d : deg) {
      const int k = std::clamp(static_cast<int>(d), lo, hi);
      observed[k - lo] += 1;
    }
    double p = std::exp(-c), cdf = 0.0;
    for (int k = 0; k < hi; ++k) {
      if (k > 0) p *= c / k;
      expected[std::max(k, lo) - lo] += n * p;
      cdf += p;
    }
    expected[hi - lo] += n * (1.0 - cdf);
    double chi2 = 0.0;
    for (std::size_t b = 0; b < observed.size(); ++b) {
      chi2 += (observed[b] - expected[b]) * (observed[b] - expected[b]) / expected[b];
    }
    const boost::math::chi_squared law(static_cast<double>(observed.size() - 1));
    CHECK(chi2 < boost::math::quantile(law, 0.99));
  }

  TEST_CASE("invalid arguments") {
    const auto dist = paper_weight_distribution(1.0);
    CHECK_THROWS_AS(generate_er(1, 0.0, dist, 1), InputError);
    CHECK_THROWS_AS(generate_er(10, 10.0, dist, 1), InputError);
    CHECK_THROWS_AS(generate_er(10, -1.0, dist, 1), InputError);
    CHECK_THROWS_AS(WeightDistribution::symmetric({{0.5, 0.5}, {1.0, 0.4}}), InputError);
    CHECK_THROWS_AS(named_weight_distribution("nope", 1.0), InputError);
    CHECK(generate_er(10, 9.0, dist, 1).n_edges() == 45);
  }
}
