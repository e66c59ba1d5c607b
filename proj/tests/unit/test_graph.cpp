#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gmds/er_generator.hpp"
#include "gmds/errors.hpp"
#include "gmds/graph.hpp"
#include "gmds/graph_io.hpp"
#include "support/oracles.hpp"

using namespace gmds;

TEST_SUITE("weighted-graph") {
  TEST_CASE("is_satisfying basic cases") {
    WeightedGraph single(1, 1.0);
    CHECK_FALSE(is_satisfying(single, Configuration::empty(1)));

    WeightedGraph pair(2, 1.0);
    pair.add_edge(0, 1, 1.0, 1.0);
    CHECK(is_satisfying(pair, Configuration{{1, 0}}));
    CHECK_FALSE(is_satisfying(pair, Configuration{{0, 0}}));

    const auto g = generate_er(40, 3.0, paper_weight_distribution(1.0), 11);
    CHECK(is_satisfying(g, Configuration::all_occupied(40)));
    CHECK_THROWS_AS(is_satisfying(g, Configuration::empty(39)), InputError);
  }

  TEST_CASE("zero threshold is satisfied without neighbors") {
    WeightedGraph g(3, 0.0);
    CHECK(is_satisfying(g, Configuration::empty(3)));
  }

  TEST_CASE("sums that round below the threshold still count") {
    WeightedGraph g(3, 1.0);
    g.add_edge(0, 2, 0.7, 0.7);
    g.add_edge(1, 2, 0.3, 0.3);
    CHECK(is_satisfying(g, Configuration{{1, 1, 0}}));
  }

  TEST_CASE("construction rejects invalid edges") {
    WeightedGraph g(3, 1.0);
    CHECK_THROWS_AS(g.add_edge(0, 0, 1.0, 1.0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 3, 1.0, 1.0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 1, -0.1, 1.0), InputError);
    g.add_edge(0, 1, 0.5, 0.5);
    CHECK_THROWS_AS(g.add_edge(1, 0, 0.5, 0.5), InputError);
    CHECK(g.has_edge(1, 0));
    CHECK(g.neighbors(0).size() == 1);
    CHECK(g.neighbors(1)[0].vertex == 0);
    CHECK_THROWS_AS(WeightedGraph(2, -1.0), InputError);
  }

  TEST_CASE("occupy_and_reduce updates residual thresholds") {
    WeightedGraph partial(2, 1.0);
    partial.add_edge(0, 1, 0.6, 0.6);
    occupy_and_reduce(partial, 0);
    CHECK(partial.residual_theta(1) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK_FALSE(partial.satisfied(1));
    CHECK(partial.occupied(0));
    CHECK_THROWS_AS(occupy_and_reduce(partial, 0), std::logic_error);

    WeightedGraph full(2, 1.0);
    full.add_edge(0, 1, 1.0, 1.0);
    occupy_and_reduce(full, 0);
    CHECK(full.residual_theta(1) == 0.0);
    CHECK(full.satisfied(1));
  }

  TEST_CASE("star center occupation dominates all leaves") {
    WeightedGraph star(6, 1.0);
    for (VertexId leaf = 1; leaf < 6; ++leaf) star.add_edge(0, leaf, 1.0 + 0.1 * leaf, 0.2);
    WeightedGraph work = star;
    occupy_and_reduce(work, 0);
    for (VertexId leaf = 1; leaf < 6; ++leaf) CHECK(work.satisfied(leaf));
    const VertexId members[] = {0};
    CHECK(is_satisfying(star, Configuration::from_members(6, members)));
  }

  TEST_CASE("adding members never breaks a satisfying configuration") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto g = generate_er(30, 4.0, paper_weight_distribution(1.0), seed);
      Rng rng(seed + 100);
      auto config = Configuration::empty(30);
      // Grow until satisfying, then keep adding.
      std::vector<VertexId> order(30);
      std::iota(order.begin(), order.end(), 0u);
      rng.shuffle(order);
      bool was_satisfying = false;
      for (auto v : order) {
        config.states[v] = 1;
        const bool now = is_satisfying(g, config);
        CHECK((!was_satisfying || now));
        was_satisfying = now;
      }
      CHECK(was_satisfying);
    }
  }

  TEST_CASE("graph with an isolated unoccupied vertex is unsatisfied") {
    auto g = generate_er(20, 2.0, paper_weight_distribution(1.0), 3);
    WeightedGraph h(21, 1.0);
    for (const auto& e : g.edges()) h.add_edge(e.u, e.v, e.w_uv, e.w_vu);
    auto config = Configuration::all_occupied(21);
    config.states[20] = 0;
    CHECK_FALSE(is_satisfying(h, config));
  }

  TEST_CASE("occupation order does not change residual thresholds") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto g = generate_er(50, 5.0, paper_weight_distribution(1.0), seed);
      Rng rng(seed);
      std::vector<VertexId> set;
      for (VertexId v = 0; v < 50; ++v) {
        if (rng.uniform() < 0.3) set.push_back(v);
      }
      WeightedGraph a = g, b = g;
      for (auto v : set) occupy_and_reduce(a, v);
      rng.shuffle(set);
      for (auto v : set) occupy_and_reduce(b, v);
      for (VertexId v = 0; v < 50; ++v) {
        CHECK(a.residual_theta(v) == doctest::Approx(b.residual_theta(v)).epsilon(1e-12));
        CHECK(a.occupied(v) == b.occupied(v));
      }
    }
  }
}

TEST_SUITE("graph-io") {
  TEST_CASE("reads the documented format") {
    std::istringstream in("#N 2\n#theta 1.0\n0 1 0.5 0.5\n");
    const auto g = read_graph(in);
    CHECK(g.n_vertices() == 2);
    CHECK(g.n_edges() == 1);
    CHECK(g.theta() == 1.0);
    CHECK(g.edges()[0].w_uv == 0.5);
  }

  TEST_CASE("writes exact header bytes") {
    WeightedGraph g(3, 1.0);
    g.add_edge(0, 2, 0.4, 1.0);
    std::ostringstream out;
    write_graph(g, out);
    CHECK(out.str() == "#N 3\n#theta 1\n0\t2\t0.4\t1\n");
  }

  TEST_CASE("round trip preserves the edge multiset") {
    const auto g = generate_er(500, 6.0, directed_mds_distribution(1.0), 5);
    std::stringstream buf;
    write_graph(g, buf);
    const auto h = read_graph(buf);
    REQUIRE(h.n_vertices() == g.n_vertices());
    REQUIRE(h.n_edges() == g.n_edges());
    CHECK(h.theta() == g.theta());
    auto key = [](const Edge& e) { return std::tuple(e.u, e.v, e.w_uv, e.w_vu); };
    std::vector<std::tuple<VertexId, VertexId, double, double>> a, b;
    for (const auto& e : g.edges()) a.push_back(key(e));
    for (const auto& e : h.edges()) b.push_back(key(e));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }

  TEST_CASE("parse errors name the line") {
    auto line_of = [](const std::string& text) -> std::size_t {
      std::istringstream in(text);
      try {
        read_graph(in);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("#N 2\n#theta 1\n0 0 1 1\n") == 3);
    CHECK(line_of("#N 3\n0 1 1 1\n\n1 0 1 1\n") == 4);
    CHECK(line_of("#N 2\n0 1 -1 1\n") == 2);
    CHECK(line_of("#N 2\n0 1 1\n") == 2);
    CHECK(line_of("#N 2\n0 1 x 1\n") == 2);
    CHECK(line_of("0 1 1 1\n") == 1);
    CHECK(line_of("#theta 1\n") == 1);
    CHECK(line_of("#N 2\n# comment\n0 1 1 1\n") == 0);
  }
}
