#pragma once

// Independent reference computations for the unit and acceptance suites.
// Nothing here calls into the dynamic programs it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "gmds/er_generator.hpp"
#include "gmds/graph.hpp"

namespace gmds::testing {

struct UnitContributor {
  double occupied;
  double empty;
  int units;
};

/// Threshold sum by listing all 2^K subsets, with integer weights.
inline double brute_threshold_sum(const std::vector<UnitContributor>& cs, int threshold_units) {
  const auto k = cs.size();
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    int sum = 0;
    double prod = 1.0;
    for (std::size_t b = 0; b < k; ++b) {
      if (mask >> b & 1u) {
        sum += cs[b].units;
        prod *= cs[b].occupied;
      } else {
        prod *= cs[b].empty;
      }
    }
    if (sum >= threshold_units) total += prod;
  }
  return total;
}

/// Uniform random labelled tree by random attachment, weights from dist.
inline WeightedGraph random_tree(std::size_t n, const WeightDistribution& dist, std::uint64_t seed,
                                 double theta = 1.0) {
  Rng rng(seed);
  WeightedGraph g(n, theta);
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  rng.shuffle(perm);
  for (std::size_t k = 1; k < n; ++k) {
    const auto parent = perm[rng.below(k)];
    const auto [a, b] = dist.sample(rng);
    g.add_edge(parent, perm[k], a, b);
  }
  return g;
}

/// Longest shortest path (in edges) over a forest.
inline std::size_t diameter(const WeightedGraph& g) {
  std::size_t best = 0;
  for (VertexId s = 0; s < g.n_vertices(); ++s) {
    std::vector<int> dist(g.n_vertices(), -1);
    std::queue<VertexId> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      best = std::max<std::size_t>(best, dist[u]);
      for (const auto& nb : g.neighbors(u)) {
        if (dist[nb.vertex] < 0) {
          dist[nb.vertex] = dist[u] + 1;
          q.push(nb.vertex);
        }
      }
    }
  }
  return best;
}

/// Gaussian elimination with partial pivoting; a is row-major n x n.
inline std::vector<double> solve_linear(std::vector<double> a, std::vector<double> b) {
  const auto n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    }
    for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t r = n; r-- > 0;) {
    double s = b[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
    x[r] = s / a[r * n + r];
  }
  return x;
}

/// Copy of g with vertex v renamed perm[v].
inline WeightedGraph relabel(const WeightedGraph& g, const std::vector<VertexId>& perm) {
  WeightedGraph out(g.n_vertices(), g.theta());
  for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v], e.w_uv, e.w_vu);
  return out;
}

}  // namespace gmds::testing
