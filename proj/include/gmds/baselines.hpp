#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gmds/graph.hpp"

namespace gmds {

struct PageRankResult {
  std::vector<double> scores;
  bool converged = false;
  std::size_t iterations = 0;
};

inline constexpr double kDefaultJumpProbability = 0.85;

/// Power iteration for P_i = (1-p)/N + p sum_j P_j w_{j,i} / sum_k w_{j,k}.
/// A vertex with zero outgoing weight spreads its mass uniformly. `initial`
/// (optional, renormalized) replaces the uniform start.
PageRankResult pagerank(const WeightedGraph& graph, double p = kDefaultJumpProbability,
                        double tol = 1e-12, std::size_t max_iters = 10000,
                        std::span<const double> initial = {});

/// Top ceil(fraction·N) vertices by score, ties to the lower id; returned in
/// rank order.
std::vector<VertexId> pagerank_select(std::span<const double> scores, double fraction);

/// Vertices sorted by descending score, ties to the lower id.
std::vector<VertexId> rank_by_score(std::span<const double> scores);

struct ApParams {
  double self_preference = 0.0;
  double damping = 0.5;
  std::size_t max_iters = 1000;
  std::size_t stable_window = 50;
  /// Amplitude of the seeded jitter added to similarities to break exact
  /// ties; 0 disables it.
  double tie_noise = 1e-10;
  std::uint64_t seed = 1;
};

/// Responsibilities and availabilities on all ordered pairs. Pairs that are
/// not graph edges are never candidates and stay at zero.
struct ApState {
  std::size_t n = 0;
  std::vector<double> responsibility;  // row-major n x n
  std::vector<double> availability;
  double self_preference = 0.0;

  double r(std::size_t i, std::size_t j) const { return responsibility[i * n + j]; }
  double a(std::size_t i, std::size_t j) const { return availability[i * n + j]; }
};

struct ApResult {
  std::vector<VertexId> exemplars;  // ascending
  bool converged = false;
  std::size_t iterations = 0;
  ApState state;
};

/// Affinity propagation from r = a = 0. Candidates for i are its graph
/// neighbors and itself; the maximum over an empty set is -infinity, so a
/// vertex without neighbors is always its own exemplar. Stops once the
/// exemplar set {i : r_ii + a_ii > 0} is unchanged for stable_window
/// iterations.
ApResult affinity_propagation(const WeightedGraph& graph, const ApParams& params);

}  // namespace gmds
