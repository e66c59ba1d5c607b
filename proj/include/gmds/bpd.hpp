#pragma once

#include <cstdint>
#include <vector>

#include "gmds/graph.hpp"

namespace gmds {

struct BpdConfig {
  double beta = 8.0;
  /// Share of the remaining candidates occupied per round (at least one).
  double occupy_fraction = 0.01;
  std::size_t bp_sweeps_per_round = 10;
  double tol = 1e-7;
  double damping = 0.0;
  std::uint64_t seed = 1;
  int grid_divisions = 10;
};

struct BpdResult {
  DominatingSet set;
  /// Vertices in the order they were occupied.
  std::vector<VertexId> order;
  std::size_t rounds = 0;
};

/// Belief-propagation-guided decimation. Each round runs a few BP sweeps on
/// the reduced instance (convergence not required), occupies the unoccupied
/// candidates with the largest q1, and lowers the neighbors' thresholds.
/// Vertices that can no longer be covered are occupied without BP. The
/// result always satisfies every constraint of the input graph.
BpdResult bpd_run(const WeightedGraph& graph, const BpdConfig& config);

DominatingSet bpd_solve(const WeightedGraph& graph, const BpdConfig& config);
std::vector<VertexId> bpd_rank_order(const WeightedGraph& graph, const BpdConfig& config);

}  // namespace gmds
