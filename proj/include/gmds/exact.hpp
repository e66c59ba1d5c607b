#pragma once

#include <cstdint>
#include <vector>

#include "gmds/graph.hpp"

namespace gmds {

inline constexpr std::size_t kExactMdsMaxVertices = 24;
inline constexpr std::size_t kExactThermoMaxVertices = 20;

/// Minimum dominating set by brute force: subsets in order of size up to 16
/// vertices, branch and bound (greedy incumbent) above. Throws RefusalError
/// beyond kExactMdsMaxVertices.
DominatingSet exact_mds(const WeightedGraph& graph);

/// The two exact_mds strategies, exposed so they can be checked against each
/// other.
DominatingSet exact_mds_enumerate(const WeightedGraph& graph);
DominatingSet exact_mds_branch_and_bound(const WeightedGraph& graph);

struct ExactThermo {
  double beta = 0.0;
  double ln_z = 0.0;
  std::vector<double> q1;  // per-vertex occupation marginal
  double rho = 0.0;
  double f = 0.0;  // NaN at beta = 0
  double s = 0.0;
  std::uint64_t n_satisfying = 0;
};

/// Partition function and marginals summed over all 2^N configurations.
/// Throws RefusalError beyond kExactThermoMaxVertices.
ExactThermo exact_thermo(const WeightedGraph& graph, double beta);

}  // namespace gmds
