#pragma once

#include <span>
#include <vector>

#include "gmds/bp.hpp"
#include "gmds/graph.hpp"

namespace gmds {

struct Rho0Estimate {
  double rho0 = 0.0;
  double beta_at_zero = 0.0;
  bool extrapolated = false;
};

/// Reads the minimum occupation density off an (increasing-beta) curve: the
/// density where the entropy first reaches zero, linearly interpolated in the
/// (rho, s) plane. Only the leading run of converged points is used; if the
/// entropy is still positive where that run ends, the last two points are
/// extrapolated and the estimate is flagged. Throws InsufficientDataError
/// when fewer than two usable points exist and no crossing was seen.
Rho0Estimate locate_rho0(std::span<const ThermoDensities> curve);

/// BP densities along an increasing beta schedule, warm-starting each point
/// from the previous fixed point. With stop_when_unconverged the scan ends
/// at the first point that fails to converge.
std::vector<ThermoDensities> scan_beta(const WeightedGraph& graph, std::span<const double> betas,
                                       const BpParams& params, bool stop_when_unconverged = false);

Rho0Estimate estimate_rho0(const WeightedGraph& graph, std::span<const double> betas,
                           const BpParams& params);

/// start, start+step, ... up to and including stop (within step/1000).
std::vector<double> beta_grid(double start, double stop, double step);

}  // namespace gmds
