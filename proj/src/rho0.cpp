#include "gmds/rho0.hpp"

#include <cmath>

#include "gmds/errors.hpp"

namespace gmds {

namespace {

void require_increasing(std::span<const double> betas) {
  for (std::size_t k = 1; k < betas.size(); ++k) {
    if (!(betas[k] > betas[k - 1])) throw InputError("beta schedule must be strictly increasing");
  }
}

double lerp_at_zero(double x0, double s0, double x1, double s1) {
  if (s1 == s0) return x1;
  return x0 + (0.0 - s0) * (x1 - x0) / (s1 - s0);
}

}  // namespace

Rho0Estimate locate_rho0(std::span<const ThermoDensities> curve) {
  std::size_t usable = 0;
  while (usable < curve.size() && curve[usable].converged && std::isfinite(curve[usable].s)) {
    ++usable;
  }
  for (std::size_t k = 0; k < usable; ++k) {
    if (curve[k].s > 0.0) continue;
    if (k == 0) return {curve[0].rho, curve[0].beta, false};
    const auto& a = curve[k - 1];
    const auto& b = curve[k];
    return {lerp_at_zero(a.rho, a.s, b.rho, b.s), lerp_at_zero(a.beta, a.s, b.beta, b.s), false};
  }
  if (usable < 2) {
    throw InsufficientDataError("need at least two converged points to extrapolate rho0");
  }
  const auto& a = curve[usable - 2];
  const auto& b = curve[usable - 1];
  return {lerp_at_zero(a.rho, a.s, b.rho, b.s), lerp_at_zero(a.beta, a.s, b.beta, b.s), true};
}

std::vector<ThermoDensities> scan_beta(const WeightedGraph& graph, std::span<const double> betas,
                                       const BpParams& params, bool stop_when_unconverged) {
  require_increasing(betas);
  std::vector<ThermoDensities> curve;
  if (betas.empty()) return curve;
  BpState state(graph, betas.front(), params.grid_divisions);
  Rng rng(params.seed);
  for (double beta : betas) {
    state.set_beta(beta);
    const auto run = iterate_bp(state, params, rng);
    curve.push_back(densities(state, run));
    if (stop_when_unconverged && !run.converged) break;
  }
  return curve;
}

Rho0Estimate estimate_rho0(const WeightedGraph& graph, std::span<const double> betas,
                           const BpParams& params) {
  require_increasing(betas);
  // Points past the first unconverged one are never used.
  const auto curve = scan_beta(graph, betas, params, true);
  return locate_rho0(curve);
}

std::vector<double> beta_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw InputError("beta step must be positive");
  if (!(stop >= start)) throw InputError("beta grid stop must not precede start");
  std::vector<double> out;
  for (std::size_t k = 0;; ++k) {
    const double b = start + static_cast<double>(k) * step;
    if (b > stop + step * 1e-3) break;
    out.push_back(b);
  }
  return out;
}

}  // namespace gmds
