#include "gmds/bpd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gmds/bp.hpp"
#include "gmds/errors.hpp"
#include "gmds/rng.hpp"

namespace gmds {

namespace {

void validate(const BpdConfig& c) {
  if (!(c.beta > 0.0)) throw InputError("BPD beta must be positive");
  if (!(c.occupy_fraction > 0.0 && c.occupy_fraction <= 1.0)) {
    throw InputError("occupy_fraction must lie in (0, 1]");
  }
  if (c.bp_sweeps_per_round < 1) throw InputError("bp_sweeps_per_round must be at least 1");
}

// Unmet need that the unoccupied neighbors could still supply.
bool coverable(const WeightedGraph& g, VertexId j) {
  double potential = 0.0;
  for (const auto& nb : g.neighbors(j)) {
    if (!g.occupied(nb.vertex)) potential += nb.weight_in;
  }
  return potential >= g.residual_theta(j) - kThresholdSlack;
}

// An unoccupied vertex is worth ranking if it is itself unsatisfied or can
// still push weight onto an unsatisfied neighbor.
bool is_candidate(const WeightedGraph& g, VertexId v) {
  if (g.occupied(v)) return false;
  if (!g.satisfied(v)) return true;
  for (const auto& nb : g.neighbors(v)) {
    if (!g.satisfied(nb.vertex) && nb.weight_out > 0.0) return true;
  }
  return false;
}

}  // namespace

BpdResult bpd_run(const WeightedGraph& graph, const BpdConfig& config) {
  validate(config);
  WeightedGraph work = graph;
  BpdResult result;
  const auto n = work.n_vertices();

  auto occupy = [&](VertexId v) {
    work.occupy(v);
    result.order.push_back(v);
  };

  BpState state(work, config.beta, config.grid_divisions);
  Rng rng(config.seed);
  std::vector<VertexId> candidates;
  std::vector<std::pair<double, VertexId>> ranked;

  for (;;) {
    // Occupying a neighbor moves weight from potential to residual, so an
    // unsatisfied vertex never becomes uncoverable mid-run; this mostly
    // fires on the first pass.
    bool any_unsatisfied = false;
    for (VertexId v = 0; v < n; ++v) {
      if (work.satisfied(v)) continue;
      if (!coverable(work, v)) {
        occupy(v);
      } else {
        any_unsatisfied = true;
      }
    }
    if (!any_unsatisfied) break;

    candidates.clear();
    for (VertexId v = 0; v < n; ++v) {
      if (is_candidate(work, v)) candidates.push_back(v);
    }

    state.refresh();
    for (std::size_t s = 0; s < config.bp_sweeps_per_round; ++s) {
      if (state.sweep(rng, config.damping) < config.tol) break;
    }
    ++result.rounds;

    ranked.clear();
    for (auto v : candidates) ranked.emplace_back(state.marginal(v).second, v);
    const auto take = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(config.occupy_fraction * candidates.size())));
    std::partial_sort(ranked.begin(), ranked.begin() + std::min(take, ranked.size()), ranked.end(),
                      [](const auto& a, const auto& b) {
                        return a.first != b.first ? a.first > b.first : a.second < b.second;
                      });
    for (std::size_t k = 0; k < take && k < ranked.size(); ++k) occupy(ranked[k].second);
  }

  result.set.n_vertices = n;
  result.set.members = result.order;
  std::sort(result.set.members.begin(), result.set.members.end());
  if (!is_satisfying(graph, result.set.configuration())) {
    throw std::logic_error("BPD produced a non-dominating set");
  }
  return result;
}

DominatingSet bpd_solve(const WeightedGraph& graph, const BpdConfig& config) {
  return bpd_run(graph, config).set;
}

std::vector<VertexId> bpd_rank_order(const WeightedGraph& graph, const BpdConfig& config) {
  return bpd_run(graph, config).order;
}

}  // namespace gmds
