#include "gmds/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gmds/errors.hpp"

namespace gmds {

namespace {

struct InNeighbor {
  VertexId vertex;
  double weight;
};

/// Compact read-only view used by both exact routines.
struct Instance {
  std::size_t n = 0;
  std::vector<double> need;
  std::vector<std::vector<InNeighbor>> in;

  explicit Instance(const WeightedGraph& g) : n(g.n_vertices()), need(n), in(n) {
    for (VertexId v = 0; v < n; ++v) {
      need[v] = g.residual_theta(v);
      for (const auto& nb : g.neighbors(v)) in[v].push_back({nb.vertex, nb.weight_in});
    }
  }

  bool satisfied_by(std::uint32_t mask) const {
    for (VertexId j = 0; j < n; ++j) {
      if (mask >> j & 1u) continue;
      if (need[j] <= kThresholdSlack) continue;
      double got = 0.0;
      for (const auto& nb : in[j]) {
        if (mask >> nb.vertex & 1u) got += nb.weight;
      }
      if (got < need[j] - kThresholdSlack) return false;
    }
    return true;
  }
};

DominatingSet from_mask(std::uint32_t mask, std::size_t n) {
  DominatingSet out;
  out.n_vertices = n;
  for (VertexId v = 0; v < n; ++v) {
    if (mask >> v & 1u) out.members.push_back(v);
  }
  return out;
}

void check_size(const WeightedGraph& g, std::size_t cap, const char* what) {
  if (g.n_vertices() > cap) {
    throw RefusalError(std::string(what) + " refuses graphs with more than " +
                       std::to_string(cap) + " vertices (got " +
                       std::to_string(g.n_vertices()) + ")");
  }
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const Instance& inst)
      : inst_(inst), cover_(inst.n, 0.0), potential_(inst.n, 0.0), decided_(inst.n, 0) {
    for (VertexId j = 0; j < inst.n; ++j) {
      for (const auto& nb : inst.in[j]) potential_[j] += nb.weight;
    }
    order_.resize(inst.n);
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
      return inst.in[a].size() > inst.in[b].size();
    });
    // Reverse adjacency: who does v cover, and by how much.
    out_.resize(inst.n);
    for (VertexId j = 0; j < inst.n; ++j) {
      for (const auto& nb : inst.in[j]) out_[nb.vertex].push_back({j, nb.weight});
    }
  }

  std::uint32_t solve() {
    best_mask_ = greedy();
    best_size_ = std::popcount(best_mask_);
    descend(0, 0u, 0);
    return best_mask_;
  }

 private:
  bool infeasible(VertexId j) const {
    return decided_[j] == 2 && cover_[j] + potential_[j] < inst_.need[j] - kThresholdSlack;
  }

  bool neighborhood_infeasible(VertexId v) const {
    if (infeasible(v)) return true;
    for (const auto& nb : out_[v]) {
      if (infeasible(nb.vertex)) return true;
    }
    return false;
  }

  void descend(std::size_t depth, std::uint32_t mask, int count) {
    if (count >= best_size_) return;
    if (depth == inst_.n) {
      best_size_ = count;
      best_mask_ = mask;
      return;
    }
    const VertexId v = order_[depth];
    for (const auto& nb : out_[v]) potential_[nb.vertex] -= nb.weight;

    // Empty first: small sets are found early and tighten the bound.
    decided_[v] = 2;
    if (!neighborhood_infeasible(v)) descend(depth + 1, mask, count);

    decided_[v] = 1;
    for (const auto& nb : out_[v]) cover_[nb.vertex] += nb.weight;
    if (!neighborhood_infeasible(v)) descend(depth + 1, mask | (1u << v), count + 1);
    for (const auto& nb : out_[v]) cover_[nb.vertex] -= nb.weight;

    decided_[v] = 0;
    for (const auto& nb : out_[v]) potential_[nb.vertex] += nb.weight;
  }

  // Repeatedly occupy the vertex that removes the most outstanding need.
  std::uint32_t greedy() const {
    std::vector<double> remaining(inst_.need);
    std::uint32_t mask = 0;
    auto unmet = [&](VertexId j) {
      return !(mask >> j & 1u) && remaining[j] > kThresholdSlack;
    };
    for (;;) {
      double best_gain = -1.0;
      VertexId pick = 0;
      bool any_unmet = false;
      for (VertexId v = 0; v < inst_.n; ++v) {
        if (mask >> v & 1u) continue;
        double gain = unmet(v) ? remaining[v] : 0.0;
        any_unmet = any_unmet || unmet(v);
        for (const auto& nb : out_[v]) {
          if (unmet(nb.vertex)) gain += std::min(nb.weight, remaining[nb.vertex]);
        }
        if (gain > best_gain) {
          best_gain = gain;
          pick = v;
        }
      }
      if (!any_unmet) return mask;
      mask |= 1u << pick;
      for (const auto& nb : out_[pick]) remaining[nb.vertex] -= nb.weight;
    }
  }

  const Instance& inst_;
  std::vector<double> cover_;
  std::vector<double> potential_;
  std::vector<std::uint8_t> decided_;  // 0 undecided, 1 occupied, 2 empty
  std::vector<VertexId> order_;
  std::vector<std::vector<InNeighbor>> out_;
  std::uint32_t best_mask_ = 0;
  int best_size_ = 0;
};

}  // namespace

DominatingSet exact_mds_enumerate(const WeightedGraph& graph) {
  check_size(graph, kExactMdsMaxVertices, "exact_mds");
  const Instance inst(graph);
  const auto n = inst.n;
  if (n == 0) return from_mask(0, 0);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == 0) {
      if (inst.satisfied_by(0)) return from_mask(0, n);
      continue;
    }
    // Gosper's hack: next mask with the same popcount.
    for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit;) {
      if (inst.satisfied_by(static_cast<std::uint32_t>(mask))) {
        return from_mask(static_cast<std::uint32_t>(mask), n);
      }
      const std::uint64_t c = mask & (0 - mask);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return from_mask(static_cast<std::uint32_t>(limit - 1), n);
}

DominatingSet exact_mds_branch_and_bound(const WeightedGraph& graph) {
  check_size(graph, kExactMdsMaxVertices, "exact_mds");
  const Instance inst(graph);
  BranchAndBound search(inst);
  return from_mask(search.solve(), inst.n);
}

DominatingSet exact_mds(const WeightedGraph& graph) {
  return graph.n_vertices() <= 16 ? exact_mds_enumerate(graph)
                                   : exact_mds_branch_and_bound(graph);
}

ExactThermo exact_thermo(const WeightedGraph& graph, double beta) {
  check_size(graph, kExactThermoMaxVertices, "exact_thermo");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw InputError("beta must be finite and >= 0");
  const Instance inst(graph);
  const auto n = inst.n;

  // Satisfying configurations grouped by occupation count.
  std::vector<std::uint64_t> count(n + 1, 0);
  std::vector<std::vector<std::uint64_t>> count_occupied(n + 1, std::vector<std::uint64_t>(n, 0));
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const auto m = static_cast<std::uint32_t>(mask);
    if (!inst.satisfied_by(m)) continue;
    const int k = std::popcount(m);
    ++count[k];
    for (std::uint32_t bits = m; bits; bits &= bits - 1) ++count_occupied[k][std::countr_zero(bits)];
  }

  // Weights relative to the smallest populated occupation level.
  std::size_t k_min = 0;
  while (count[k_min] == 0) ++k_min;
  long double z = 0.0L;
  long double occupied_total = 0.0L;
  std::vector<long double> q1(n, 0.0L);
  std::uint64_t n_sat = 0;
  for (std::size_t k = k_min; k <= n; ++k) {
    if (count[k] == 0) continue;
    n_sat += count[k];
    const long double w = std::exp(-static_cast<long double>(beta) * (k - k_min));
    z += w * count[k];
    occupied_total += w * count[k] * k;
    for (std::size_t v = 0; v < n; ++v) q1[v] += w * count_occupied[k][v];
  }

  ExactThermo out;
  out.beta = beta;
  out.n_satisfying = n_sat;
  out.ln_z = static_cast<double>(std::log(z) - static_cast<long double>(beta) * k_min);
  out.q1.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.q1[v] = static_cast<double>(q1[v] / z);
  if (n == 0) return out;
  out.rho = static_cast<double>(occupied_total / z) / n;
  out.s = out.rho * beta + out.ln_z / n;
  out.f = beta > 0.0 ? -out.ln_z / (beta * n) : std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace gmds
