#include "gmds/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gmds/errors.hpp"

namespace gmds {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
  const auto lo = std::min(u, v);
  const auto hi = std::max(u, v);
  return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n_vertices, double theta)
    : theta_(theta),
      adjacency_(n_vertices),
      residual_(n_vertices, theta),
      occupied_(n_vertices, 0) {
  if (!std::isfinite(theta) || theta < 0.0) throw InputError("theta must be finite and non-negative");
  if (n_vertices > 0xffffffffULL) throw InputError("too many vertices");
}

WeightedGraph::WeightedGraph(std::size_t n_vertices, double theta, std::span<const Edge> edges)
    : WeightedGraph(n_vertices, theta) {
  edges_.reserve(edges.size());
  pairs_.reserve(edges.size());
  for (const auto& e : edges) add_edge(e.u, e.v, e.w_uv, e.w_vu);
}

void WeightedGraph::add_edge(VertexId u, VertexId v, double w_uv, double w_vu) {
  const auto n = n_vertices();
  if (u >= n || v >= n) {
    throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
  }
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (!(w_uv >= 0.0) || !(w_vu >= 0.0) || !std::isfinite(w_uv) || !std::isfinite(w_vu)) {
    throw InputError("edge weights must be finite and non-negative");
  }
  if (!pairs_.insert(pair_key(u, v)).second) {
    throw InputError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  const auto id = static_cast<std::uint32_t>(edges_.size());
  edges_.push_back({u, v, w_uv, w_vu});
  adjacency_[u].push_back({v, id, w_vu, w_uv});
  adjacency_[v].push_back({u, id, w_uv, w_vu});
}

bool WeightedGraph::has_edge(VertexId u, VertexId v) const {
  return u != v && pairs_.count(pair_key(u, v)) != 0;
}

bool WeightedGraph::satisfied(VertexId v) const {
  return occupied(v) || residual_.at(v) <= kThresholdSlack;
}

void WeightedGraph::occupy(VertexId v) {
  if (occupied(v)) throw std::logic_error("vertex " + std::to_string(v) + " is already occupied");
  occupied_[v] = 1;
  ++n_occupied_;
  for (const auto& nb : adjacency_[v]) residual_[nb.vertex] -= nb.weight_out;
}

Configuration Configuration::from_members(std::size_t n, std::span<const VertexId> members) {
  auto config = empty(n);
  for (auto m : members) {
    if (m >= n) throw InputError("member " + std::to_string(m) + " out of range");
    config.states[m] = 1;
  }
  return config;
}

std::size_t Configuration::n_occupied() const {
  return static_cast<std::size_t>(std::count(states.begin(), states.end(), std::uint8_t{1}));
}

bool is_satisfying(const WeightedGraph& graph, const Configuration& config) {
  if (config.states.size() != graph.n_vertices()) {
    throw InputError("configuration length " + std::to_string(config.states.size()) +
                     " does not match graph with " + std::to_string(graph.n_vertices()) +
                     " vertices");
  }
  for (VertexId j = 0; j < graph.n_vertices(); ++j) {
    if (config.states[j]) continue;
    const double need = graph.residual_theta(j);
    if (need <= kThresholdSlack) continue;
    double got = 0.0;
    for (const auto& nb : graph.neighbors(j)) {
      if (config.states[nb.vertex]) got += nb.weight_in;
    }
    if (got < need - kThresholdSlack) return false;
  }
  return true;
}

}  // namespace gmds
