#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gmds/graph.hpp"
#include "gmds/rng.hpp"
#include "gmds/threshold_sum.hpp"

namespace gmds {

/// Joint cavity distribution q_{i->j}^{(c_i, c_j)} on a directed edge, with
/// the receiving vertex's own constraint removed. The two occupied-sender
/// entries are always equal, so only three numbers are stored and
/// m00 + m01 + 2 m1 = 1.
struct CavityMessage {
  double m00 = 0.25;  // sender empty, receiver empty
  double m01 = 0.25;  // sender empty, receiver occupied
  double m1 = 0.25;   // sender occupied, receiver either

  static constexpr CavityMessage uniform() { return {0.25, 0.25, 0.25}; }

  double q(int sender_state, int receiver_state) const {
    if (sender_state) return m1;
    return receiver_state ? m01 : m00;
  }
  double norm() const { return m00 + m01 + 2.0 * m1; }
};

struct ThermoDensities {
  double beta = 0.0;
  double rho = 0.0;
  double f = 0.0;  // NaN at beta = 0, where only the entropy is defined
  double s = 0.0;
  bool converged = false;
  double residual = 0.0;
  double ln_z_per_vertex = 0.0;
  std::size_t sweeps = 0;
};

struct BpParams {
  std::size_t max_sweeps = 1000;
  double tol = 1e-7;
  double damping = 0.0;
  std::uint64_t seed = 1;
  /// Weight sums are quantized to theta / grid_divisions.
  int grid_divisions = 10;
};

/// Message field of one BP run over the active part of a graph. Occupied
/// vertices are excluded, and an edge whose endpoints are both already
/// satisfied is dropped since it no longer couples anything. The graph must
/// outlive the state.
class BpState {
 public:
  BpState(const WeightedGraph& graph, double beta, int grid_divisions = 10);

  const WeightedGraph& graph() const noexcept { return *graph_; }
  double beta() const noexcept { return beta_; }
  void set_beta(double beta);
  double grid() const noexcept { return grid_; }

  /// Picks up occupation and threshold changes made to the graph since
  /// construction. Messages on surviving edges are kept.
  void refresh();

  static std::uint32_t directed_id(std::uint32_t edge, bool reversed) {
    return 2 * edge + (reversed ? 1u : 0u);
  }
  VertexId sender(std::uint32_t directed) const;
  VertexId receiver(std::uint32_t directed) const;

  const CavityMessage& message(std::uint32_t directed) const { return messages_.at(directed); }
  /// Message from `from` to `to`; throws InputError if they are not adjacent.
  const CavityMessage& message(VertexId from, VertexId to) const;
  void set_message(std::uint32_t directed, const CavityMessage& m) { messages_.at(directed) = m; }
  std::span<const CavityMessage> messages() const noexcept { return messages_; }

  bool edge_live(std::uint32_t edge) const { return live_.at(edge) != 0; }
  std::span<const std::uint32_t> live_directed() const noexcept { return live_directed_; }

  /// Right-hand side of the BP equation for one directed edge, from the
  /// current incoming messages. Does not store the result.
  CavityMessage compute_message(std::uint32_t directed) const;

  /// One asynchronous pass over every live directed edge in a random order.
  /// Returns the largest component change.
  double sweep(Rng& rng, double damping);

  /// (q0, q1) for vertex j. Occupied vertices return (0, 1).
  std::pair<double, double> marginal(VertexId j) const;

  ThermoDensities densities() const;

 private:
  std::uint32_t find_directed(VertexId from, VertexId to) const;

  const WeightedGraph* graph_;
  double beta_;
  double boltzmann_;  // e^{-beta}
  double grid_;
  std::vector<CavityMessage> messages_;
  std::vector<int> weight_units_;     // per directed edge, sender -> receiver
  std::vector<int> threshold_units_;  // per vertex
  std::vector<std::uint8_t> live_;    // per undirected edge
  std::vector<std::uint32_t> live_directed_;
  std::vector<std::size_t> in_offsets_;
  std::vector<std::uint32_t> in_ids_;  // live directed edges grouped by receiver
  mutable CappedSumDp scratch_;
};

struct BpRun {
  bool converged = false;
  double residual = 0.0;
  std::size_t sweeps = 0;
};

/// Sweeps until the largest change drops below tol or max_sweeps is hit.
BpRun iterate_bp(BpState& state, const BpParams& params, Rng& rng);

struct BpResult {
  BpState state;
  BpRun run;
};

/// Fresh uniform messages, then iterate_bp with an rng seeded from params.
BpResult run_bp(const WeightedGraph& graph, double beta, const BpParams& params);

CavityMessage update_message(const BpState& state, VertexId from, VertexId to);
std::pair<double, double> marginal(const BpState& state, VertexId j);
ThermoDensities densities(const BpState& state, const BpRun& run);

}  // namespace gmds
