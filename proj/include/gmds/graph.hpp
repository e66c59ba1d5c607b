#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

namespace gmds {

using VertexId = std::uint32_t;

/// Slack used when comparing summed weights against a threshold, so that
/// sums such as 0.7 + 0.3 count as reaching 1.0.
inline constexpr double kThresholdSlack = 1e-9;

struct Edge {
  VertexId u;
  VertexId v;
  double w_uv;  // how much u covers v
  double w_vu;  // how much v covers u
};

/// One adjacency entry as seen from the owning vertex.
struct Neighbor {
  VertexId vertex;
  std::uint32_t edge;
  double weight_in;   // w_{vertex, owner}
  double weight_out;  // w_{owner, vertex}
};

/// Generalized dominating-set instance. Each vertex carries a residual
/// threshold that starts at the uniform theta and only changes through
/// occupy_and_reduce, so decimation and the plain problem share one
/// representation.
class WeightedGraph {
 public:
  WeightedGraph(std::size_t n_vertices, double theta);
  WeightedGraph(std::size_t n_vertices, double theta, std::span<const Edge> edges);

  /// Throws InputError on self-loops, duplicate pairs, bad ids or negative
  /// weights.
  void add_edge(VertexId u, VertexId v, double w_uv, double w_vu);

  std::size_t n_vertices() const noexcept { return adjacency_.size(); }
  std::size_t n_edges() const noexcept { return edges_.size(); }
  double theta() const noexcept { return theta_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_.at(v); }
  bool has_edge(VertexId u, VertexId v) const;

  double residual_theta(VertexId v) const { return residual_.at(v); }
  bool occupied(VertexId v) const { return occupied_.at(v) != 0; }
  /// Occupied, or residual threshold already non-positive.
  bool satisfied(VertexId v) const;
  std::size_t n_occupied() const noexcept { return n_occupied_; }

  /// Marks v occupied and lowers each neighbor's residual threshold by the
  /// weight v exerts on it. Throws std::logic_error if v is already occupied.
  void occupy(VertexId v);

 private:
  double theta_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> residual_;
  std::vector<std::uint8_t> occupied_;
  std::size_t n_occupied_ = 0;
  std::unordered_set<std::uint64_t> pairs_;
};

struct Configuration {
  std::vector<std::uint8_t> states;

  static Configuration empty(std::size_t n) { return {std::vector<std::uint8_t>(n, 0)}; }
  static Configuration all_occupied(std::size_t n) { return {std::vector<std::uint8_t>(n, 1)}; }
  static Configuration from_members(std::size_t n, std::span<const VertexId> members);

  std::size_t n_occupied() const;
};

struct DominatingSet {
  std::vector<VertexId> members;  // sorted ascending
  std::size_t n_vertices = 0;

  std::size_t size() const noexcept { return members.size(); }
  double relative_size() const noexcept {
    return n_vertices == 0 ? 0.0 : static_cast<double>(members.size()) / n_vertices;
  }
  Configuration configuration() const { return Configuration::from_members(n_vertices, members); }
};

/// True iff every vertex is occupied or receives at least its residual
/// threshold from occupied neighbors. Throws InputError on size mismatch.
bool is_satisfying(const WeightedGraph& graph, const Configuration& config);

/// In-place form of the decimation step; see WeightedGraph::occupy.
inline void occupy_and_reduce(WeightedGraph& graph, VertexId v) { graph.occupy(v); }

}  // namespace gmds
