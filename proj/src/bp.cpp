#include "gmds/bp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gmds/errors.hpp"

namespace gmds {

BpState::BpState(const WeightedGraph& graph, double beta, int grid_divisions)
    : graph_(&graph), beta_(0.0), boltzmann_(1.0) {
  if (grid_divisions < 1) throw InputError("grid_divisions must be at least 1");
  set_beta(beta);
  const double scale = graph.theta() > 0.0 ? graph.theta() : 1.0;
  grid_ = scale / grid_divisions;

  const auto m = graph.n_edges();
  messages_.assign(2 * m, CavityMessage::uniform());
  weight_units_.resize(2 * m);
  for (std::uint32_t e = 0; e < m; ++e) {
    const auto& edge = graph.edges()[e];
    weight_units_[directed_id(e, false)] = quantize_weight(edge.w_uv, grid_);
    weight_units_[directed_id(e, true)] = quantize_weight(edge.w_vu, grid_);
  }
  refresh();
}

void BpState::set_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw InputError("beta must be finite and >= 0");
  beta_ = beta;
  boltzmann_ = std::exp(-beta);
}

VertexId BpState::sender(std::uint32_t directed) const {
  const auto& e = graph_->edges()[directed / 2];
  return (directed & 1u) ? e.v : e.u;
}

VertexId BpState::receiver(std::uint32_t directed) const {
  const auto& e = graph_->edges()[directed / 2];
  return (directed & 1u) ? e.u : e.v;
}

void BpState::refresh() {
  const auto& g = *graph_;
  const auto n = g.n_vertices();
  const auto m = g.n_edges();

  threshold_units_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    threshold_units_[v] = g.occupied(v) ? 0 : quantize_threshold(g.residual_theta(v), grid_);
  }

  live_.assign(m, 0);
  live_directed_.clear();
  std::vector<std::size_t> in_count(n + 1, 0);
  for (std::uint32_t e = 0; e < m; ++e) {
    const auto& edge = g.edges()[e];
    if (g.occupied(edge.u) || g.occupied(edge.v)) continue;
    if (threshold_units_[edge.u] == 0 && threshold_units_[edge.v] == 0) continue;
    live_[e] = 1;
    live_directed_.push_back(directed_id(e, false));
    live_directed_.push_back(directed_id(e, true));
    ++in_count[edge.u];
    ++in_count[edge.v];
  }

  in_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) in_offsets_[v + 1] = in_offsets_[v] + in_count[v];
  in_ids_.resize(in_offsets_[n]);
  std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  for (auto d : live_directed_) in_ids_[cursor[receiver(d)]++] = d;
}

std::uint32_t BpState::find_directed(VertexId from, VertexId to) const {
  for (const auto& nb : graph_->neighbors(from)) {
    if (nb.vertex == to) {
      const auto& e = graph_->edges()[nb.edge];
      return directed_id(nb.edge, e.u != from);
    }
  }
  throw InputError("no edge " + std::to_string(from) + " -> " + std::to_string(to));
}

const CavityMessage& BpState::message(VertexId from, VertexId to) const {
  return messages_[find_directed(from, to)];
}

CavityMessage BpState::compute_message(std::uint32_t directed) const {
  const VertexId i = sender(directed);
  const std::uint32_t back = directed ^ 1u;  // j -> i
  const int need = threshold_units_[i];

  scratch_.reset(need);
  double both = 1.0;
  for (auto k = in_offsets_[i]; k < in_offsets_[i + 1]; ++k) {
    const auto in = in_ids_[k];
    if (in == back) continue;
    const auto& q = messages_[in];
    scratch_.add(q.m1, q.m00, weight_units_[in]);
    both *= q.m1 + q.m01;
  }

  CavityMessage out;
  out.m00 = scratch_.at_least(need);
  out.m01 = scratch_.at_least(need - weight_units_[back]);
  out.m1 = boltzmann_ * both;
  const double z = out.norm();
  if (!(z > 0.0) || !std::isfinite(z)) return CavityMessage::uniform();
  out.m00 /= z;
  out.m01 /= z;
  out.m1 /= z;
  return out;
}

double BpState::sweep(Rng& rng, double damping) {
  std::vector<std::uint32_t> order(live_directed_);
  rng.shuffle(order);
  double residual = 0.0;
  for (auto d : order) {
    const CavityMessage fresh = compute_message(d);
    CavityMessage& old = messages_[d];
    CavityMessage next{(1.0 - damping) * fresh.m00 + damping * old.m00,
                       (1.0 - damping) * fresh.m01 + damping * old.m01,
                       (1.0 - damping) * fresh.m1 + damping * old.m1};
    residual = std::max({residual, std::abs(next.m00 - old.m00), std::abs(next.m01 - old.m01),
                         std::abs(next.m1 - old.m1)});
    old = next;
  }
  return residual;
}

std::pair<double, double> BpState::marginal(VertexId j) const {
  if (graph_->occupied(j)) return {0.0, 1.0};
  const int need = threshold_units_.at(j);
  scratch_.reset(need);
  double both = 1.0;
  for (auto k = in_offsets_[j]; k < in_offsets_[j + 1]; ++k) {
    const auto& q = messages_[in_ids_[k]];
    scratch_.add(q.m1, q.m00, weight_units_[in_ids_[k]]);
    both *= q.m1 + q.m01;
  }
  const double occupied = boltzmann_ * both;
  const double empty = scratch_.at_least(need);
  const double z = occupied + empty;
  if (!(z > 0.0)) return {0.5, 0.5};
  return {empty / z, occupied / z};
}

ThermoDensities BpState::densities() const {
  const auto& g = *graph_;
  double ln_z = 0.0;
  double occupied_sum = 0.0;
  std::size_t n_active = 0;

  for (VertexId j = 0; j < g.n_vertices(); ++j) {
    if (g.occupied(j)) continue;
    ++n_active;
    const int need = threshold_units_[j];
    scratch_.reset(need);
    double both = 1.0;
    for (auto k = in_offsets_[j]; k < in_offsets_[j + 1]; ++k) {
      const auto& q = messages_[in_ids_[k]];
      scratch_.add(q.m1, q.m00, weight_units_[in_ids_[k]]);
      both *= q.m1 + q.m01;
    }
    const double occupied = boltzmann_ * both;
    const double z = occupied + scratch_.at_least(need);
    ln_z += std::log(z);
    occupied_sum += occupied / z;
  }
  for (std::uint32_t e = 0; e < g.n_edges(); ++e) {
    if (!live_[e]) continue;
    const auto& a = messages_[directed_id(e, false)];
    const auto& b = messages_[directed_id(e, true)];
    ln_z -= std::log(a.m00 * b.m00 + a.m01 * b.m1 + a.m1 * b.m01 + a.m1 * b.m1);
  }

  ThermoDensities out;
  out.beta = beta_;
  if (n_active == 0) return out;
  const auto n = static_cast<double>(n_active);
  out.rho = occupied_sum / n;
  out.ln_z_per_vertex = ln_z / n;
  out.s = out.rho * beta_ + out.ln_z_per_vertex;
  out.f = beta_ > 0.0 ? -out.ln_z_per_vertex / beta_ : std::numeric_limits<double>::quiet_NaN();
  return out;
}

BpRun iterate_bp(BpState& state, const BpParams& params, Rng& rng) {
  if (params.max_sweeps < 1) throw InputError("max_sweeps must be at least 1");
  if (!(params.tol > 0.0)) throw InputError("tol must be positive");
  if (!(params.damping >= 0.0 && params.damping < 1.0)) {
    throw InputError("damping must lie in [0, 1)");
  }
  BpRun run;
  for (run.sweeps = 1; run.sweeps <= params.max_sweeps; ++run.sweeps) {
    run.residual = state.sweep(rng, params.damping);
    if (run.residual < params.tol) {
      run.converged = true;
      return run;
    }
  }
  run.sweeps = params.max_sweeps;
  return run;
}

BpResult run_bp(const WeightedGraph& graph, double beta, const BpParams& params) {
  BpResult result{BpState(graph, beta, params.grid_divisions), {}};
  Rng rng(params.seed);
  result.run = iterate_bp(result.state, params, rng);
  return result;
}

CavityMessage update_message(const BpState& state, VertexId from, VertexId to) {
  const auto& m = state.message(from, to);
  const auto directed = static_cast<std::uint32_t>(&m - state.messages().data());
  return state.compute_message(directed);
}

std::pair<double, double> marginal(const BpState& state, VertexId j) { return state.marginal(j); }

ThermoDensities densities(const BpState& state, const BpRun& run) {
  auto d = state.densities();
  d.converged = run.converged;
  d.residual = run.residual;
  d.sweeps = run.sweeps;
  return d;
}

}  // namespace gmds
