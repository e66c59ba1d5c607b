#include "gmds/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gmds/errors.hpp"
#include "gmds/rng.hpp"

namespace gmds {

PageRankResult pagerank(const WeightedGraph& graph, double p, double tol, std::size_t max_iters,
                        std::span<const double> initial) {
  if (!(p >= 0.0 && p < 1.0)) throw InputError("jump probability p must lie in [0, 1)");
  const auto n = graph.n_vertices();
  PageRankResult out;
  if (n == 0) {
    out.converged = true;
    return out;
  }

  std::vector<double> out_weight(n, 0.0);
  for (VertexId j = 0; j < n; ++j) {
    for (const auto& nb : graph.neighbors(j)) out_weight[j] += nb.weight_out;
  }

  std::vector<double> score(n, 1.0 / n);
  if (!initial.empty()) {
    if (initial.size() != n) throw InputError("initial scores have the wrong length");
    const double total = std::accumulate(initial.begin(), initial.end(), 0.0);
    if (!(total > 0.0)) throw InputError("initial scores must have positive sum");
    for (std::size_t k = 0; k < n; ++k) score[k] = initial[k] / total;
  }

  std::vector<double> next(n);
  for (out.iterations = 1; out.iterations <= max_iters; ++out.iterations) {
    double dangling = 0.0;
    for (VertexId j = 0; j < n; ++j) {
      if (out_weight[j] <= 0.0) dangling += score[j];
    }
    const double base = (1.0 - p) / n + p * dangling / n;
    for (VertexId i = 0; i < n; ++i) {
      double flow = 0.0;
      for (const auto& nb : graph.neighbors(i)) {
        const auto j = nb.vertex;
        if (out_weight[j] > 0.0) flow += score[j] * nb.weight_in / out_weight[j];
      }
      next[i] = base + p * flow;
    }
    double change = 0.0;
    for (std::size_t k = 0; k < n; ++k) change += std::abs(next[k] - score[k]);
    score.swap(next);
    if (change < tol) {
      out.converged = true;
      break;
    }
  }
  out.iterations = std::min(out.iterations, max_iters);
  // Remove floating drift so the scores stay a probability vector.
  const double total = std::accumulate(score.begin(), score.end(), 0.0);
  for (auto& s : score) s /= total;
  out.scores = std::move(score);
  return out;
}

std::vector<VertexId> rank_by_score(std::span<const double> scores) {
  std::vector<VertexId> order(scores.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return scores[a] > scores[b]; });
  return order;
}

std::vector<VertexId> pagerank_select(std::span<const double> scores, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw InputError("fraction must lie in (0, 1]");
  auto order = rank_by_score(scores);
  // Guard against 0.25 * 20 landing a hair above 5.
  const auto take = static_cast<std::size_t>(std::ceil(fraction * scores.size() - 1e-9));
  order.resize(std::min(take, order.size()));
  return order;
}

ApResult affinity_propagation(const WeightedGraph& graph, const ApParams& params) {
  if (!(params.damping >= 0.0 && params.damping < 1.0)) {
    throw InputError("damping must lie in [0, 1)");
  }
  if (params.stable_window < 1) throw InputError("stable_window must be at least 1");
  const auto n = graph.n_vertices();
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();

  // Candidate lists: each vertex may pick itself or a neighbor.
  std::vector<std::vector<VertexId>> cand(n);
  std::vector<std::vector<double>> sim(n);
  Rng rng(params.seed);
  for (VertexId i = 0; i < n; ++i) {
    cand[i].push_back(i);
    sim[i].push_back(params.self_preference);
    for (const auto& nb : graph.neighbors(i)) {
      cand[i].push_back(nb.vertex);
      sim[i].push_back(nb.weight_out);
    }
    for (auto& s : sim[i]) s += params.tie_noise * rng.uniform();
  }

  ApResult out;
  auto& st = out.state;
  st.n = n;
  st.self_preference = params.self_preference;
  st.responsibility.assign(n * n, 0.0);
  st.availability.assign(n * n, 0.0);
  auto R = [&](std::size_t i, std::size_t j) -> double& { return st.responsibility[i * n + j]; };
  auto A = [&](std::size_t i, std::size_t j) -> double& { return st.availability[i * n + j]; };

  // Who lists j as a candidate (column view for the availability update).
  std::vector<std::vector<VertexId>> chosen_by(n);
  for (VertexId i = 0; i < n; ++i) {
    for (auto j : cand[i]) chosen_by[j].push_back(i);
  }

  const double lam = params.damping;
  auto blend = [lam](double old, double fresh) {
    if (std::isinf(fresh)) return fresh;
    return lam * old + (1.0 - lam) * fresh;
  };

  std::vector<std::uint8_t> exemplar(n, 0), previous(n, 0);
  std::size_t stable = 0;
  for (out.iterations = 1; out.iterations <= params.max_iters; ++out.iterations) {
    // Responsibilities: s_ij minus the best competing a_ik + s_ik.
    for (VertexId i = 0; i < n; ++i) {
      double best = kNegInf;
      double second = kNegInf;
      std::size_t best_at = 0;
      for (std::size_t k = 0; k < cand[i].size(); ++k) {
        const double v = A(i, cand[i][k]) + sim[i][k];
        if (v > best) {
          second = best;
          best = v;
          best_at = k;
        } else if (v > second) {
          second = v;
        }
      }
      for (std::size_t k = 0; k < cand[i].size(); ++k) {
        const double competitor = k == best_at ? second : best;
        const double fresh = sim[i][k] - competitor;  // +inf when no competitor
        auto& r = R(i, cand[i][k]);
        r = blend(r, fresh);
      }
    }
    // Availabilities.
    for (VertexId j = 0; j < n; ++j) {
      double positive = 0.0;
      for (auto i : chosen_by[j]) {
        if (i != j) positive += std::max(0.0, R(i, j));
      }
      const double rjj = R(j, j);
      for (auto i : chosen_by[j]) {
        auto& a = A(i, j);
        if (i == j) {
          a = blend(a, positive);
        } else {
          const double fresh = std::min(0.0, rjj + positive - std::max(0.0, R(i, j)));
          a = blend(a, fresh);
        }
      }
    }

    for (VertexId i = 0; i < n; ++i) exemplar[i] = R(i, i) + A(i, i) > 0.0;
    stable = exemplar == previous ? stable + 1 : 1;
    previous = exemplar;
    if (stable >= params.stable_window) {
      out.converged = true;
      break;
    }
  }
  out.iterations = std::min(out.iterations, params.max_iters);
  for (VertexId i = 0; i < n; ++i) {
    if (exemplar[i]) out.exemplars.push_back(i);
  }
  return out;
}

}  // namespace gmds
