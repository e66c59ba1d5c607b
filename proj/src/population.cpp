#include "gmds/population.hpp"

#include <cmath>
#include <limits>
#include <tuple>
#include <utility>

#include "gmds/errors.hpp"

namespace gmds {

MessagePopulation::MessagePopulation(std::size_t size, double mean_degree, WeightDistribution dist,
                                     double beta, std::uint64_t seed, int grid_divisions,
                                     double theta)
    : mean_degree_(mean_degree),
      dist_(std::move(dist)),
      beta_(0.0),
      boltzmann_(1.0),
      rng_(seed) {
  if (size < 1) throw InputError("population size must be positive");
  if (!(mean_degree >= 0.0) || !std::isfinite(mean_degree)) {
    throw InputError("mean degree must be finite and >= 0");
  }
  if (grid_divisions < 1) throw InputError("grid_divisions must be at least 1");
  if (!(theta > 0.0)) throw InputError("theta must be positive");
  set_beta(beta);
  grid_ = theta / grid_divisions;
  threshold_units_ = quantize_threshold(theta, grid_);
  members_.resize(size);
  for (auto& m : members_) m.weight_to_receiver = dist_.sample(rng_).first;
}

void MessagePopulation::set_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw InputError("beta must be finite and >= 0");
  beta_ = beta;
  boltzmann_ = std::exp(-beta);
}

CavityMessage MessagePopulation::message_for(double weight_back, std::size_t excess_degree) {
  dp_.reset(threshold_units_);
  double both = 1.0;
  const auto p = members_.size();
  for (std::size_t k = 0; k < excess_degree; ++k) {
    const auto& in = members_[rng_.below(p)];
    dp_.add(in.message.m1, in.message.m00, quantize_weight(in.weight_to_receiver, grid_));
    both *= in.message.m1 + in.message.m01;
  }
  CavityMessage out;
  out.m00 = dp_.at_least(threshold_units_);
  out.m01 = dp_.at_least(threshold_units_ - quantize_weight(weight_back, grid_));
  out.m1 = boltzmann_ * both;
  const double z = out.norm();
  if (!(z > 0.0) || !std::isfinite(z)) return CavityMessage::uniform();
  out.m00 /= z;
  out.m01 /= z;
  out.m1 /= z;
  return out;
}

PopulationMember MessagePopulation::fresh_member() {
  const auto [forward, backward] = dist_.sample(rng_);
  const auto k = rng_.poisson(mean_degree_);
  return {message_for(backward, k), forward};
}

void MessagePopulation::sweep() {
  const auto p = members_.size();
  for (std::size_t n = 0; n < p; ++n) {
    auto fresh = fresh_member();
    members_[rng_.below(p)] = fresh;
  }
  ++sweeps_;
}

CavityMessage MessagePopulation::mean_message() const {
  CavityMessage mean{0.0, 0.0, 0.0};
  for (const auto& m : members_) {
    mean.m00 += m.message.m00;
    mean.m01 += m.message.m01;
    mean.m1 += m.message.m1;
  }
  const auto p = static_cast<double>(members_.size());
  return {mean.m00 / p, mean.m01 / p, mean.m1 / p};
}

double MessagePopulation::vertex_term(double& q1) {
  const auto d = rng_.poisson(mean_degree_);
  const auto p = members_.size();
  dp_.reset(threshold_units_);
  double both = 1.0;
  for (std::size_t k = 0; k < d; ++k) {
    const auto& in = members_[rng_.below(p)];
    dp_.add(in.message.m1, in.message.m00, quantize_weight(in.weight_to_receiver, grid_));
    both *= in.message.m1 + in.message.m01;
  }
  const double occupied = boltzmann_ * both;
  const double z = occupied + dp_.at_least(threshold_units_);
  q1 = occupied / z;
  return std::log(z);
}

// Both directions of one edge are rebuilt from fresh cavity neighborhoods so
// that each message is consistent with the shared weight pair.
double MessagePopulation::edge_term() {
  const auto [w_ij, w_ji] = dist_.sample(rng_);
  const auto a = message_for(w_ji, rng_.poisson(mean_degree_));  // i -> j
  const auto b = message_for(w_ij, rng_.poisson(mean_degree_));  // j -> i
  return std::log(a.m00 * b.m00 + a.m01 * b.m1 + a.m1 * b.m01 + a.m1 * b.m1);
}

EnsembleDensities MessagePopulation::measure(std::size_t n_samples, std::size_t batches) {
  if (n_samples < 100) throw InputError("ensemble measurement needs at least 100 samples");
  if (batches < 2 || batches > n_samples) throw InputError("need between 2 and n_samples batches");
  const std::size_t per_batch = n_samples / batches;
  const bool has_f = beta_ > 0.0;

  std::vector<double> rho(batches), s(batches), f(batches);
  for (std::size_t b = 0; b < batches; ++b) {
    double q1_sum = 0.0;
    double vertex_sum = 0.0;
    double edge_sum = 0.0;
    for (std::size_t k = 0; k < per_batch; ++k) {
      double q1 = 0.0;
      vertex_sum += vertex_term(q1);
      q1_sum += q1;
      if (mean_degree_ > 0.0) edge_sum += edge_term();
    }
    const double ln_z = vertex_sum / per_batch - 0.5 * mean_degree_ * edge_sum / per_batch;
    rho[b] = q1_sum / per_batch;
    s[b] = rho[b] * beta_ + ln_z;
    f[b] = has_f ? -ln_z / beta_ : 0.0;
  }

  auto mean_and_err = [&](const std::vector<double>& x) {
    double m = 0.0;
    for (double v : x) m += v;
    m /= batches;
    double var = 0.0;
    for (double v : x) var += (v - m) * (v - m);
    var /= static_cast<double>(batches - 1);
    return std::pair{m, std::sqrt(var / batches)};
  };

  EnsembleDensities out;
  auto& d = out.densities;
  d.beta = beta_;
  d.converged = true;
  d.sweeps = sweeps_;
  std::tie(d.rho, out.rho_err) = mean_and_err(rho);
  std::tie(d.s, out.s_err) = mean_and_err(s);
  if (has_f) {
    std::tie(d.f, out.f_err) = mean_and_err(f);
  } else {
    d.f = std::numeric_limits<double>::quiet_NaN();
    out.f_err = std::numeric_limits<double>::quiet_NaN();
  }
  d.ln_z_per_vertex = d.s - d.rho * beta_;
  return out;
}

void population_sweep(MessagePopulation& pop) { pop.sweep(); }

EnsembleDensities ensemble_densities(MessagePopulation& pop, std::size_t n_samples) {
  return pop.measure(n_samples);
}

std::vector<EnsembleDensities> ensemble_scan(double mean_degree, const WeightDistribution& dist,
                                             std::span<const double> betas,
                                             const PopulationParams& params, double theta) {
  for (std::size_t k = 1; k < betas.size(); ++k) {
    if (!(betas[k] > betas[k - 1])) throw InputError("beta schedule must be strictly increasing");
  }
  std::vector<EnsembleDensities> out;
  if (betas.empty()) return out;
  MessagePopulation pop(params.pop_size, mean_degree, dist, betas.front(), params.seed,
                        params.grid_divisions, theta);
  for (std::size_t k = 0; k < betas.size(); ++k) {
    pop.set_beta(betas[k]);
    const auto sweeps = k == 0 ? params.equilibration_sweeps : params.sweeps_per_beta;
    for (std::size_t s = 0; s < sweeps; ++s) pop.sweep();
    out.push_back(pop.measure(params.samples, params.batches));
  }
  return out;
}

std::vector<Rho0Point> rho0_curve(std::span<const double> mean_degrees,
                                  const WeightDistribution& dist, std::span<const double> betas,
                                  const PopulationParams& params, double theta) {
  std::vector<Rho0Point> out;
  for (double c : mean_degrees) {
    if (!(c > 0.0)) throw InputError("mean degrees must be positive");
    const auto scan = ensemble_scan(c, dist, betas, params, theta);
    std::vector<ThermoDensities> curve;
    for (const auto& e : scan) curve.push_back(e.densities);
    out.push_back({c, locate_rho0(curve)});
  }
  return out;
}

}  // namespace gmds
