#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gmds/bp.hpp"
#include "gmds/er_generator.hpp"
#include "gmds/rho0.hpp"
#include "gmds/rng.hpp"
#include "gmds/threshold_sum.hpp"

namespace gmds {

struct PopulationParams {
  std::size_t pop_size = 100000;
  std::size_t equilibration_sweeps = 1000;
  /// Sweeps spent re-equilibrating at each later point of a beta scan.
  std::size_t sweeps_per_beta = 200;
  std::size_t samples = 10000;  // split evenly over `batches`
  std::size_t batches = 10;
  int grid_divisions = 10;
  std::uint64_t seed = 1;
};

/// A population member remembers the weight its sender exerts on its
/// receiver, because the message was computed with the opposite direction
/// of the same edge and the two are correlated (equal for symmetric laws,
/// complementary for the directed MDS).
struct PopulationMember {
  CavityMessage message;
  double weight_to_receiver = 0.0;
};

struct EnsembleDensities {
  ThermoDensities densities;
  double rho_err = 0.0;
  double f_err = 0.0;
  double s_err = 0.0;
};

/// Ensemble-level replica-symmetric solver for Erdős–Rényi graphs of mean
/// degree c: cavity messages are resampled from the population itself, with
/// Poisson(c) excess degree.
class MessagePopulation {
 public:
  MessagePopulation(std::size_t size, double mean_degree, WeightDistribution dist, double beta,
                    std::uint64_t seed, int grid_divisions = 10, double theta = 1.0);

  std::size_t size() const noexcept { return members_.size(); }
  double mean_degree() const noexcept { return mean_degree_; }
  double beta() const noexcept { return beta_; }
  void set_beta(double beta);
  std::size_t sweeps_done() const noexcept { return sweeps_; }
  std::span<const PopulationMember> members() const noexcept { return members_; }

  /// size() single-member updates, each overwriting a random member.
  void sweep();

  /// Componentwise mean message of the current population.
  CavityMessage mean_message() const;

  /// Monte-Carlo estimate of rho, f and s on a frozen population, with
  /// standard errors from batch means. Throws InputError below 100 samples.
  EnsembleDensities measure(std::size_t n_samples, std::size_t batches = 10);

 private:
  PopulationMember fresh_member();
  CavityMessage message_for(double weight_back, std::size_t excess_degree);
  double vertex_term(double& q1);
  double edge_term();

  double mean_degree_;
  WeightDistribution dist_;
  double beta_;
  double boltzmann_;
  double grid_;
  int threshold_units_;
  Rng rng_;
  std::vector<PopulationMember> members_;
  std::size_t sweeps_ = 0;
  CappedSumDp dp_;
};

void population_sweep(MessagePopulation& pop);
EnsembleDensities ensemble_densities(MessagePopulation& pop, std::size_t n_samples);

/// Equilibrate at the first beta, then re-equilibrate and measure at each
/// point of the (increasing) schedule.
std::vector<EnsembleDensities> ensemble_scan(double mean_degree, const WeightDistribution& dist,
                                             std::span<const double> betas,
                                             const PopulationParams& params, double theta = 1.0);

struct Rho0Point {
  double mean_degree = 0.0;
  Rho0Estimate estimate;
};

std::vector<Rho0Point> rho0_curve(std::span<const double> mean_degrees,
                                  const WeightDistribution& dist, std::span<const double> betas,
                                  const PopulationParams& params, double theta = 1.0);

}  // namespace gmds
