#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "gmds/graph.hpp"
#include "gmds/rng.hpp"

namespace gmds {

/// Law of the weight pair (w_uv, w_vu) placed on each edge.
///
/// Three couplings are supported: `symmetric` draws one value and uses it in
/// both directions, `independent` draws the two directions separately from
/// the same atoms, and `joint` draws the pair itself from a list of pair
/// atoms. The directed conventional MDS needs the joint form because its
/// (theta, 0) / (0, theta) pairs are perfectly anti-correlated.
class WeightDistribution {
 public:
  enum class Coupling { symmetric, independent, joint };

  struct Atom {
    double value;
    double probability;
  };
  struct PairAtom {
    double forward;
    double backward;
    double probability;
  };

  static WeightDistribution symmetric(std::vector<Atom> atoms);
  static WeightDistribution independent(std::vector<Atom> atoms);
  static WeightDistribution joint(std::vector<PairAtom> atoms);

  Coupling coupling() const noexcept { return coupling_; }
  bool is_symmetric() const noexcept { return coupling_ == Coupling::symmetric; }
  /// Pair atoms after expanding the coupling; symmetric and independent laws
  /// are expressed here too.
  const std::vector<PairAtom>& pair_atoms() const noexcept { return pairs_; }
  /// Marginal single-direction atoms (as given for symmetric/independent).
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  /// Draws (w_uv, w_vu).
  std::pair<double, double> sample(Rng& rng) const;

 private:
  WeightDistribution(Coupling coupling, std::vector<Atom> atoms, std::vector<PairAtom> pairs);
  double draw_value(Rng& rng) const;
  std::pair<double, double> draw_pair(Rng& rng) const;

  Coupling coupling_;
  std::vector<Atom> atoms_;
  std::vector<PairAtom> pairs_;
  std::vector<double> atom_cdf_;
  std::vector<double> pair_cdf_;
};

/// {0.4, 1.0}·theta with probability 1/12 each and {0.5, ..., 0.9}·theta
/// with 1/6 each, symmetric.
WeightDistribution paper_weight_distribution(double theta);

/// Every edge carries theta both ways: the ordinary undirected MDS.
WeightDistribution undirected_mds_distribution(double theta);

/// Each edge is (theta, 0) or (0, theta) with probability 1/2: the directed
/// MDS.
WeightDistribution directed_mds_distribution(double theta);

/// Symmetric weights uniform over {0.1, ..., 1.0}·theta.
WeightDistribution uniform_weight_distribution(double theta);

/// Looks up one of "paper", "uniform", "mds-undirected", "mds-directed".
WeightDistribution named_weight_distribution(std::string_view name, double theta);

/// Erdős–Rényi graph with exactly round(c·n/2) distinct edges chosen
/// uniformly, weights drawn from dist. Deterministic in seed.
WeightedGraph generate_er(std::size_t n, double mean_degree, const WeightDistribution& dist,
                          std::uint64_t seed, double theta = 1.0);

}  // namespace gmds
