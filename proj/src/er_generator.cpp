#include "gmds/er_generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "gmds/errors.hpp"

namespace gmds {

namespace {

template <class A>
std::vector<double> build_cdf(const std::vector<A>& atoms) {
  if (atoms.empty()) throw InputError("weight distribution needs at least one atom");
  std::vector<double> cdf;
  cdf.reserve(atoms.size());
  double total = 0.0;
  for (const auto& a : atoms) {
    if (!(a.probability >= 0.0)) throw InputError("atom probabilities must be non-negative");
    total += a.probability;
    cdf.push_back(total);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InputError("atom probabilities sum to " + std::to_string(total) + ", not 1");
  }
  cdf.back() = 1.0;
  return cdf;
}

std::size_t pick(const std::vector<double>& cdf, double u) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
}

}  // namespace

WeightDistribution::WeightDistribution(Coupling coupling, std::vector<Atom> atoms,
                                       std::vector<PairAtom> pairs)
    : coupling_(coupling), atoms_(std::move(atoms)), pairs_(std::move(pairs)) {
  for (const auto& a : atoms_) {
    if (!(a.value >= 0.0)) throw InputError("weight atoms must be non-negative");
  }
  for (const auto& p : pairs_) {
    if (!(p.forward >= 0.0) || !(p.backward >= 0.0)) {
      throw InputError("weight atoms must be non-negative");
    }
  }
  if (!atoms_.empty()) atom_cdf_ = build_cdf(atoms_);
  pair_cdf_ = build_cdf(pairs_);
}

WeightDistribution WeightDistribution::symmetric(std::vector<Atom> atoms) {
  std::vector<PairAtom> pairs;
  for (const auto& a : atoms) pairs.push_back({a.value, a.value, a.probability});
  return WeightDistribution(Coupling::symmetric, std::move(atoms), std::move(pairs));
}

WeightDistribution WeightDistribution::independent(std::vector<Atom> atoms) {
  std::vector<PairAtom> pairs;
  for (const auto& a : atoms) {
    for (const auto& b : atoms) pairs.push_back({a.value, b.value, a.probability * b.probability});
  }
  // Renormalize away rounding in the product so the pair table validates.
  double total = 0.0;
  for (const auto& p : pairs) total += p.probability;
  if (total > 0.0) {
    for (auto& p : pairs) p.probability /= total;
  }
  return WeightDistribution(Coupling::independent, std::move(atoms), std::move(pairs));
}

WeightDistribution WeightDistribution::joint(std::vector<PairAtom> atoms) {
  std::vector<Atom> marginal;
  for (const auto& p : atoms) {
    auto it = std::find_if(marginal.begin(), marginal.end(),
                           [&](const Atom& a) { return a.value == p.forward; });
    if (it == marginal.end()) {
      marginal.push_back({p.forward, p.probability});
    } else {
      it->probability += p.probability;
    }
  }
  WeightDistribution d(Coupling::joint, {}, std::move(atoms));
  d.atoms_ = std::move(marginal);
  return d;
}

double WeightDistribution::draw_value(Rng& rng) const {
  return atoms_[pick(atom_cdf_, rng.uniform())].value;
}

std::pair<double, double> WeightDistribution::draw_pair(Rng& rng) const {
  const auto& p = pairs_[pick(pair_cdf_, rng.uniform())];
  return {p.forward, p.backward};
}

std::pair<double, double> WeightDistribution::sample(Rng& rng) const {
  switch (coupling_) {
    case Coupling::symmetric: {
      const double w = draw_value(rng);
      return {w, w};
    }
    case Coupling::independent: {
      const double a = draw_value(rng);
      const double b = draw_value(rng);
      return {a, b};
    }
    case Coupling::joint:
      break;
  }
  return draw_pair(rng);
}

WeightDistribution paper_weight_distribution(double theta) {
  if (!(theta > 0.0)) throw InputError("theta must be positive");
  constexpr double sixth = 1.0 / 6.0;
  constexpr double twelfth = 1.0 / 12.0;
  return WeightDistribution::symmetric({{0.4 * theta, twelfth},
                                        {0.5 * theta, sixth},
                                        {0.6 * theta, sixth},
                                        {0.7 * theta, sixth},
                                        {0.8 * theta, sixth},
                                        {0.9 * theta, sixth},
                                        {1.0 * theta, twelfth}});
}

WeightDistribution undirected_mds_distribution(double theta) {
  if (!(theta > 0.0)) throw InputError("theta must be positive");
  return WeightDistribution::symmetric({{theta, 1.0}});
}

WeightDistribution directed_mds_distribution(double theta) {
  if (!(theta > 0.0)) throw InputError("theta must be positive");
  return WeightDistribution::joint({{theta, 0.0, 0.5}, {0.0, theta, 0.5}});
}

WeightDistribution uniform_weight_distribution(double theta) {
  if (!(theta > 0.0)) throw InputError("theta must be positive");
  std::vector<WeightDistribution::Atom> atoms;
  for (int k = 1; k <= 10; ++k) atoms.push_back({0.1 * k * theta, 0.1});
  return WeightDistribution::symmetric(std::move(atoms));
}

WeightDistribution named_weight_distribution(std::string_view name, double theta) {
  if (name == "paper") return paper_weight_distribution(theta);
  if (name == "uniform") return uniform_weight_distribution(theta);
  if (name == "mds-undirected") return undirected_mds_distribution(theta);
  if (name == "mds-directed") return directed_mds_distribution(theta);
  throw InputError("unknown weight distribution '" + std::string(name) + "'");
}

WeightedGraph generate_er(std::size_t n, double mean_degree, const WeightDistribution& dist,
                          std::uint64_t seed, double theta) {
  if (n < 2) throw InputError("generate_er needs n >= 2");
  if (!(mean_degree >= 0.0) || mean_degree > static_cast<double>(n - 1)) {
    throw InputError("mean degree must lie in [0, n-1]");
  }
  const auto n_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const auto n_edges = static_cast<std::uint64_t>(std::llround(mean_degree * n / 2.0));
  if (n_edges > n_pairs) throw InputError("requested edge count exceeds n(n-1)/2");

  Rng rng(seed);
  WeightedGraph graph(n, theta);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(n_edges);
  while (chosen.size() < n_edges) {
    auto u = static_cast<VertexId>(rng.below(n));
    auto v = static_cast<VertexId>(rng.below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!chosen.insert((static_cast<std::uint64_t>(u) << 32) | v).second) continue;
    const auto [w_uv, w_vu] = dist.sample(rng);
    graph.add_edge(u, v, w_uv, w_vu);
  }
  return graph;
}

}  // namespace gmds
