#include "gmds/threshold_sum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gmds/errors.hpp"
#include "gmds/graph.hpp"

namespace gmds {

int quantize_weight(double weight, double grid) {
  return static_cast<int>(std::llround(weight / grid));
}

int quantize_threshold(double theta_res, double grid) {
  if (theta_res <= kThresholdSlack) return 0;
  return std::max(1, static_cast<int>(std::ceil(theta_res / grid - 1e-9)));
}

void CappedSumDp::reset(int cap) {
  cap_ = std::max(cap, 0);
  table_.assign(static_cast<std::size_t>(cap_) + 1, 0.0);
  table_[0] = 1.0;
}

void CappedSumDp::add(double occupied, double empty, int units) {
  if (units <= 0 || cap_ == 0) {
    const double both = occupied + empty;
    for (auto& x : table_) x *= both;
    return;
  }
  // Descending so every target slot (>= s) already holds its new value.
  table_[cap_] *= occupied + empty;
  for (int s = cap_ - 1; s >= 0; --s) {
    const double v = table_[s];
    if (v == 0.0) continue;
    table_[s] = v * empty;
    table_[std::min(s + units, cap_)] += v * occupied;
  }
}

double CappedSumDp::at_least(int units) const {
  const int from = std::clamp(units, 0, cap_);
  return std::accumulate(table_.begin() + from, table_.end(), 0.0);
}

double CappedSumDp::total() const { return at_least(0); }

double threshold_exceed_sum(std::span<const Contributor> contributors, double theta_res,
                            double grid) {
  if (!(grid > 0.0)) throw InputError("grid must be positive");
  if (theta_res <= kThresholdSlack) {
    double prod = 1.0;
    for (const auto& c : contributors) prod *= c.occupied + c.empty;
    return prod;
  }
  CappedSumDp dp;
  dp.reset(quantize_threshold(theta_res, grid));
  for (const auto& c : contributors) dp.add(c.occupied, c.empty, quantize_weight(c.weight, grid));
  return dp.at_least(dp.cap());
}

}  // namespace gmds
