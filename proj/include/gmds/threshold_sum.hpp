#pragma once

#include <span>
#include <vector>

namespace gmds {

struct Contributor {
  double occupied;  // factor when the contributor is occupied
  double empty;     // factor when it is empty
  double weight;    // weight it adds to the sum when occupied
};

/// Sum over all 2^K occupation patterns of the contributors of
///   Theta(sum_k c_k w_k - theta_res) * prod_k (c_k ? occupied_k : empty_k)
/// with Theta(0) = 1. Evaluated by a dynamic program over weight sums
/// quantized to `grid` and capped at theta_res; exact when every weight and
/// theta_res is a multiple of grid. Non-positive theta_res returns
/// prod_k (occupied_k + empty_k).
double threshold_exceed_sum(std::span<const Contributor> contributors, double theta_res,
                            double grid);

/// Weight rounded to the nearest multiple of grid, in grid units.
int quantize_weight(double weight, double grid);

/// Number of grid units a sum must reach to meet threshold; 0 means the
/// threshold is already met by the empty sum.
int quantize_threshold(double theta_res, double grid);

/// Distribution of the capped weight sum: slot s < cap holds the total
/// factor of patterns summing to exactly s units, slot cap holds everything
/// at or above cap.
class CappedSumDp {
 public:
  void reset(int cap);
  void add(double occupied, double empty, int units);

  int cap() const noexcept { return cap_; }
  /// Total factor of patterns whose sum reaches `units` (<= 0: all).
  double at_least(int units) const;
  double total() const;

 private:
  int cap_ = 0;
  std::vector<double> table_;
};

}  // namespace gmds
