#pragma once

#include <vector>

#include "bitload/channel.hpp"
#include "bitload/greedy.hpp"
#include "bitload/rootfind.hpp"

namespace bitload {

// Continuous relaxation of the loading problem.
struct ContinuousSolution {
  std::vector<double> rates;
  double lambda = 0.0;            // dual variable at the accepted stopping point
  std::vector<int> interior_set;  // indices with 0 < rate < r_max, ascending
  long long interior_rate = 0;    // R' = R - (#channels at cap) * r_max
  int iterations = 0;             // root-search iterations
  int fallbacks = 0;              // bisection fallbacks inside the root search
};

// Equal-margin rates without box constraints:
//   r_i = R/n + (1/n) sum_j log2(snr_i / snr_j).
// Sums to R by telescoping; entries may be negative or exceed any cap.
// Requires every snr > 0.
std::vector<double> asymptotic_rates(const SnrProfile& profile, double target_rate);

// Rates at a fixed dual variable: r_i = clamp(log2(lambda snr_i), 0, r_max),
// with dead channels pinned at 0.
std::vector<double> clipped_rates(double lambda, const SnrProfile& profile, int r_max);

enum class SecantAxis { log2, identity };

// Continuous solver: bracket lambda in [1/max snr, 2^r_max/min positive snr],
// run the generalized secant on f(lambda) = sum clipped_rates - R until
// |f| < 1, freeze the interior/cap/zero classification, then restore the
// exact equal-margin solution on the interior set with budget R'. A refined
// rate escaping (0, r_max) is re-clipped and the refinement repeated, at
// most n times. Requires 0 < R < n * r_max.
ContinuousSolution solve_continuous(const SnrProfile& profile, const Constraints& c,
                                    SecantAxis axis = SecantAxis::log2,
                                    int max_iter = 1000);

}  // namespace bitload
