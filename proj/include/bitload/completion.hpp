#pragma once

#include <utility>
#include <vector>

#include "bitload/analytic.hpp"
#include "bitload/greedy.hpp"

namespace bitload {

enum class CompletionMethod { bisection, secant, greedy };

struct CompletionReport {
  CompletionMethod method = CompletionMethod::bisection;
  int iterations = 0;       // root-search steps, or beta-steps for greedy
  double alpha = 0.0;       // accepted rounding offset; NaN for greedy
  int post_fix_moves = 0;   // extra beta-steps applied after the root search
  int channels_touched = 0; // greedy only: distinct channels receiving residual bits
  long long initial_residual = 0;  // bits missing at alpha = 0, |g(0)| in bits
};

// Total integer rate produced by rounding the interior rates with offset
// alpha, in beta units: beta * sum_i floor(r_i / beta + alpha). Monotone
// non-decreasing staircase in alpha; at alpha = 0 it cannot exceed the
// interior budget and at alpha = 1 it cannot fall short of it.
long long staircase_rate(double alpha, const std::vector<double>& interior_rates,
                         int beta);

// Integer completion by root search on the staircase: find alpha where the
// rounded total meets the interior budget. If no alpha hits it exactly
// (tied fractional parts make the staircase jump over zero), take the
// largest undershooting alpha and fix the deficit by single beta-steps on
// the channels closest to their next step, lowest index first. Channels at
// the cap or at zero in the continuous solution stay there.
std::pair<Allocation, CompletionReport> complete_by_root(
    const ContinuousSolution& sol, const Constraints& c, CompletionMethod method);

enum class CompletionObjective { margin, ber };

// Integer completion by greedy: floor the interior rates to the beta grid
// and spend the missing bits with the chosen greedy metric over all
// channels still below the cap.
std::pair<Allocation, CompletionReport> complete_by_greedy(
    const ContinuousSolution& sol, const SnrProfile& profile, const Constraints& c,
    CompletionObjective objective = CompletionObjective::margin);

}  // namespace bitload
