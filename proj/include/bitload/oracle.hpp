#pragma once

#include <vector>

#include "bitload/channel.hpp"
#include "bitload/greedy.hpp"

namespace bitload {

// Result of a full enumeration over feasible allocations. argmins keeps
// every allocation tying the optimum so greedy tie-break choices can be
// checked for membership rather than equality.
struct OracleResult {
  double best_value = 0.0;
  std::vector<std::vector<int>> argmins;
  long long explored = 0;
};

// Enumerate all allocations with sum R, entries in {0, beta, ..., r_max},
// minimizing max_i (2^{r_i} - 1)/snr_i. Throws std::runtime_error once the
// number of visited states would exceed budget.
OracleResult exhaustive_margin(const SnrProfile& profile, const Constraints& c,
                               long long budget = 10'000'000);

// Same enumeration minimizing sum_i r_i * ber_i (equivalently the weighted
// mean BER at fixed total rate). Requires R >= beta.
OracleResult exhaustive_ber(const SnrProfile& profile, const Constraints& c,
                            long long budget = 10'000'000);

// Same enumeration minimizing max_i (2^{r_i} - 1) gamma_i noise_var_i
// / (|h_i|^2 P); the reference for greedy_min_peak_power.
OracleResult exhaustive_peak_power(const std::vector<double>& gap_targets,
                                   const ChannelSpec& spec, const Constraints& c,
                                   long long budget = 10'000'000);

}  // namespace bitload
