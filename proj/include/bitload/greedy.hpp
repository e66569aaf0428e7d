#pragma once

#include <cstddef>
#include <vector>

#include "bitload/channel.hpp"
#include "bitload/metrics.hpp"

namespace bitload {

// Loading constraints: total bit budget R, assignment granularity beta and
// per-channel cap r_max. beta must divide both R and r_max.
struct Constraints {
  long long target_rate = 0;
  int granularity = 1;
  int cap = 1;

  void validate(std::size_t n_channels) const;  // throws std::invalid_argument
};

// One entry per greedy step: which channel moved and the metric value that
// selected it.
struct GreedyTrace {
  std::vector<int> chosen_channel;
  std::vector<double> metric_value;
};

enum class GreedyDirection { add, remove };

struct GreedyResult {
  Allocation alloc;
  GreedyTrace trace;
};

// Margin-maximizing greedy. In the add direction, each step gives beta bits
// to the channel minimizing the post-move inverse gap (2^(r+beta) - 1)/snr;
// in the remove direction it starts from the all-cap allocation and strips
// beta bits from the channel with the worst current inverse gap. Channels at
// the cap (resp. at zero) leave the candidate set. Ties break on the lowest
// channel index. Both directions reach the same allocation.
GreedyResult greedy_margin(const SnrProfile& profile, const Constraints& c,
                           GreedyDirection direction = GreedyDirection::add);

enum class BerMetric {
  simplified,  // (r + beta) * ber(r + beta)
  delta        // (r + beta) * ber(r + beta) - r * ber(r)
};

struct BerGreedyResult {
  Allocation alloc;
  GreedyTrace trace;
  // True when every loaded channel of the result operates where r * ber(r)
  // is convex in r, the condition under which the delta greedy is optimal.
  bool convex_certified = false;
};

// BER-minimizing greedy (add direction). Metric comparisons run in the log
// domain so allocation order survives at SNRs where the linear BER
// underflows; the recorded trace value is the linear metric, which may be 0
// there.
BerGreedyResult greedy_ber(const SnrProfile& profile, const Constraints& c,
                           BerMetric metric = BerMetric::delta);

// Peak-power-minimizing greedy: each step gives beta bits to the channel
// where carrying them at its gap target gamma_i costs the least extra power
// (2^(r+beta) - 1) gamma_i noise_var_i / (|h_i|^2 P). power_fractions of the
// spec are outputs of this problem, not inputs, and are ignored.
Allocation greedy_min_peak_power(const std::vector<double>& gap_targets,
                                 const ChannelSpec& spec, const Constraints& c);

}  // namespace bitload
