#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bitload/channel.hpp"

namespace bitload {

// Integer bit allocation. granularity is the step beta in which bits are
// assigned; cap is the per-channel maximum r_max.
struct Allocation {
  std::vector<int> bits;
  int granularity = 1;
  int cap = 0;

  long long total() const;
  bool empty() const;  // true when every channel carries 0 bits
  void validate() const;  // throws std::invalid_argument
};

// System margin in dB: the margin of the weakest loaded channel,
// 10 log10(min_{r_i > 0} snr_i / (2^{r_i} - 1)). Channels with no bits do
// not participate. Throws on an empty allocation.
double system_margin_db(const Allocation& alloc, const SnrProfile& profile);

// max_{r_i > 0} (2^{r_i} - 1) / snr_i, the quantity the margin greedy
// minimizes; 0 for an empty allocation. Kept linear (no dB) so exhaustive
// search and greedy results compare exactly.
double max_inverse_gap(const std::vector<int>& bits, const SnrProfile& profile);

// Rate-weighted mean bit error rate, sum r_i ber_i / sum r_i.
// Throws on an empty allocation.
double weighted_ber(const Allocation& alloc, const SnrProfile& profile);

// sum r_i * ber_i, the numerator above; usable on any allocation.
double total_rate_ber(const std::vector<int>& bits, const SnrProfile& profile);

// Fraction of differing channels, normalized by the larger loaded-channel
// count: |{i : x_i != y_i}| / max(|supp x|, |supp y|). Undefined (throws)
// when both allocations are empty.
double dissimilarity(const Allocation& x, const Allocation& y);

// Snapshot of how robust an allocation is on a profile.
struct RobustnessReport {
  double system_margin_db = 0.0;
  double weighted_ber = 0.0;
  std::vector<double> per_channel_gap;  // linear; +inf where r_i = 0
  std::vector<double> per_channel_ber;  // 0 where r_i = 0
  bool validity_flag = true;  // false once any loaded BER exceeds kBerModelValidityLimit
};

RobustnessReport robustness_report(const Allocation& alloc, const SnrProfile& profile);

// JSON form with dB fields suffixed _db; non-finite gaps serialize as null.
nlohmann::json to_json(const RobustnessReport& report);

}  // namespace bitload
