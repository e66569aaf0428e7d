#pragma once

#include <cstdint>

#include "bitload/channel.hpp"
#include "bitload/greedy.hpp"
#include "bitload/rng.hpp"

namespace testsupport {

// SNR values drawn log-uniformly from [lo_db, hi_db].
inline bitload::SnrProfile random_profile(bitload::SplitMix64& rng, std::size_t n,
                                          double lo_db, double hi_db) {
  bitload::SnrProfile out;
  out.snr.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double db = lo_db + (hi_db - lo_db) * rng.next_open01();
    out.snr.push_back(bitload::from_db(db));
  }
  return out;
}

// Feasible rate drawn uniformly from the multiples of beta in [beta, n*cap].
inline bitload::Constraints random_constraints(bitload::SplitMix64& rng, std::size_t n,
                                               int beta, int cap) {
  const long long slots = static_cast<long long>(n) * (cap / beta);
  const long long pick = 1 + static_cast<long long>(rng.next_u64() % static_cast<std::uint64_t>(slots));
  bitload::Constraints c;
  c.granularity = beta;
  c.cap = cap;
  c.target_rate = pick * beta;
  return c;
}

}  // namespace testsupport
