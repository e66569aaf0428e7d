#include "bitload/greedy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bitload/ber.hpp"

namespace bitload {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lowest cost among channels that can still accept beta more bits; lowest
// index wins ties, so scan ascending with strict comparisons. Restricting
// the scan to fillable channels keeps a capped channel out of the running
// even when every open candidate costs +inf (a dead channel's add cost),
// which a sentinel value alone could not guarantee. A fillable channel
// always exists while fewer than target_rate <= n * cap bits are placed.
std::size_t argmin_fillable(const std::vector<double>& cost, const std::vector<int>& bits,
                            int beta, int cap) {
  std::size_t best = cost.size();
  for (std::size_t i = 0; i < cost.size(); ++i) {
    if (bits[i] + beta > cap) continue;
    if (best == cost.size() || cost[i] < cost[best]) best = i;
  }
  return best;
}

std::size_t argmax(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

Allocation make_allocation(std::size_t n, const Constraints& c, int fill) {
  Allocation a;
  a.bits.assign(n, fill);
  a.granularity = c.granularity;
  a.cap = c.cap;
  return a;
}

}  // namespace

void Constraints::validate(std::size_t n_channels) const {
  if (n_channels == 0) throw std::invalid_argument("Constraints: no channels");
  if (granularity < 1) throw std::invalid_argument("Constraints: granularity must be >= 1");
  if (cap < granularity || cap > 62)
    throw std::invalid_argument("Constraints: cap must be in [granularity, 62]");
  if (cap % granularity != 0)
    throw std::invalid_argument("Constraints: granularity must divide cap");
  if (target_rate < 0 || target_rate > static_cast<long long>(n_channels) * cap)
    throw std::invalid_argument("Constraints: target rate outside [0, n * cap]");
  if (target_rate % granularity != 0)
    throw std::invalid_argument("Constraints: granularity must divide target rate");
}

GreedyResult greedy_margin(const SnrProfile& profile, const Constraints& c,
                           GreedyDirection direction) {
  profile.validate();
  c.validate(profile.size());
  const std::size_t n = profile.size();
  const int beta = c.granularity;

  GreedyResult out;
  if (direction == GreedyDirection::add) {
    out.alloc = make_allocation(n, c, 0);
    // cost[i]: inverse gap after granting the next beta bits; +inf once capped.
    std::vector<double> cost(n);
    for (std::size_t i = 0; i < n; ++i) cost[i] = inverse_gap(beta, profile.snr[i]);
    const long long steps = c.target_rate / beta;
    for (long long s = 0; s < steps; ++s) {
      const std::size_t i = argmin_fillable(cost, out.alloc.bits, beta, c.cap);
      out.trace.chosen_channel.push_back(static_cast<int>(i));
      out.trace.metric_value.push_back(cost[i]);
      out.alloc.bits[i] += beta;
      cost[i] = out.alloc.bits[i] + beta > c.cap
                    ? kInf
                    : inverse_gap(out.alloc.bits[i] + beta, profile.snr[i]);
    }
  } else {
    out.alloc = make_allocation(n, c, c.cap);
    // cost[i]: inverse gap at the current level; -inf once stripped to zero.
    std::vector<double> cost(n);
    for (std::size_t i = 0; i < n; ++i) cost[i] = inverse_gap(c.cap, profile.snr[i]);
    const long long steps = (static_cast<long long>(n) * c.cap - c.target_rate) / beta;
    for (long long s = 0; s < steps; ++s) {
      const std::size_t i = argmax(cost);
      out.trace.chosen_channel.push_back(static_cast<int>(i));
      out.trace.metric_value.push_back(cost[i]);
      out.alloc.bits[i] -= beta;
      cost[i] = out.alloc.bits[i] == 0
                    ? -kInf
                    : inverse_gap(out.alloc.bits[i], profile.snr[i]);
    }
  }
  return out;
}

BerGreedyResult greedy_ber(const SnrProfile& profile, const Constraints& c,
                           BerMetric metric) {
  profile.validate();
  c.validate(profile.size());
  const std::size_t n = profile.size();
  const int beta = c.granularity;

  BerGreedyResult out;
  out.alloc = make_allocation(n, c, 0);

  // Candidate keys live in the log domain. r * ber(r, snr) is strictly
  // increasing in r, so the delta key's log1p argument stays in (-1, 0).
  auto key_for = [&](int r, double snr) {
    const double after = log_rate_weighted_ber(r + beta, snr);
    if (metric == BerMetric::simplified || r == 0) return after;
    const double before = log_rate_weighted_ber(r, snr);
    return after + std::log1p(-std::exp(before - after));
  };

  std::vector<double> key(n);
  for (std::size_t i = 0; i < n; ++i) key[i] = key_for(0, profile.snr[i]);
  const long long steps = c.target_rate / beta;
  for (long long s = 0; s < steps; ++s) {
    const std::size_t i = argmin_fillable(key, out.alloc.bits, beta, c.cap);
    out.trace.chosen_channel.push_back(static_cast<int>(i));
    out.trace.metric_value.push_back(std::exp(key[i]));
    out.alloc.bits[i] += beta;
    key[i] = out.alloc.bits[i] + beta > c.cap ? kInf
                                              : key_for(out.alloc.bits[i], profile.snr[i]);
  }

  out.convex_certified = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (out.alloc.bits[i] > 0 &&
        !in_convex_domain(out.alloc.bits[i], profile.snr[i])) {
      out.convex_certified = false;
      break;
    }
  }
  return out;
}

Allocation greedy_min_peak_power(const std::vector<double>& gap_targets,
                                 const ChannelSpec& spec, const Constraints& c) {
  const std::size_t n = spec.gains.size();
  if (n == 0 || spec.noise_vars.size() != n)
    throw std::invalid_argument("greedy_min_peak_power: bad channel spec");
  if (!(spec.peak_power > 0.0))
    throw std::invalid_argument("greedy_min_peak_power: peak power must be positive");
  if (gap_targets.size() != n)
    throw std::invalid_argument("greedy_min_peak_power: gap target count mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(gap_targets[i] > 0.0) || !std::isfinite(gap_targets[i]))
      throw std::invalid_argument("greedy_min_peak_power: gap targets must be positive");
    if (spec.gains[i] < 0.0 || !(spec.noise_vars[i] > 0.0))
      throw std::invalid_argument("greedy_min_peak_power: bad gain or noise entry");
  }
  c.validate(n);
  const int beta = c.granularity;

  // Power needed by channel i to carry r bits at gap gamma_i. Equals
  // gamma_i / snr' times the margin-greedy cost, so with a uniform gap both
  // greedies take identical step sequences.
  auto power_at = [&](std::size_t i, int r) {
    return static_cast<double>((1LL << r) - 1) * gap_targets[i] * spec.noise_vars[i] /
           (spec.gains[i] * spec.peak_power);
  };

  Allocation alloc = make_allocation(n, c, 0);
  std::vector<double> cost(n);
  for (std::size_t i = 0; i < n; ++i) cost[i] = power_at(i, beta);
  const long long steps = c.target_rate / beta;
  for (long long s = 0; s < steps; ++s) {
    const std::size_t i = argmin_fillable(cost, alloc.bits, beta, c.cap);
    alloc.bits[i] += beta;
    cost[i] = alloc.bits[i] + beta > c.cap ? kInf : power_at(i, alloc.bits[i] + beta);
  }
  return alloc;
}

}  // namespace bitload
