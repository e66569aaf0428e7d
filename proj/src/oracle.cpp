#include "bitload/oracle.hpp"

#include <functional>
#include <stdexcept>

#include "bitload/ber.hpp"
#include "bitload/metrics.hpp"

namespace bitload {
namespace {

// Depth-first enumeration of compositions of R into n parts from
// {0, beta, ..., cap}, pruned by what the remaining channels can still carry.
OracleResult enumerate(std::size_t n, const Constraints& c, long long budget,
                       const std::function<double(const std::vector<int>&)>& objective) {
  c.validate(n);
  OracleResult out;
  bool have_best = false;
  std::vector<int> bits(n, 0);

  std::function<void(std::size_t, long long)> visit = [&](std::size_t i, long long left) {
    if (i == n) {
      if (left != 0) return;
      if (++out.explored > budget)
        throw std::runtime_error("exhaustive search: enumeration budget exceeded");
      const double value = objective(bits);
      if (!have_best || value < out.best_value) {
        have_best = true;
        out.best_value = value;
        out.argmins.assign(1, bits);
      } else if (value == out.best_value) {
        out.argmins.push_back(bits);
      }
      return;
    }
    const long long tail_capacity = static_cast<long long>(n - i - 1) * c.cap;
    for (int r = 0; r <= c.cap; r += c.granularity) {
      if (r > left) break;
      if (left - r > tail_capacity) continue;
      bits[i] = r;
      visit(i + 1, left - r);
    }
    bits[i] = 0;
  };

  visit(0, c.target_rate);
  return out;
}

}  // namespace

OracleResult exhaustive_margin(const SnrProfile& profile, const Constraints& c,
                               long long budget) {
  profile.validate();
  return enumerate(profile.size(), c, budget, [&](const std::vector<int>& bits) {
    return max_inverse_gap(bits, profile);
  });
}

OracleResult exhaustive_ber(const SnrProfile& profile, const Constraints& c,
                            long long budget) {
  profile.validate();
  if (c.target_rate < c.granularity)
    throw std::invalid_argument("exhaustive_ber: needs a non-empty allocation");
  return enumerate(profile.size(), c, budget, [&](const std::vector<int>& bits) {
    return total_rate_ber(bits, profile);
  });
}

OracleResult exhaustive_peak_power(const std::vector<double>& gap_targets,
                                   const ChannelSpec& spec, const Constraints& c,
                                   long long budget) {
  const std::size_t n = spec.gains.size();
  if (gap_targets.size() != n || spec.noise_vars.size() != n)
    throw std::invalid_argument("exhaustive_peak_power: mismatched lengths");
  return enumerate(n, c, budget, [&](const std::vector<int>& bits) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (bits[i] <= 0) continue;
      const double p = static_cast<double>((1LL << bits[i]) - 1) * gap_targets[i] *
                       spec.noise_vars[i] / (spec.gains[i] * spec.peak_power);
      if (p > worst) worst = p;
    }
    return worst;
  });
}

}  // namespace bitload
