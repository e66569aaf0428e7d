#include "bitload/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bitload {

std::vector<double> asymptotic_rates(const SnrProfile& profile, double target_rate) {
  profile.validate();
  const std::size_t n = profile.size();
  std::vector<long double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(profile.snr[i] > 0.0))
      throw std::invalid_argument("asymptotic_rates: requires every snr > 0");
    d[i] = std::log2(static_cast<long double>(profile.snr[i]));
  }
  // Two-pass centering: the second pass cancels the rounding of the first
  // mean, so identical-SNR profiles come out with offsets of exactly 0.
  long double mean = 0.0L;
  for (long double v : d) mean += v;
  mean /= static_cast<long double>(n);
  long double mean2 = 0.0L;
  for (long double& v : d) {
    v -= mean;
    mean2 += v;
  }
  mean2 /= static_cast<long double>(n);
  const long double base = static_cast<long double>(target_rate) / n;
  std::vector<double> rates(n);
  for (std::size_t i = 0; i < n; ++i)
    rates[i] = static_cast<double>(base + (d[i] - mean2));
  return rates;
}

std::vector<double> clipped_rates(double lambda, const SnrProfile& profile, int r_max) {
  profile.validate();
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("clipped_rates: lambda must be positive");
  if (r_max < 1) throw std::invalid_argument("clipped_rates: r_max must be >= 1");
  const double l2lambda = std::log2(lambda);
  std::vector<double> rates(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile.snr[i] <= 0.0) {
      rates[i] = 0.0;
      continue;
    }
    const double r = l2lambda + std::log2(profile.snr[i]);
    rates[i] = std::clamp(r, 0.0, static_cast<double>(r_max));
  }
  return rates;
}

ContinuousSolution solve_continuous(const SnrProfile& profile, const Constraints& c,
                                    SecantAxis axis, int max_iter) {
  profile.validate();
  c.validate(profile.size());
  const std::size_t n = profile.size();
  const long long R = c.target_rate;
  const int r_max = c.cap;
  if (R <= 0 || R >= static_cast<long long>(n) * r_max)
    throw std::invalid_argument("solve_continuous: requires 0 < R < n * r_max");

  double max_snr = 0.0;
  std::vector<double> live;
  live.reserve(profile.size());
  for (double s : profile.snr) {
    max_snr = std::max(max_snr, s);
    if (s > 0.0) live.push_back(s);
  }
  if (static_cast<long long>(live.size()) * r_max < R)
    throw std::invalid_argument("solve_continuous: dead channels make the rate unreachable");

  // Bracket the water level so that f(lam1) <= 0 <= f(lam2) by construction,
  // with both endpoints inside the active region of the rate curve rather
  // than on its flat shelves:
  //  - at lam1 every live channel carries at most R/live rate, so the total
  //    cannot exceed R;
  //  - at lam2 the strongest ceil(R/r_max) channels already sit at the cap,
  //    so the total is at least R.
  // Endpoints this close to the final water level keep the secant iteration
  // count flat across load levels; the wider 1/max_snr .. 2^r_max/min_snr
  // bracket satisfies the same sign conditions but parks both endpoints on
  // shelves, and the stale-ordinate chord then creeps at high loads.
  const auto saturated = static_cast<std::size_t>(
      std::min<long long>(static_cast<long long>(live.size()), (R + r_max - 1) / r_max));
  std::nth_element(live.begin(), live.begin() + (saturated - 1), live.end(),
                   std::greater<double>());
  const double lam1 =
      std::exp2(static_cast<double>(R) / static_cast<double>(live.size())) / max_snr;
  const double lam2 = std::exp2(r_max) / live[saturated - 1];

  auto f = [&](double lambda) {
    const double l2lambda = std::log2(lambda);
    double total = 0.0;
    for (double s : profile.snr) {
      if (s <= 0.0) continue;
      total += std::clamp(l2lambda + std::log2(s), 0.0, static_cast<double>(r_max));
    }
    return total - static_cast<double>(R);
  };

  const AxisShape shape = axis == SecantAxis::log2 ? log2_shape() : identity_shape();
  const RootResult root = generalized_secant(f, shape, lam1, lam2,
                                             /*delta_y_tol=*/0.0, max_iter,
                                             /*abs_y_tol=*/1.0);

  ContinuousSolution sol;
  sol.lambda = root.root;
  sol.iterations = root.iterations;
  sol.fallbacks = root.fallbacks;
  sol.rates = clipped_rates(sol.lambda, profile, r_max);

  // Classify from the accepted lambda, then restore the exact equal-margin
  // rates on the interior. Rates escaping the open box drop out of the
  // interior and the refinement repeats on the smaller set.
  std::vector<int> interior;
  long long caps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sol.rates[i] >= static_cast<double>(r_max)) {
      sol.rates[i] = static_cast<double>(r_max);
      ++caps;
    } else if (sol.rates[i] > 0.0) {
      interior.push_back(static_cast<int>(i));
    } else {
      sol.rates[i] = 0.0;
    }
  }

  for (std::size_t pass = 0; pass <= n; ++pass) {
    const long long interior_budget = R - caps * r_max;
    if (interior.empty()) {
      if (interior_budget != 0)
        throw std::runtime_error("solve_continuous: interior set collapsed");
      break;
    }
    SnrProfile sub;
    sub.snr.reserve(interior.size());
    for (int idx : interior) sub.snr.push_back(profile.snr[idx]);
    const std::vector<double> refined =
        asymptotic_rates(sub, static_cast<double>(interior_budget));

    std::vector<int> still_interior;
    bool moved = false;
    for (std::size_t k = 0; k < interior.size(); ++k) {
      const int idx = interior[k];
      if (refined[k] >= static_cast<double>(r_max)) {
        sol.rates[idx] = static_cast<double>(r_max);
        ++caps;
        moved = true;
      } else if (refined[k] <= 0.0) {
        sol.rates[idx] = 0.0;
        moved = true;
      } else {
        sol.rates[idx] = refined[k];
        still_interior.push_back(idx);
      }
    }
    interior.swap(still_interior);
    if (!moved) break;
  }

  sol.interior_set = interior;
  sol.interior_rate = R - caps * r_max;
  return sol;
}

}  // namespace bitload
