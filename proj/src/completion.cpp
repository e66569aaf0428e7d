#include "bitload/completion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "bitload/ber.hpp"

namespace bitload {
namespace {

constexpr double kAlphaResolution = 1e-12;

struct InteriorView {
  std::vector<int> index;      // channel index
  std::vector<double> units;   // rate / beta
};

// Split a continuous solution into the fixed (0 / cap) part and the interior
// channels that still need rounding.
Allocation base_allocation(const ContinuousSolution& sol, const Constraints& c,
                           InteriorView& interior) {
  const std::size_t n = sol.rates.size();
  c.validate(n);
  if (sol.interior_rate % c.granularity != 0)
    throw std::invalid_argument("completion: interior rate not on the beta grid");

  Allocation alloc;
  alloc.bits.assign(n, 0);
  alloc.granularity = c.granularity;
  alloc.cap = c.cap;

  std::vector<bool> is_interior(n, false);
  for (int idx : sol.interior_set) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= n)
      throw std::invalid_argument("completion: interior index out of range");
    is_interior[idx] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (is_interior[i]) {
      if (!(sol.rates[i] > 0.0) || !(sol.rates[i] < c.cap))
        throw std::invalid_argument("completion: interior rate outside (0, r_max)");
      interior.index.push_back(static_cast<int>(i));
      interior.units.push_back(sol.rates[i] / c.granularity);
    } else {
      const long long fixed = std::llround(sol.rates[i]);
      if (fixed != 0 && fixed != c.cap)
        throw std::invalid_argument("completion: non-interior rate must be 0 or r_max");
      alloc.bits[i] = static_cast<int>(fixed);
    }
  }
  return alloc;
}

long long floor_sum(const std::vector<double>& units, double alpha) {
  long long s = 0;
  for (double u : units) s += static_cast<long long>(std::floor(u + alpha));
  return s;
}

}  // namespace

long long staircase_rate(double alpha, const std::vector<double>& interior_rates,
                         int beta) {
  if (beta < 1) throw std::invalid_argument("staircase_rate: beta must be >= 1");
  if (!(alpha >= 0.0) || !(alpha <= 1.0))
    throw std::invalid_argument("staircase_rate: alpha must be in [0, 1]");
  long long s = 0;
  for (double r : interior_rates) {
    if (!std::isfinite(r)) throw std::invalid_argument("staircase_rate: non-finite rate");
    s += static_cast<long long>(std::floor(r / beta + alpha));
  }
  return beta * s;
}

std::pair<Allocation, CompletionReport> complete_by_root(const ContinuousSolution& sol,
                                                         const Constraints& c,
                                                         CompletionMethod method) {
  if (method == CompletionMethod::greedy)
    throw std::invalid_argument("complete_by_root: use complete_by_greedy for the greedy method");

  InteriorView interior;
  Allocation alloc = base_allocation(sol, c, interior);
  const int beta = c.granularity;
  const long long budget_units = sol.interior_rate / beta;

  CompletionReport rep;
  rep.method = method;

  auto g = [&](double alpha) { return floor_sum(interior.units, alpha) - budget_units; };

  const long long g0 = interior.index.empty() ? -budget_units : g(0.0);
  rep.initial_residual = std::llabs(g0) * beta;
  if (!interior.index.empty() && g0 > 0)
    throw std::invalid_argument("complete_by_root: interior rates exceed their budget");
  if (interior.index.empty()) {
    if (budget_units != 0)
      throw std::invalid_argument("complete_by_root: no interior channels for the budget");
    rep.alpha = 0.0;
    return {alloc, rep};
  }

  double lo = 0.0;
  long long glo = g0;
  double alpha_hat = 0.0;
  bool exact = g0 == 0;
  if (!exact) {
    double hi = 1.0;
    long long ghi = g(1.0);
    if (ghi < 0)
      throw std::invalid_argument("complete_by_root: budget unreachable by rounding");
    if (ghi == 0) {
      exact = true;
      alpha_hat = 1.0;
    }
    while (!exact && hi - lo > kAlphaResolution) {
      double mid;
      if (method == CompletionMethod::secant) {
        mid = (hi * static_cast<double>(glo) - lo * static_cast<double>(ghi)) /
              static_cast<double>(glo - ghi);
        if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
      } else {
        mid = 0.5 * (lo + hi);
      }
      const long long gm = g(mid);
      ++rep.iterations;
      if (gm == 0) {
        exact = true;
        alpha_hat = mid;
        break;
      }
      if (gm < 0) {
        lo = mid;
        glo = gm;
      } else {
        hi = mid;
        ghi = gm;
      }
    }
  }

  if (!exact) alpha_hat = lo;  // tied fractional parts: land short, then fix up
  rep.alpha = alpha_hat;

  std::vector<long long> level(interior.index.size());
  for (std::size_t k = 0; k < interior.index.size(); ++k)
    level[k] = static_cast<long long>(std::floor(interior.units[k] + alpha_hat));

  if (!exact) {
    long long deficit = budget_units - std::accumulate(level.begin(), level.end(), 0LL);
    std::vector<std::size_t> order(interior.index.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const double fa = interior.units[a] + alpha_hat - static_cast<double>(level[a]);
      const double fb = interior.units[b] + alpha_hat - static_cast<double>(level[b]);
      return fa > fb;
    });
    const long long cap_units = c.cap / beta;
    for (std::size_t k : order) {
      if (deficit == 0) break;
      if (level[k] >= cap_units) continue;
      ++level[k];
      --deficit;
      ++rep.post_fix_moves;
    }
    if (deficit != 0)
      throw std::runtime_error("complete_by_root: could not place the residual bits");
  }

  for (std::size_t k = 0; k < interior.index.size(); ++k)
    alloc.bits[interior.index[k]] = static_cast<int>(level[k] * beta);

  if (alloc.total() != c.target_rate)
    throw std::runtime_error("complete_by_root: completed total misses the target");
  alloc.validate();
  return {alloc, rep};
}

std::pair<Allocation, CompletionReport> complete_by_greedy(const ContinuousSolution& sol,
                                                           const SnrProfile& profile,
                                                           const Constraints& c,
                                                           CompletionObjective objective) {
  if (sol.rates.size() != profile.size())
    throw std::invalid_argument("complete_by_greedy: profile and solution lengths differ");
  InteriorView interior;
  Allocation alloc = base_allocation(sol, c, interior);
  const int beta = c.granularity;
  for (std::size_t k = 0; k < interior.index.size(); ++k)
    alloc.bits[interior.index[k]] =
        static_cast<int>(static_cast<long long>(std::floor(interior.units[k])) * beta);

  CompletionReport rep;
  rep.method = CompletionMethod::greedy;
  rep.alpha = std::numeric_limits<double>::quiet_NaN();
  const long long residual = c.target_rate - alloc.total();
  if (residual < 0)
    throw std::invalid_argument("complete_by_greedy: floors already exceed the target");
  rep.initial_residual = residual;

  const std::size_t n = profile.size();
  auto margin_cost = [&](std::size_t i) {
    return inverse_gap(alloc.bits[i] + beta, profile.snr[i]);
  };
  auto ber_cost = [&](std::size_t i) {
    const double after = log_rate_weighted_ber(alloc.bits[i] + beta, profile.snr[i]);
    if (alloc.bits[i] == 0) return after;
    const double before = log_rate_weighted_ber(alloc.bits[i], profile.snr[i]);
    return after + std::log1p(-std::exp(before - after));
  };
  auto cost = [&](std::size_t i) {
    if (alloc.bits[i] + beta > c.cap) return std::numeric_limits<double>::infinity();
    return objective == CompletionObjective::margin ? margin_cost(i) : ber_cost(i);
  };

  std::vector<double> cand(n);
  for (std::size_t i = 0; i < n; ++i) cand[i] = cost(i);
  std::vector<bool> touched(n, false);
  for (long long step = 0; step < residual / beta; ++step) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (cand[i] < cand[best]) best = i;
    alloc.bits[best] += beta;
    touched[best] = true;
    cand[best] = cost(best);
    ++rep.iterations;
  }
  rep.channels_touched = static_cast<int>(std::count(touched.begin(), touched.end(), true));

  if (alloc.total() != c.target_rate)
    throw std::runtime_error("complete_by_greedy: completed total misses the target");
  alloc.validate();
  return {alloc, rep};
}

}  // namespace bitload
