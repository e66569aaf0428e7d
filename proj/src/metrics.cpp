#include "bitload/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bitload/ber.hpp"

namespace bitload {
namespace {

void check_lengths(const std::vector<int>& bits, const SnrProfile& profile) {
  if (bits.size() != profile.size())
    throw std::invalid_argument("allocation and profile lengths differ");
}

std::size_t support_size(const std::vector<int>& bits) {
  std::size_t c = 0;
  for (int b : bits) c += b > 0;
  return c;
}

}  // namespace

long long Allocation::total() const {
  long long t = 0;
  for (int b : bits) t += b;
  return t;
}

bool Allocation::empty() const { return support_size(bits) == 0; }

void Allocation::validate() const {
  if (bits.empty()) throw std::invalid_argument("Allocation: no channels");
  if (granularity < 1) throw std::invalid_argument("Allocation: granularity must be >= 1");
  if (cap < granularity || cap % granularity != 0)
    throw std::invalid_argument("Allocation: cap must be a positive multiple of granularity");
  for (int b : bits) {
    if (b < 0 || b > cap || b % granularity != 0)
      throw std::invalid_argument("Allocation: entry outside {0, beta, ..., cap}");
  }
}

double system_margin_db(const Allocation& alloc, const SnrProfile& profile) {
  check_lengths(alloc.bits, profile);
  double min_gap = std::numeric_limits<double>::infinity();
  bool loaded = false;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (alloc.bits[i] <= 0) continue;
    loaded = true;
    min_gap = std::min(min_gap, snr_gap(alloc.bits[i], profile.snr[i]));
  }
  if (!loaded) throw std::invalid_argument("system_margin_db: empty allocation");
  return to_db(min_gap);
}

double max_inverse_gap(const std::vector<int>& bits, const SnrProfile& profile) {
  check_lengths(bits, profile);
  double worst = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (bits[i] <= 0) continue;
    worst = std::max(worst, inverse_gap(bits[i], profile.snr[i]));
  }
  return worst;
}

double weighted_ber(const Allocation& alloc, const SnrProfile& profile) {
  check_lengths(alloc.bits, profile);
  const long long total = alloc.total();
  if (total <= 0) throw std::invalid_argument("weighted_ber: empty allocation");
  return total_rate_ber(alloc.bits, profile) / static_cast<double>(total);
}

double total_rate_ber(const std::vector<int>& bits, const SnrProfile& profile) {
  check_lengths(bits, profile);
  double acc = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i)
    acc += rate_weighted_ber(bits[i], profile.snr[i]);
  return acc;
}

double dissimilarity(const Allocation& x, const Allocation& y) {
  if (x.bits.size() != y.bits.size())
    throw std::invalid_argument("dissimilarity: allocation lengths differ");
  const std::size_t denom = std::max(support_size(x.bits), support_size(y.bits));
  if (denom == 0)
    throw std::invalid_argument("dissimilarity: undefined for two empty allocations");
  std::size_t diff = 0;
  for (std::size_t i = 0; i < x.bits.size(); ++i) diff += x.bits[i] != y.bits[i];
  return static_cast<double>(diff) / static_cast<double>(denom);
}

RobustnessReport robustness_report(const Allocation& alloc, const SnrProfile& profile) {
  check_lengths(alloc.bits, profile);
  RobustnessReport rep;
  rep.system_margin_db = system_margin_db(alloc, profile);
  rep.weighted_ber = weighted_ber(alloc, profile);
  rep.per_channel_gap.resize(profile.size());
  rep.per_channel_ber.resize(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (alloc.bits[i] > 0) {
      rep.per_channel_gap[i] = snr_gap(alloc.bits[i], profile.snr[i]);
      rep.per_channel_ber[i] = qam_ber(alloc.bits[i], profile.snr[i]);
      if (rep.per_channel_ber[i] > kBerModelValidityLimit) rep.validity_flag = false;
    } else {
      rep.per_channel_gap[i] = std::numeric_limits<double>::infinity();
      rep.per_channel_ber[i] = 0.0;
    }
  }
  return rep;
}

nlohmann::json to_json(const RobustnessReport& report) {
  nlohmann::json gaps = nlohmann::json::array();
  for (double g : report.per_channel_gap) {
    if (std::isfinite(g))
      gaps.push_back(g);
    else
      gaps.push_back(nullptr);
  }
  return nlohmann::json{{"system_margin_db", report.system_margin_db},
                        {"weighted_ber", report.weighted_ber},
                        {"per_channel_gap", gaps},
                        {"per_channel_ber", report.per_channel_ber},
                        {"validity_flag", report.validity_flag}};
}

}  // namespace bitload
