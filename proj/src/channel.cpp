#include "bitload/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bitload/rng.hpp"

namespace bitload {

void ChannelSpec::validate() const {
  const std::size_t n = gains.size();
  if (n == 0) throw std::invalid_argument("ChannelSpec: empty");
  if (noise_vars.size() != n || power_fractions.size() != n)
    throw std::invalid_argument("ChannelSpec: mismatched lengths");
  if (!(peak_power > 0.0) || !std::isfinite(peak_power))
    throw std::invalid_argument("ChannelSpec: peak_power must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (gains[i] < 0.0 || !std::isfinite(gains[i]))
      throw std::invalid_argument("ChannelSpec: gain must be finite and >= 0");
    if (!(noise_vars[i] > 0.0) || !std::isfinite(noise_vars[i]))
      throw std::invalid_argument("ChannelSpec: noise variance must be positive");
    if (power_fractions[i] < 0.0 || power_fractions[i] > 1.0 ||
        !std::isfinite(power_fractions[i]))
      throw std::invalid_argument("ChannelSpec: power fraction outside [0, 1]");
  }
}

void SnrProfile::validate() const {
  if (snr.empty()) throw std::invalid_argument("SnrProfile: empty");
  bool any_positive = false;
  for (double s : snr) {
    if (s < 0.0 || !std::isfinite(s))
      throw std::invalid_argument("SnrProfile: snr must be finite and >= 0");
    any_positive = any_positive || s > 0.0;
  }
  if (!any_positive)
    throw std::invalid_argument("SnrProfile: all channels are dead");
}

SnrProfile snr_profile(const ChannelSpec& spec) {
  spec.validate();
  SnrProfile out;
  out.snr.resize(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i)
    out.snr[i] =
        spec.gains[i] * spec.power_fractions[i] * spec.peak_power / spec.noise_vars[i];
  return out;
}

double psdnr_db(const ChannelSpec& spec) {
  spec.validate();
  double acc = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i)
    acc += spec.gains[i] * spec.peak_power / spec.noise_vars[i];
  return to_db(acc / static_cast<double>(spec.size()));
}

SnrProfile rayleigh_profile(std::size_t n, double psdnr_db_value, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("rayleigh_profile: n must be >= 1");
  SplitMix64 rng(seed);
  SnrProfile out;
  out.snr.resize(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out.snr[i] = rng.next_unit_exponential();
    sum += out.snr[i];
  }
  // Scale so the realized sample mean matches the requested PSDNR exactly,
  // not just in expectation.
  const double scale = from_db(psdnr_db_value) * static_cast<double>(n) / sum;
  for (double& s : out.snr) s *= scale;
  return out;
}

void MultipathModel::validate() const {
  if (paths.empty()) throw std::invalid_argument("MultipathModel: no paths");
  for (const auto& p : paths) {
    if (!std::isfinite(p.gain) || !std::isfinite(p.distance_m) || p.distance_m < 0.0)
      throw std::invalid_argument("MultipathModel: bad path");
  }
  if (!(velocity > 0.0)) throw std::invalid_argument("MultipathModel: velocity must be positive");
  if (a0 < 0.0 || a1 < 0.0 || !std::isfinite(a0) || !std::isfinite(a1) || !std::isfinite(k_exp))
    throw std::invalid_argument("MultipathModel: bad attenuation parameters");
}

std::complex<double> multipath_response(const MultipathModel& model, double freq_hz) {
  if (!(freq_hz >= 0.0) || !std::isfinite(freq_hz))
    throw std::invalid_argument("multipath_response: bad frequency");
  std::complex<double> h(0.0, 0.0);
  for (const auto& p : model.paths) {
    const double atten = std::exp(-(model.a0 + model.a1 * std::pow(freq_hz, model.k_exp)) *
                                  p.distance_m);
    const double phase = -2.0 * M_PI * freq_hz * p.distance_m / model.velocity;
    h += p.gain * atten * std::polar(1.0, phase);
  }
  return h;
}

SnrProfile multipath_profile(const MultipathModel& model,
                             const std::vector<double>& freqs_hz,
                             double noise_psd, double peak_power) {
  model.validate();
  if (freqs_hz.empty()) throw std::invalid_argument("multipath_profile: empty grid");
  if (!(noise_psd > 0.0)) throw std::invalid_argument("multipath_profile: noise_psd must be positive");
  if (!(peak_power > 0.0)) throw std::invalid_argument("multipath_profile: peak_power must be positive");
  SnrProfile out;
  out.snr.resize(freqs_hz.size());
  for (std::size_t i = 0; i < freqs_hz.size(); ++i) {
    const double mag = std::abs(multipath_response(model, freqs_hz[i]));
    out.snr[i] = mag * mag * peak_power / noise_psd;
  }
  return out;
}

long long target_bitrate(const SnrProfile& profile, int r_max) {
  profile.validate();
  if (r_max < 1) throw std::invalid_argument("target_bitrate: r_max must be >= 1");
  double acc = 0.0;
  for (double s : profile.snr) {
    const double r = std::log2(1.0 + 0.5 * s);
    acc += std::min(r, static_cast<double>(r_max));
  }
  return static_cast<long long>(std::floor(acc));
}

}  // namespace bitload
