#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bitload {

inline double to_db(double linear) {
  return 10.0 * std::log10(linear);
}

inline double from_db(double db) {
  return std::pow(10.0, db / 10.0);
}

// Physical description of n parallel Gaussian channels sharing one peak
// power budget. gains holds |h_i|^2, noise_vars the per-channel noise
// variance, power_fractions the per-channel share p_i of the peak power P.
struct ChannelSpec {
  std::vector<double> gains;
  std::vector<double> noise_vars;
  double peak_power = 1.0;
  std::vector<double> power_fractions;

  std::size_t size() const { return gains.size(); }
  void validate() const;  // throws std::invalid_argument
};

// Per-channel signal-to-noise ratios, the only channel state the allocation
// algorithms consume.
struct SnrProfile {
  std::vector<double> snr;

  std::size_t size() const { return snr.size(); }
  void validate() const;  // throws std::invalid_argument
};

// snr_i = |h_i|^2 p_i P / noise_var_i.
SnrProfile snr_profile(const ChannelSpec& spec);

// Power-spectral-density-to-noise ratio in dB: the power fractions are
// deliberately ignored, so this measures the link budget, not the loading.
double psdnr_db(const ChannelSpec& spec);

// Rayleigh-fading profile: unit-mean exponential gains scaled so that the
// realized sample mean of the SNRs equals the requested PSDNR exactly.
// Deterministic for a fixed seed (see kRngAlgorithm).
SnrProfile rayleigh_profile(std::size_t n, double psdnr_db, std::uint64_t seed);

// One propagation path of a multipath frequency response.
struct MultipathPath {
  double gain = 0.0;      // real weight, sign carries the reflection phase
  double distance_m = 0.0;
};

// H(f) = sum_k gain_k * exp(-(a0 + a1 f^k_exp) d_k) * exp(-j 2 pi f d_k / v).
// The attenuation parameters are global; per-path values differ only through
// the distance.
struct MultipathModel {
  std::vector<MultipathPath> paths;
  double a0 = 0.0;        // 1/m
  double a1 = 0.0;        // s^k_exp / m
  double k_exp = 1.0;
  double velocity = 1.5e8;  // m/s

  void validate() const;
};

std::complex<double> multipath_response(const MultipathModel& model, double freq_hz);

// snr_i = |H(f_i)|^2 * peak_power / noise_psd on the given frequency grid.
SnrProfile multipath_profile(const MultipathModel& model,
                             const std::vector<double>& freqs_hz,
                             double noise_psd, double peak_power);

// Total rate the profile supports at the half-SNR operating point:
// floor(sum_i min(log2(1 + snr_i / 2), r_max)).
long long target_bitrate(const SnrProfile& profile, int r_max);

}  // namespace bitload
