#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "bitload/channel.hpp"

namespace bitload {

// Channel source parsed from a JSON config. Three types:
//   {"type": "explicit", "snr": [...]} or
//   {"type": "explicit", "gains": [...], "noise_vars": [...],
//    "peak_power": P, "power_fractions": [...]}
//   {"type": "rayleigh", "n": N, "psdnr_db": X, "seed": S}
//   {"type": "multipath", "paths": [{"gain": g, "distance_m": d}, ...],
//    "a0": ..., "a1": ..., "k_exp": ..., "velocity": ...,
//    "band_start_hz": ..., "band_stop_hz": ..., "n": N,
//    "noise_psd": ..., "peak_power": P}
// Linear quantities are SI; dB fields carry the _db suffix.
struct ChannelConfig {
  enum class Type { explicit_snr, explicit_spec, rayleigh, multipath };
  Type type = Type::explicit_snr;

  SnrProfile profile;  // explicit_snr
  ChannelSpec spec;    // explicit_spec

  std::size_t n = 0;        // rayleigh, multipath
  double psdnr_db_value = 0.0;  // rayleigh
  std::uint64_t seed = 1;       // rayleigh

  MultipathModel model;     // multipath
  double band_start_hz = 0.0;
  double band_stop_hz = 0.0;
  double noise_psd = 1.0;
  double peak_power = 1.0;

  static ChannelConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;  // resolved form, for output sidecars

  std::size_t channel_count() const;
  // Carrier center frequencies for the multipath type.
  std::vector<double> carrier_frequencies() const;
  // Produce the SNR profile; seed_override replaces the stored seed for
  // generated types and is ignored for explicit ones.
  SnrProfile realize(std::optional<std::uint64_t> seed_override = std::nullopt) const;
};

ChannelConfig load_channel_config(const std::string& path);

}  // namespace bitload
