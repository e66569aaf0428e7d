#include "bitload/config.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bitload/rng.hpp"

namespace bitload {
namespace {

using nlohmann::json;

std::vector<double> number_array(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw std::invalid_argument("channel config: missing array field '" + key + "'");
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number())
      throw std::invalid_argument("channel config: non-numeric entry in '" + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

double number_field(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw std::invalid_argument("channel config: missing numeric field '" + key + "'");
  return j.at(key).get<double>();
}

double number_field_or(const json& j, const std::string& key, double fallback) {
  return j.contains(key) ? number_field(j, key) : fallback;
}

}  // namespace

ChannelConfig ChannelConfig::from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw std::invalid_argument("channel config: expected an object with a 'type' string");
  const std::string type = j.at("type").get<std::string>();
  ChannelConfig cfg;

  if (type == "explicit") {
    if (j.contains("snr")) {
      cfg.type = Type::explicit_snr;
      cfg.profile.snr = number_array(j, "snr");
      cfg.profile.validate();
    } else {
      cfg.type = Type::explicit_spec;
      cfg.spec.gains = number_array(j, "gains");
      const std::size_t n = cfg.spec.gains.size();
      cfg.spec.noise_vars = j.contains("noise_vars") ? number_array(j, "noise_vars")
                                                     : std::vector<double>(n, 1.0);
      cfg.spec.power_fractions = j.contains("power_fractions")
                                     ? number_array(j, "power_fractions")
                                     : std::vector<double>(n, 1.0);
      cfg.spec.peak_power = number_field_or(j, "peak_power", 1.0);
      cfg.spec.validate();
    }
    return cfg;
  }

  if (type == "rayleigh") {
    cfg.type = Type::rayleigh;
    const double n = number_field(j, "n");
    if (n < 1 || n != static_cast<double>(static_cast<std::size_t>(n)))
      throw std::invalid_argument("channel config: 'n' must be a positive integer");
    cfg.n = static_cast<std::size_t>(n);
    cfg.psdnr_db_value = number_field(j, "psdnr_db");
    if (j.contains("seed")) {
      if (!j.at("seed").is_number_unsigned())
        throw std::invalid_argument("channel config: 'seed' must be a non-negative integer");
      cfg.seed = j.at("seed").get<std::uint64_t>();
    }
    return cfg;
  }

  if (type == "multipath") {
    cfg.type = Type::multipath;
    if (!j.contains("paths") || !j.at("paths").is_array() || j.at("paths").empty())
      throw std::invalid_argument("channel config: 'paths' must be a non-empty array");
    for (const auto& p : j.at("paths")) {
      MultipathPath path;
      path.gain = number_field(p, "gain");
      path.distance_m = number_field(p, "distance_m");
      cfg.model.paths.push_back(path);
    }
    cfg.model.a0 = number_field_or(j, "a0", 0.0);
    cfg.model.a1 = number_field_or(j, "a1", 0.0);
    cfg.model.k_exp = number_field_or(j, "k_exp", 1.0);
    cfg.model.velocity = number_field_or(j, "velocity", 1.5e8);
    cfg.model.validate();
    cfg.band_start_hz = number_field(j, "band_start_hz");
    cfg.band_stop_hz = number_field(j, "band_stop_hz");
    if (!(cfg.band_start_hz >= 0.0) || !(cfg.band_stop_hz > cfg.band_start_hz))
      throw std::invalid_argument("channel config: bad frequency band");
    const double n = number_field(j, "n");
    if (n < 1 || n != static_cast<double>(static_cast<std::size_t>(n)))
      throw std::invalid_argument("channel config: 'n' must be a positive integer");
    cfg.n = static_cast<std::size_t>(n);
    cfg.noise_psd = number_field_or(j, "noise_psd", 1.0);
    cfg.peak_power = number_field_or(j, "peak_power", 1.0);
    if (!(cfg.noise_psd > 0.0) || !(cfg.peak_power > 0.0))
      throw std::invalid_argument("channel config: noise_psd and peak_power must be positive");
    return cfg;
  }

  throw std::invalid_argument("channel config: unknown type '" + type + "'");
}

nlohmann::json ChannelConfig::to_json() const {
  json j;
  switch (type) {
    case Type::explicit_snr:
      j["type"] = "explicit";
      j["snr"] = profile.snr;
      break;
    case Type::explicit_spec:
      j["type"] = "explicit";
      j["gains"] = spec.gains;
      j["noise_vars"] = spec.noise_vars;
      j["power_fractions"] = spec.power_fractions;
      j["peak_power"] = spec.peak_power;
      break;
    case Type::rayleigh:
      j["type"] = "rayleigh";
      j["n"] = n;
      j["psdnr_db"] = psdnr_db_value;
      j["seed"] = seed;
      j["rng"] = std::string(kRngAlgorithm);
      break;
    case Type::multipath: {
      j["type"] = "multipath";
      json paths = json::array();
      for (const auto& p : model.paths)
        paths.push_back(json{{"gain", p.gain}, {"distance_m", p.distance_m}});
      j["paths"] = paths;
      j["a0"] = model.a0;
      j["a1"] = model.a1;
      j["k_exp"] = model.k_exp;
      j["velocity"] = model.velocity;
      j["band_start_hz"] = band_start_hz;
      j["band_stop_hz"] = band_stop_hz;
      j["n"] = n;
      j["noise_psd"] = noise_psd;
      j["peak_power"] = peak_power;
      break;
    }
  }
  return j;
}

std::size_t ChannelConfig::channel_count() const {
  switch (type) {
    case Type::explicit_snr:
      return profile.size();
    case Type::explicit_spec:
      return spec.size();
    default:
      return n;
  }
}

std::vector<double> ChannelConfig::carrier_frequencies() const {
  if (type != Type::multipath)
    throw std::invalid_argument("carrier_frequencies: only defined for multipath configs");
  std::vector<double> freqs(n);
  const double step = (band_stop_hz - band_start_hz) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    freqs[i] = band_start_hz + (static_cast<double>(i) + 0.5) * step;
  return freqs;
}

SnrProfile ChannelConfig::realize(std::optional<std::uint64_t> seed_override) const {
  switch (type) {
    case Type::explicit_snr:
      return profile;
    case Type::explicit_spec:
      return snr_profile(spec);
    case Type::rayleigh:
      return rayleigh_profile(n, psdnr_db_value, seed_override.value_or(seed));
    case Type::multipath:
      return multipath_profile(model, carrier_frequencies(), noise_psd, peak_power);
  }
  throw std::logic_error("ChannelConfig: unreachable");
}

ChannelConfig load_channel_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open channel config: " + path);
  json j;
  try {
    j = json::parse(in, nullptr, /*allow_exceptions=*/true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("channel config parse error in " + path + ": " + e.what());
  }
  return ChannelConfig::from_json(j);
}

}  // namespace bitload
