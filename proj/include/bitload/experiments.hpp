#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bitload/config.hpp"
#include "bitload/greedy.hpp"

namespace bitload {

// Allocation methods the experiment runner can execute. "analytic" is the
// continuous solver followed by secant integer completion; the two oracle
// entries are exhaustive searches and only practical on tiny instances.
enum class Method { analytic, greedy_margin, greedy_ber, oracle_margin, oracle_ber };

std::string method_name(Method m);
Method method_from_name(const std::string& name);  // throws std::invalid_argument

struct AllocateOptions {
  ChannelConfig channel;
  std::optional<long long> target_rate;  // absent: target_bitrate of the profile
  int beta = 1;
  int r_max = 15;
  std::vector<Method> methods;
  std::optional<std::uint64_t> seed;  // overrides the config seed
  std::string out_dir;
};

// Writes alloc_<method>.csv (+ trace_<method>.csv for the greedy methods)
// and report.json into out_dir. Returns 0 on success; throws on error.
int run_allocate(const AllocateOptions& opt);

enum class SweepAxis { rate, psdnr };

struct SweepOptions {
  ChannelConfig channel;
  int beta = 1;
  int r_max = 15;
  std::vector<Method> methods;
  SweepAxis axis = SweepAxis::rate;
  std::vector<double> values;            // R values or psdnr_db values
  std::optional<long long> target_rate;  // psdnr axis: absent means auto per point
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  std::string out_dir;
  std::string name = "sweep";
};

// Writes <name>.csv (one row per sweep point per method) and <name>.json.
int run_sweep(const SweepOptions& opt);

// Writes channel.csv (channel,snr) and channel.json into out_dir.
int run_channel_gen(const ChannelConfig& cfg, std::optional<std::uint64_t> seed,
                    const std::string& out_dir);

// Named experiment shapes with committed grids and seeds; see README.
// fig2: root-search iteration counts vs target rate.
// fig3: method agreement vs target rate for beta = 1 and 2.
// fig4: integer-completion iteration counts vs target rate.
// fig6: power-line multipath sweep over PSDNR.
// table1: margin/BER comparison of the two greedies over 50 seeds.
int run_preset(const std::string& preset, std::optional<std::uint64_t> seed, int jobs,
               const std::string& out_dir);

std::vector<std::string> preset_names();

// The committed 15-path power-line model behind the fig6 preset; identical
// to configs/plc15.json.
ChannelConfig plc15_config();

// Smallest PSDNR (to within tol_db) at which the scaled profile supports
// target_bitrate >= rate. The profile scales linearly with transmit power,
// so this searches a monotone function of the dB offset.
double psdnr_for_rate(const SnrProfile& base_profile, double base_psdnr_db,
                      long long rate, int r_max, double tol_db = 1e-3);

}  // namespace bitload
