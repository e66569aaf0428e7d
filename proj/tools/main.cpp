#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bitload/config.hpp"
#include "bitload/experiments.hpp"

namespace {

std::vector<bitload::Method> parse_methods(const std::vector<std::string>& names) {
  using bitload::Method;
  std::vector<Method> out;
  auto add = [&out](Method m) {
    for (Method have : out)
      if (have == m) return;
    out.push_back(m);
  };
  if (names.empty()) {
    return {Method::analytic, Method::greedy_margin, Method::greedy_ber};
  }
  for (const auto& name : names) {
    if (name == "oracle") {
      add(Method::oracle_margin);
      add(Method::oracle_ber);
    } else {
      add(bitload::method_from_name(name));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robust bit loading over parallel Gaussian channels"};
  app.require_subcommand(1);

  std::string config_path;
  std::string preset;
  std::string out_dir = "out";
  std::string sweep_name = "sweep";
  std::string axis = "rate";
  std::vector<std::string> method_names;
  std::vector<double> values;
  std::optional<long long> rate;
  std::optional<std::uint64_t> seed;
  int beta = 1;
  int r_max = 15;
  int jobs = 1;

  const std::string method_help =
      "solver to run, repeatable: analytic, greedy_margin, greedy_ber, "
      "oracle_margin, oracle_ber, or oracle (both oracles); default runs "
      "analytic + both greedies";

  auto* alloc_cmd =
      app.add_subcommand("allocate", "compute allocations and a robustness report");
  alloc_cmd->add_option("--config", config_path, "channel description JSON")->required();
  alloc_cmd->add_option("--rate", rate,
                        "total bit budget (default: capacity-based estimate)");
  alloc_cmd->add_option("--beta", beta, "bit granularity")->check(CLI::IsMember({1, 2}));
  alloc_cmd->add_option("--rmax", r_max, "per-channel bit cap")
      ->check(CLI::Range(1, 62));
  alloc_cmd->add_option("--method", method_names, method_help);
  alloc_cmd->add_option("--seed", seed, "RNG seed override for generated channels");
  alloc_cmd->add_option("--out", out_dir, "output directory");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "run a method comparison over a parameter grid");
  sweep_cmd->add_option("--config", config_path, "channel description JSON");
  sweep_cmd->add_option("--preset", preset, "named built-in experiment")
      ->check(CLI::IsMember(bitload::preset_names()));
  sweep_cmd->add_option("--axis", axis, "sweep axis: rate or psdnr")
      ->check(CLI::IsMember({"rate", "psdnr"}));
  sweep_cmd->add_option("--values", values, "comma separated grid points")
      ->delimiter(',');
  sweep_cmd->add_option("--rate", rate, "fixed bit budget for psdnr sweeps");
  sweep_cmd->add_option("--beta", beta, "bit granularity")->check(CLI::IsMember({1, 2}));
  sweep_cmd->add_option("--rmax", r_max, "per-channel bit cap")->check(CLI::Range(1, 62));
  sweep_cmd->add_option("--method", method_names, method_help);
  sweep_cmd->add_option("--seed", seed, "RNG seed override");
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", out_dir, "output directory");
  sweep_cmd->add_option("--name", sweep_name, "basename for sweep outputs");

  auto* gen_cmd =
      app.add_subcommand("channel-gen", "realize a channel and dump its SNR profile");
  gen_cmd->add_option("--config", config_path, "channel description JSON")->required();
  gen_cmd->add_option("--seed", seed, "RNG seed override");
  gen_cmd->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(alloc_cmd)) {
      bitload::AllocateOptions opt;
      opt.channel = bitload::load_channel_config(config_path);
      opt.target_rate = rate;
      opt.beta = beta;
      opt.r_max = r_max;
      opt.methods = parse_methods(method_names);
      opt.seed = seed;
      opt.out_dir = out_dir;
      return bitload::run_allocate(opt);
    }
    if (app.got_subcommand(sweep_cmd)) {
      if (!preset.empty()) {
        if (!config_path.empty())
          throw std::invalid_argument("--preset and --config are mutually exclusive");
        return bitload::run_preset(preset, seed, jobs, out_dir);
      }
      if (config_path.empty())
        throw std::invalid_argument("sweep needs either --config or --preset");
      bitload::SweepOptions opt;
      opt.channel = bitload::load_channel_config(config_path);
      opt.beta = beta;
      opt.r_max = r_max;
      opt.methods = parse_methods(method_names);
      opt.axis = axis == "rate" ? bitload::SweepAxis::rate : bitload::SweepAxis::psdnr;
      opt.values = values;
      opt.target_rate = rate;
      opt.seed = seed;
      opt.jobs = jobs;
      opt.out_dir = out_dir;
      opt.name = sweep_name;
      return bitload::run_sweep(opt);
    }
    return bitload::run_channel_gen(bitload::load_channel_config(config_path), seed,
                                    out_dir);
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
