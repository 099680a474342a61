#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ralt/calibrate.hpp"
#include "ralt/config.hpp"
#include "ralt/engine.hpp"
#include "ralt/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct CommonOpts {
  std::string config_path;
  std::string out_dir = "out";
  std::vector<std::string> overrides;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

ralt::ScenarioConfig resolve_config(const CommonOpts& opts) {
  ralt::ScenarioConfig cfg = ralt::load_config(opts.config_path);
  for (const auto& assignment : opts.overrides)
    ralt::apply_override(cfg, assignment);
  if (opts.seed_set) cfg.seed = opts.seed;
  cfg.validate();
  return cfg;
}

void ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw std::runtime_error("cannot create output directory: " + dir + ": " +
                             ec.message());
}

int cmd_run(const CommonOpts& opts) {
  const ralt::ScenarioConfig cfg = resolve_config(opts);
  ensure_out_dir(opts.out_dir);
  const auto out = std::filesystem::path(opts.out_dir);
  ralt::write_text_file(
      (out / "manifest.json").string(),
      ralt::manifest_json(cfg, opts.config_path, opts.out_dir, opts.overrides));

  ralt::Engine engine(cfg);
  engine.set_telemetry_enabled(true);
  const ralt::RunReport report = engine.run();

  ralt::write_text_file((out / "metrics.csv").string(),
                        ralt::metrics_csv(report.metrics));
  ralt::write_text_file((out / "telemetry.csv").string(),
                        ralt::telemetry_csv(report.telemetry));
  ralt::write_text_file((out / "summary.json").string(),
                        ralt::summary_json(report.summary, cfg));

  const auto& s = report.summary;
  std::printf("policy=%s seed=%llu intervals=%d shutdowns=%d reroutes=%ld "
              "drops=%ld mean_ddod=%.6g latency_mean=%.6g s\n",
              s.policy.c_str(), static_cast<unsigned long long>(s.seed),
              s.intervals, s.total_shutdowns, s.total_reroutes, s.total_drops,
              s.mean_ddod_per_interval, s.latency_mean_s);
  return kExitOk;
}

int cmd_compare(const CommonOpts& opts, const std::string& policies_csv,
                int n_seeds, const std::string& levels_csv) {
  ralt::ScenarioConfig base = resolve_config(opts);
  if (n_seeds < 1) throw ralt::ConfigError("compare: --seeds must be >= 1");

  std::vector<ralt::Policy> policies;
  {
    std::stringstream ss(policies_csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) policies.push_back(ralt::policy_from_string(tok));
  }
  if (policies.empty())
    throw ralt::ConfigError("compare: no policies given");
  std::vector<ralt::RadiationLevel> levels;
  {
    std::stringstream ss(levels_csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) levels.push_back(ralt::radiation_level_from_string(tok));
  }
  if (levels.empty()) throw ralt::ConfigError("compare: no levels given");

  ensure_out_dir(opts.out_dir);
  const auto out = std::filesystem::path(opts.out_dir);
  ralt::write_text_file(
      (out / "manifest.json").string(),
      ralt::manifest_json(base, opts.config_path, opts.out_dir,
                          opts.overrides));

  std::vector<ralt::CompareCell> cells;
  for (const auto level : levels) {
    for (int k = 0; k < n_seeds; ++k) {
      for (const auto policy : policies) {
        ralt::ScenarioConfig cfg = base;
        cfg.radiation_source.source = "synthetic";
        cfg.radiation_source.level = level;
        cfg.policy = policy;
        cfg.seed = base.seed + static_cast<std::uint64_t>(k);
        ralt::Engine engine(cfg);
        const ralt::RunReport report = engine.run();
        cells.push_back({level, policy, cfg.seed, report.summary});
      }
    }
  }
  const std::string csv = ralt::comparison_csv(cells, policies);
  ralt::write_text_file((out / "comparison.csv").string(), csv);
  std::fputs(csv.c_str(), stdout);
  return kExitOk;
}

int cmd_calibrate(const CommonOpts& opts, double target_low,
                  double target_mean) {
  const ralt::ScenarioConfig cfg = resolve_config(opts);
  ralt::CalibrationResult result =
      ralt::calibrate_density(target_low, target_mean, cfg);
  ralt::verify_calibration(result, cfg);
  ensure_out_dir(opts.out_dir);
  const auto out = std::filesystem::path(opts.out_dir);
  ralt::write_text_file((out / "calibration.json").string(),
                        ralt::calibration_json(result));
  std::printf("density_base_kg_km3=%.9g density_gain=%.9g\n",
              result.density_base_kg_km3, result.density_gain);
  std::printf("residuals: low %.4f%% -> %.4f%%, mean %.4f%% -> %.4f%%\n",
              result.target_low_pct, result.simulated_low_pct,
              result.target_mean_pct, result.simulated_mean_pct);
  return kExitOk;
}

int cmd_synth(const std::string& level_name, double horizon_s, double step_s,
              std::uint64_t seed, double jitter, const std::string& out_file) {
  const auto level = ralt::radiation_level_from_string(level_name);
  const ralt::RadiationSeries series =
      ralt::synth_series(level, horizon_s, step_s, seed, jitter);
  std::ostringstream os;
  os << "t_seconds,index\n";
  os.precision(12);
  for (const auto& s : series.samples) os << s.t_s << ',' << s.intensity << '\n';
  ralt::write_text_file(out_file, os.str());
  std::printf("wrote %zu samples to %s\n", series.samples.size(),
              out_file.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RALT: radiation-aware LEO constellation rerouting simulator"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--config", opts.config_path, "scenario config (JSON)");
  app.add_option("--out", opts.out_dir, "output directory");
  auto* seed_opt = app.add_option("--seed", opts.seed, "override scenario seed");
  app.add_option("--set", opts.overrides,
                 "config override key.path=value (repeatable)");

  auto* run = app.add_subcommand("run", "execute one scenario");

  auto* compare =
      app.add_subcommand("compare", "paired-seed policy comparison");
  std::string policies = "ralt,phoenix,umbra";
  std::string levels = "low,mean,high";
  int n_seeds = 1;
  compare->add_option("--policies", policies, "comma-separated policy list");
  compare->add_option("--seeds", n_seeds, "number of paired seeds");
  compare->add_option("--levels", levels, "comma-separated radiation levels");

  auto* calibrate =
      app.add_subcommand("calibrate", "fit the density mapping to recovery "
                                      "energy targets");
  double target_low = 50.99, target_mean = 85.87;
  calibrate->add_option("--target-low", target_low,
                        "recovery share at low intensity, percent");
  calibrate->add_option("--target-mean", target_mean,
                        "recovery share at mean intensity, percent");

  auto* synth =
      app.add_subcommand("synth-radiation", "write a synthetic radiation CSV");
  std::string level_name = "mean", synth_out = "radiation.csv";
  double horizon_s = 3600.0, step_s = 60.0, jitter = 0.05;
  std::uint64_t synth_seed = 1;
  synth->add_option("--level", level_name, "low|mean|high");
  synth->add_option("--horizon", horizon_s, "series horizon, seconds");
  synth->add_option("--step", step_s, "sample spacing, seconds");
  synth->add_option("--jitter", jitter, "uniform jitter amplitude");
  synth->add_option("--series-seed", synth_seed, "seed for the jitter");
  synth->add_option("--out-file", synth_out, "output CSV path");

  CLI11_PARSE(app, argc, argv);
  opts.seed_set = seed_opt->count() > 0;

  try {
    if (run->parsed()) {
      if (opts.config_path.empty())
        throw ralt::ConfigError("run: --config is required");
      return cmd_run(opts);
    }
    if (compare->parsed()) {
      if (opts.config_path.empty())
        throw ralt::ConfigError("compare: --config is required");
      return cmd_compare(opts, policies, n_seeds, levels);
    }
    if (calibrate->parsed()) {
      if (opts.config_path.empty())
        throw ralt::ConfigError("calibrate: --config is required");
      return cmd_calibrate(opts, target_low, target_mean);
    }
    if (synth->parsed())
      return cmd_synth(level_name, horizon_s, step_s, synth_seed, jitter,
                       synth_out);
  } catch (const ralt::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
