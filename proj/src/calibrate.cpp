#include "ralt/calibrate.hpp"

#include <cmath>

#include "json.hpp"
#include "ralt/engine.hpp"
#include "ralt/power.hpp"

namespace ralt {

namespace {

// Expected annealing energy over [0, window] starting from pristine damage
// at constant intensity. The trigger fires once beta reaches gamma*beta_max;
// past that point the annealing duty cycle balances accumulation.
double expected_annealing_wh(double intensity, double window_s,
                             const ScenarioConfig& cfg) {
  const double rate =
      std::max(cfg.radiation.tid_rate_per_s, cfg.radiation.tnid_rate_per_s) *
      intensity;
  if (rate <= 0.0) return 0.0;
  const double threshold =
      std::min(cfg.damage.gamma_tid * cfg.damage.beta_tid_max,
               cfg.damage.gamma_tnid * cfg.damage.beta_tnid_max);
  const double t_trigger = threshold / rate;
  if (t_trigger >= window_s) return 0.0;
  const double anneal_per_s = cfg.damage.anneal_rate_per_h / 3600.0;
  const double duty = std::min(1.0, rate / anneal_per_s);
  const double annealing_s = duty * (window_s - t_trigger);
  return cfg.energy.anneal_w * annealing_s / 3600.0;
}

ScenarioConfig verification_config(const ScenarioConfig& base,
                                   const CalibrationResult& r,
                                   double intensity) {
  ScenarioConfig cfg = base;
  cfg.constellation.num_planes = 1;
  cfg.constellation.sats_per_plane = 1;
  cfg.radiation_source.source = "constant";
  cfg.radiation_source.constant_intensity = intensity;
  cfg.radiation.density_base_kg_km3 = r.density_base_kg_km3;
  cfg.radiation.density_gain = r.density_gain;
  cfg.radiation.sleep_p_min = 0.0;
  cfg.radiation.sleep_p_max = 0.0;
  cfg.traffic.n_cells = 0;
  cfg.damage_init.initial_beta = 0.0;
  cfg.damage_init.initial_beta_jitter = 0.0;
  cfg.engine.horizon_s = r.period_s;
  cfg.policy = Policy::Ralt;
  return cfg;
}

}  // namespace

CalibrationResult calibrate_density(double target_low_pct,
                                    double target_mean_pct,
                                    const ScenarioConfig& base) {
  if (target_low_pct <= 0.0 || target_low_pct >= 100.0 ||
      target_mean_pct <= 0.0 || target_mean_pct >= 100.0)
    throw ConfigError("calibrate: targets must lie in (0, 100) percent");

  CalibrationResult r;
  r.target_low_pct = target_low_pct;
  r.target_mean_pct = target_mean_pct;
  r.intensity_low = level_mean_intensity(RadiationLevel::Low);
  r.intensity_mean = level_mean_intensity(RadiationLevel::Mean);

  const double period = base.constellation.period_s();
  r.intervals = std::max(
      1, static_cast<int>(std::llround(period / base.engine.interval_s)));
  r.period_s = r.intervals * base.engine.interval_s;

  const double capacity = base.battery.capacity_wh;
  const double anneal_low =
      expected_annealing_wh(r.intensity_low, r.period_s, base);
  const double anneal_mean =
      expected_annealing_wh(r.intensity_mean, r.period_s, base);
  const double rhs_low = target_low_pct / 100.0 * capacity - anneal_low;
  const double rhs_mean = target_mean_pct / 100.0 * capacity - anneal_mean;

  // Drag energy over the window is K * base * (1 + gain * I) with K the
  // per-unit-density drag energy; solve the affine system for
  // (A0, B) = (K*base, K*base*gain).
  const double slope =
      (rhs_mean - rhs_low) / (r.intensity_mean - r.intensity_low);
  const double intercept = rhs_low - slope * r.intensity_low;
  if (slope < 0.0)
    throw ConfigError(
        "calibrate: infeasible targets (recovery must not decrease with "
        "intensity)");
  if (intercept <= 0.0)
    throw ConfigError(
        "calibrate: infeasible targets (zero-intensity drag share must be "
        "positive)");

  const double k_per_density =
      drag_energy_wh(1.0, base.constellation.altitude_km, r.period_s,
                     base.energy);
  r.density_base_kg_km3 = intercept / k_per_density;
  r.density_gain = slope / intercept;
  r.predicted_low_wh = rhs_low + anneal_low;
  r.predicted_mean_wh = rhs_mean + anneal_mean;
  return r;
}

void verify_calibration(CalibrationResult& r, const ScenarioConfig& base) {
  for (const bool mean_case : {false, true}) {
    const double intensity = mean_case ? r.intensity_mean : r.intensity_low;
    ScenarioConfig cfg = verification_config(base, r, intensity);
    Engine engine(cfg, {}, {{0.0, 0.0, SiteRole::GroundStation}});
    const RunReport report = engine.run();
    const double pct =
        report.summary.recovery_wh_total / cfg.battery.capacity_wh * 100.0;
    (mean_case ? r.simulated_mean_pct : r.simulated_low_pct) = pct;
  }
}

std::string calibration_json(const CalibrationResult& r) {
  nlohmann::json j;
  j["targets_pct"] = {{"low", r.target_low_pct}, {"mean", r.target_mean_pct}};
  j["intensities"] = {{"low", r.intensity_low}, {"mean", r.intensity_mean}};
  j["density_base_kg_km3"] = r.density_base_kg_km3;
  j["density_gain"] = r.density_gain;
  j["window"] = {{"period_s", r.period_s}, {"intervals", r.intervals}};
  j["predicted_wh"] = {{"low", r.predicted_low_wh},
                       {"mean", r.predicted_mean_wh}};
  j["simulated_share_pct"] = {{"low", r.simulated_low_pct},
                              {"mean", r.simulated_mean_pct}};
  return j.dump(2) + "\n";
}

}  // namespace ralt
