#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ralt/constellation.hpp"
#include "ralt/damage.hpp"
#include "ralt/power.hpp"
#include "ralt/radiation.hpp"
#include "ralt/routing.hpp"
#include "ralt/traffic.hpp"

namespace ralt {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RadiationSourceConfig {
  std::string source = "synthetic";  // synthetic | file | constant
  RadiationLevel level = RadiationLevel::Mean;
  std::string path;                  // for source = file
  double constant_intensity = 0.0;   // for source = constant
  double jitter = 0.05;
  double sample_interval_s = 60.0;
};

struct EngineParams {
  double interval_s = 60.0;
  double horizon_s = 3600.0;
  int sleep_intervals = 5;
  bool anneal_offline = false;  // annealing satellites keep forwarding
};

struct SunConfig {
  bool rotating = false;  // else fixed direction for determinism
  Vec3 direction{1.0, 0.0, 0.0};
};

struct DamageInitConfig {
  double initial_beta = 0.0;
  double initial_beta_jitter = 0.0;  // uniform [0, jitter) added per satellite
};

struct ScenarioConfig {
  ConstellationSpec constellation;
  RadiationSourceConfig radiation_source;
  RadiationModelParams radiation;
  BatteryState battery;  // capacity; dod field ignored (all start full)
  EnergyParams energy;
  DamageParams damage;
  DamageInitConfig damage_init;
  std::vector<TnidComponent> tnid_components = default_tnid_components();
  TrafficParams traffic;
  std::string user_distribution_csv = "data/user_distribution.csv";
  std::string ground_sites_csv = "data/ground_stations.csv";
  double min_elevation_deg = 25.0;
  double alpha = 0.5;
  EngineParams engine;
  SunConfig sun;
  Policy policy = Policy::Ralt;
  std::uint64_t seed = 1;

  void validate() const;  // throws ConfigError
};

// Loads a JSON scenario; unknown keys are rejected so typos surface early.
// Relative data-file paths are resolved against the config file's directory.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig config_from_json_text(const std::string& text,
                                     const std::string& origin);

// Applies a `dotted.key=value` override (CLI --set).
void apply_override(ScenarioConfig& cfg, const std::string& assignment);

// Serialized echo of the resolved configuration (stable key order).
std::string config_to_json(const ScenarioConfig& cfg);

// `latitude,longitude,role` CSV; role is user_cell or ground_station.
std::vector<GroundSite> load_ground_sites(const std::string& path);

RadiationSeries make_radiation_series(const ScenarioConfig& cfg);

}  // namespace ralt
