#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ralt/config.hpp"
#include "ralt/constellation.hpp"
#include "ralt/damage.hpp"
#include "ralt/routing.hpp"
#include "ralt/traffic.hpp"

namespace ralt {

enum class SatMode : std::uint8_t { Active, Annealing, Sleep, Shutdown };
std::string to_string(SatMode m);

struct IntervalMetrics {
  double t = 0.0;
  double mean_ddod = 0.0;  // mean positive net DoD increase, non-shutdown sats
  double max_ddod = 0.0;
  double mean_latency_s = 0.0;  // over flows routed this interval
  double p95_latency_s = 0.0;
  int reroutes = 0;  // applied plans, initial routing excluded
  int sleeps = 0;    // satellites entering sleep this interval
  int shutdowns_cum = 0;
  int drops = 0;     // flows without a feasible path this interval
};

struct TelemetryRow {
  double t = 0.0;
  int plane = 0;
  int slot = 0;
  double dod = 0.0;
  double beta_tid = 0.0;
  double beta_tnid = 0.0;
  SatMode mode = SatMode::Active;
};

struct RunSummary {
  std::string policy;
  std::uint64_t seed = 0;
  int intervals = 0;
  int n_satellites = 0;
  int n_flows = 0;
  double mean_ddod_per_interval = 0.0;
  double latency_mean_s = 0.0;
  double latency_p50_s = 0.0;
  double latency_p95_s = 0.0;
  long total_reroutes = 0;
  long total_drops = 0;  // flow-intervals without a path
  long total_sleep_events = 0;
  int total_shutdowns = 0;
  double consumed_wh_total = 0.0;
  double harvested_wh_total = 0.0;
  double recovery_wh_total = 0.0;  // drag + annealing actually charged
  double recovery_share_of_capacity = 0.0;  // per-satellite mean
  std::string kernels_backend;
};

struct RunReport {
  std::vector<IntervalMetrics> metrics;
  std::vector<TelemetryRow> telemetry;  // populated when enabled
  RunSummary summary;
};

class Engine;

// Invariant hook for the test suites: called after every completed step.
struct StepObserver {
  virtual ~StepObserver() = default;
  virtual void on_step(const Engine& engine, const IntervalMetrics& row) = 0;
};

class Engine {
 public:
  // Loads site data from the files named in the config.
  explicit Engine(const ScenarioConfig& cfg);
  // Injected site data (tests, calibration runs).
  Engine(const ScenarioConfig& cfg, std::vector<WeightedSite> distribution,
         std::vector<GroundSite> ground_sites);
  ~Engine();
  Engine(Engine&&) noexcept;
  Engine& operator=(Engine&&) noexcept;

  void set_telemetry_enabled(bool enabled);

  // Executes one interval; see step ordering in the implementation.
  IntervalMetrics step();

  // Runs horizon/interval steps from a fresh state.
  RunReport run(StepObserver* observer = nullptr);

  // --- inspection (stable across a run; used by tests and observers) ---
  const ScenarioConfig& config() const;
  int n_sats() const;
  int n_cells() const;
  int steps_done() const;
  double now_s() const;  // time of the next step boundary
  SatMode mode(int sat) const;
  double dod(int sat) const;
  double beta_tid(int sat) const;
  double beta_tnid(int sat) const;
  const std::vector<Flow>& flows() const;
  int sat_node_count() const;  // node ids below this are satellites
  // Energy ledger of the most recent step.
  double last_consumed_wh(int sat) const;
  double last_harvested_wh(int sat) const;
  double last_dod_before(int sat) const;
  bool last_clamped(int sat) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ralt
