#pragma once

#include "ralt/config.hpp"

namespace ralt {

// Closed-form fit of the density mapping (density_base, density_gain) so
// that one orbit of recovery energy at the Low and Mean intensities equals
// the two target shares of battery capacity. Drag is affine in intensity;
// the expected annealing energy over the window is computed from the damage
// rates (zero under the defaults: a pristine satellite cannot reach the
// annealing threshold within a single orbit) and subtracted before solving
// the 2x2 system. The orbital period is discretized to whole scheduler
// intervals so a re-simulation reproduces the targets exactly.
struct CalibrationResult {
  double target_low_pct = 0.0;
  double target_mean_pct = 0.0;
  double intensity_low = 0.2;
  double intensity_mean = 0.5;
  double density_base_kg_km3 = 0.0;
  double density_gain = 0.0;
  double period_s = 0.0;      // discretized one-orbit window
  int intervals = 0;
  double predicted_low_wh = 0.0;
  double predicted_mean_wh = 0.0;
  // Filled by verify_calibration: single-satellite one-orbit re-simulation.
  double simulated_low_pct = 0.0;
  double simulated_mean_pct = 0.0;
};

// Throws ConfigError when the targets are infeasible (non-monotone or below
// the annealing floor).
CalibrationResult calibrate_density(double target_low_pct,
                                    double target_mean_pct,
                                    const ScenarioConfig& base);

// Runs the two verification simulations and fills the simulated shares.
void verify_calibration(CalibrationResult& result, const ScenarioConfig& base);

std::string calibration_json(const CalibrationResult& r);

}  // namespace ralt
