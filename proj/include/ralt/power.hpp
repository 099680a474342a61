#pragma once

#include "ralt/radiation.hpp"

namespace ralt {

struct BatteryState {
  double capacity_wh = 5000.0;
  double dod = 0.0;  // fraction of capacity discharged, in [0, 1]

  double stored_wh() const { return capacity_wh * (1.0 - dod); }
};

struct EnergyParams {
  double anneal_w = 40.0;
  double tx_wmin_per_mb = 0.08;
  double harvest_w = 1200.0;       // while sunlit
  double drag_coefficient = 2.2;
  double cross_section_m2 = 10.0;
  double shutdown_dod = 0.95;

  void validate() const;  // throws std::invalid_argument
};

// Energy to exactly offset atmospheric drag work over the interval:
// P = 1/2 * rho * v^3 * Cd * A with rho in kg/m^3 and the circular orbital
// speed v = sqrt(mu/a) in m/s. density is given in kg/km^3.
double drag_energy_wh(double density_kg_km3, double altitude_km,
                      double interval_s, const EnergyParams& p);

// rate [Mb/s] for duration [s] at tx_wmin_per_mb [W*min/Mb].
double transmission_energy_wh(double rate_mbps, double duration_s,
                              const EnergyParams& p);

double annealing_energy_wh(double duration_s, const EnergyParams& p);

double harvest_energy_wh(bool sunlit, double duration_s,
                         const EnergyParams& p);

struct BatteryStepResult {
  BatteryState state;
  bool exhausted = false;  // raw dod exceeded 1 and was clamped
};

BatteryStepResult step_battery(const BatteryState& state, double consumed_wh,
                               double harvested_wh);

// Per-interval radiation-recovery energy: drag at the current intensity plus
// the annealing draw when the satellite is (or must go) annealing. This is
// the term RALT folds into edge weights and PHOENIX omits.
double recovery_energy_wh(double intensity, double altitude_km,
                          double interval_s, bool annealing_active,
                          const EnergyParams& ep,
                          const RadiationModelParams& rp);

}  // namespace ralt
