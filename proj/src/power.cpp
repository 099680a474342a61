#include "ralt/power.hpp"

#include <cmath>
#include <stdexcept>

#include "ralt/geo.hpp"
#include "ralt/kernels.hpp"

namespace ralt {

void EnergyParams::validate() const {
  if (anneal_w <= 0 || tx_wmin_per_mb <= 0 || harvest_w <= 0 ||
      drag_coefficient <= 0 || cross_section_m2 <= 0)
    throw std::invalid_argument("energy params must be positive");
  if (shutdown_dod <= 0.0 || shutdown_dod >= 1.0)
    throw std::invalid_argument("shutdown_dod must lie in (0, 1)");
}

double drag_energy_wh(double density_kg_km3, double altitude_km,
                      double interval_s, const EnergyParams& p) {
  const double a_km = kEarthRadiusKm + altitude_km;
  const double v_ms = std::sqrt(kMuEarthKm3S2 / a_km) * 1000.0;
  const double rho_kg_m3 = density_kg_km3 * 1e-9;
  const double power_w =
      0.5 * rho_kg_m3 * v_ms * v_ms * v_ms * p.drag_coefficient *
      p.cross_section_m2;
  return power_w * interval_s / 3600.0;
}

double transmission_energy_wh(double rate_mbps, double duration_s,
                              const EnergyParams& p) {
  // Mb/s * s = Mb; Mb * W*min/Mb = W*min; /60 = Wh.
  return rate_mbps * duration_s * p.tx_wmin_per_mb / 60.0;
}

double annealing_energy_wh(double duration_s, const EnergyParams& p) {
  return p.anneal_w * duration_s / 3600.0;
}

double harvest_energy_wh(bool sunlit, double duration_s,
                         const EnergyParams& p) {
  return sunlit ? p.harvest_w * duration_s / 3600.0 : 0.0;
}

BatteryStepResult step_battery(const BatteryState& state, double consumed_wh,
                               double harvested_wh) {
  BatteryStepResult out;
  out.state = state;
  std::uint8_t exhausted = 0;
  kernels::active_ops().battery_step(&out.state.dod, &consumed_wh,
                                     &harvested_wh, 1.0 / state.capacity_wh,
                                     &exhausted, 1);
  out.exhausted = exhausted != 0;
  return out;
}

double recovery_energy_wh(double intensity, double altitude_km,
                          double interval_s, bool annealing_active,
                          const EnergyParams& ep,
                          const RadiationModelParams& rp) {
  double e = drag_energy_wh(density(intensity, rp), altitude_km, interval_s, ep);
  if (annealing_active) e += annealing_energy_wh(interval_s, ep);
  return e;
}

}  // namespace ralt
