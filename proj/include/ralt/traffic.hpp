#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ralt/constellation.hpp"
#include "ralt/rng.hpp"

namespace ralt {

struct UserCell {
  GroundSite site;
  double base_rate_mbps = 300.0;
  double population_weight = 1.0;
};

struct WeightedSite {
  GroundSite site;
  double weight = 0.0;
};

struct TrafficParams {
  int n_cells = 0;
  double base_rate_mbps = 300.0;
  double f_min = 0.3;      // diurnal trough multiplier
  double peak_hour = 20.0; // local hour of peak load

  void validate() const;
};

enum class FlowStatus { Active, Rerouted, Completed, Dropped };

struct Flow {
  int id = 0;
  int src_cell = 0;         // index into the cell list
  int dst_cell = 0;
  double rate_mbps = 0.0;   // refreshed each interval from the diurnal curve
  double created_at_s = 0.0;
  std::vector<int> path;    // node ids, empty when unrouted
  FlowStatus status = FlowStatus::Active;
  bool offloaded = false;   // Umbra ground-offload leg in effect
  int offload_gs = -1;      // site node of the terminal ground station
  double terrestrial_delay_s = 0.0;
};

// `latitude,longitude,weight` CSV, header first.
std::vector<WeightedSite> load_weighted_sites(const std::string& path);

// n cells sampled with replacement proportionally to site weights.
std::vector<UserCell> generate_cells(int n,
                                     const std::vector<WeightedSite>& dist,
                                     double base_rate_mbps, Rng& rng);

// Local-time load multiplier in [f_min, 1], cosine-shaped with the peak at
// `peak_hour` local and the trough 12 h opposite.
double diurnal_factor(double longitude_deg, double t_s,
                      const TrafficParams& p);

// Fixed random pairing (each cell targets one distinct other cell) decided
// once per scenario.
std::vector<int> pair_destinations(int n_cells, Rng& rng);

// One flow per cell at the diurnally adjusted rate.
std::vector<Flow> active_flows(const std::vector<UserCell>& cells,
                               const std::vector<int>& pairing, double t_s,
                               const TrafficParams& p);

}  // namespace ralt
