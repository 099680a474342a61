#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ralt/constellation.hpp"

namespace ralt {

enum class Policy { Ralt, Phoenix, Umbra };

Policy policy_from_string(const std::string& s);
std::string to_string(Policy p);

enum class RerouteReason { Initial, SleepOnPath, ShutdownOnPath };

// Directed per-interval routing graph. Satellite nodes come first, then
// ground-site nodes; ids index into the engine's node table and double as
// the deterministic tie-break order.
struct GraphEdge {
  int from = 0;
  int to = 0;
  double delay_s = 0.0;
  double battery_ddod = 0.0;
};

struct Graph {
  int n_nodes = 0;
  std::vector<GraphEdge> edges;

  // CSR view ordered by (from, to); rebuild after edges change shape.
  void finalize();
  bool finalized() const { return !offsets.empty(); }

  std::vector<int> offsets;     // size n_nodes + 1
  std::vector<int> edge_order;  // edge index per CSR slot
};

// Min-max normalization of one edge metric over the current graph; a
// constant metric maps to all zeros.
std::vector<double> minmax_normalize(const std::vector<double>& values);

// combined = alpha * norm(delay) + (1 - alpha) * norm(battery) per edge.
std::vector<double> combined_weights(const Graph& g, double alpha);

// Per-satellite battery charge of one edge in units of DoD. RALT prices
// transmission plus radiation recovery; PHOENIX only transmission; Umbra
// routes on delay alone.
double battery_cost_ddod(double tx_wh, double recovery_wh, double capacity_wh,
                         Policy policy);

struct PathResult {
  bool found = false;
  double cost = 0.0;
  std::vector<int> nodes;  // [src, ..., dst]; empty when src == dst
};

// Dijkstra over nonnegative weights with deterministic tie-breaking (nodes
// settle in (cost, id) order; equal-cost relaxations keep the smaller
// predecessor id). `allowed` may be empty (all nodes usable) or hold one
// byte per node.
PathResult shortest_path(const Graph& g, const std::vector<double>& weights,
                         int src, int dst,
                         const std::vector<std::uint8_t>& allowed = {});

// Everything route_flow needs from the engine's interval snapshot.
struct RoutingContext {
  const Graph* graph = nullptr;
  std::vector<std::uint8_t> node_is_sat;
  std::vector<double> node_recovery_wh;  // per node; zero for sites
  std::vector<int> gs_nodes;             // ground-station node ids
  std::vector<GroundSite> node_geo;      // geodetic location of site nodes
  double capacity_wh = 5000.0;
  double alpha = 0.5;
  double interval_s = 60.0;
  double tx_wmin_per_mb = 0.08;
};

struct RouteResult {
  std::vector<int> path;
  bool offloaded = false;
  int offload_gs = -1;
  double terrestrial_delay_s = 0.0;
};

// Routes one flow between ground nodes. Intermediate ground sites are never
// used as relays: RALT/PHOENIX paths may touch only src and dst on the
// ground, Umbra offload paths only src and the chosen ground station.
// `offload` selects Umbra's station-offload search (delay-only satellite
// segment plus a great-circle fiber leg to the destination). Returns
// std::nullopt when no feasible route exists this interval.
std::optional<RouteResult> route_flow(const RoutingContext& ctx, Policy policy,
                                      int src_node, int dst_node,
                                      double rate_mbps, bool offload);

// Test fixture: undirected edge list, one `u v delay_s ddod` row per line.
Graph load_fixture_graph(std::istream& in);

}  // namespace ralt
