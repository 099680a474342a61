#include "ralt/routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "ralt/kernels.hpp"
#include "ralt/power.hpp"

namespace ralt {

Policy policy_from_string(const std::string& s) {
  if (s == "ralt") return Policy::Ralt;
  if (s == "phoenix") return Policy::Phoenix;
  if (s == "umbra") return Policy::Umbra;
  throw std::invalid_argument("unknown policy: " + s);
}

std::string to_string(Policy p) {
  switch (p) {
    case Policy::Ralt: return "ralt";
    case Policy::Phoenix: return "phoenix";
    case Policy::Umbra: return "umbra";
  }
  return "ralt";
}

void Graph::finalize() {
  offsets.assign(static_cast<std::size_t>(n_nodes) + 1, 0);
  edge_order.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) edge_order[i] = static_cast<int>(i);
  std::sort(edge_order.begin(), edge_order.end(), [&](int a, int b) {
    const auto& ea = edges[static_cast<std::size_t>(a)];
    const auto& eb = edges[static_cast<std::size_t>(b)];
    if (ea.from != eb.from) return ea.from < eb.from;
    return ea.to < eb.to;
  });
  for (const auto& e : edges) ++offsets[static_cast<std::size_t>(e.from) + 1];
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
}

std::vector<double> minmax_normalize(const std::vector<double>& values) {
  if (values.empty()) return {};
  double mn = 0.0, mx = 0.0;
  kernels::active_ops().minmax(values.data(), values.size(), &mn, &mx);
  const double scale = mx > mn ? 1.0 / (mx - mn) : 0.0;
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out[i] = (values[i] - mn) * scale;
  return out;
}

std::vector<double> combined_weights(const Graph& g, double alpha) {
  std::vector<double> delay(g.edges.size()), batt(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    delay[i] = g.edges[i].delay_s;
    batt[i] = g.edges[i].battery_ddod;
  }
  std::vector<double> out(g.edges.size());
  if (out.empty()) return out;
  double dmin = 0, dmax = 0, bmin = 0, bmax = 0;
  const auto& ops = kernels::active_ops();
  ops.minmax(delay.data(), delay.size(), &dmin, &dmax);
  ops.minmax(batt.data(), batt.size(), &bmin, &bmax);
  const double dscale = dmax > dmin ? 1.0 / (dmax - dmin) : 0.0;
  const double bscale = bmax > bmin ? 1.0 / (bmax - bmin) : 0.0;
  ops.combine_weights(delay.data(), batt.data(), dmin, dscale, bmin, bscale,
                      alpha, out.data(), out.size());
  return out;
}

double battery_cost_ddod(double tx_wh, double recovery_wh, double capacity_wh,
                         Policy policy) {
  switch (policy) {
    case Policy::Ralt: return (tx_wh + recovery_wh) / capacity_wh;
    case Policy::Phoenix: return tx_wh / capacity_wh;
    case Policy::Umbra: return 0.0;
  }
  return 0.0;
}

PathResult shortest_path(const Graph& g, const std::vector<double>& weights,
                         int src, int dst,
                         const std::vector<std::uint8_t>& allowed) {
  PathResult result;
  if (src < 0 || src >= g.n_nodes || dst < 0 || dst >= g.n_nodes)
    return result;
  if (src == dst) {
    result.found = true;
    return result;  // empty path, zero cost
  }
  if (!g.finalized())
    throw std::logic_error("shortest_path: graph not finalized");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(static_cast<std::size_t>(g.n_nodes), kInf);
  std::vector<int> pred(static_cast<std::size_t>(g.n_nodes), -1);
  std::vector<std::uint8_t> done(static_cast<std::size_t>(g.n_nodes), 0);
  using Item = std::pair<double, int>;  // (cost, node): ties settle low ids first
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[static_cast<std::size_t>(src)] = 0.0;
  heap.push({0.0, src});

  auto usable = [&](int node) {
    return allowed.empty() || allowed[static_cast<std::size_t>(node)] != 0;
  };

  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (done[static_cast<std::size_t>(u)]) continue;
    done[static_cast<std::size_t>(u)] = 1;
    if (u == dst) break;
    for (int k = g.offsets[static_cast<std::size_t>(u)];
         k < g.offsets[static_cast<std::size_t>(u) + 1]; ++k) {
      const auto& e = g.edges[static_cast<std::size_t>(g.edge_order[static_cast<std::size_t>(k)])];
      if (e.to == src || !usable(e.to)) continue;
      const double nd = d + weights[static_cast<std::size_t>(g.edge_order[static_cast<std::size_t>(k)])];
      auto& dv = dist[static_cast<std::size_t>(e.to)];
      auto& pv = pred[static_cast<std::size_t>(e.to)];
      if (nd < dv) {
        dv = nd;
        pv = u;
        heap.push({nd, e.to});
      } else if (nd == dv && u < pv && !done[static_cast<std::size_t>(e.to)]) {
        pv = u;  // equal cost: keep the lexicographically smaller predecessor
      }
    }
  }

  if (dist[static_cast<std::size_t>(dst)] == kInf) return result;
  result.found = true;
  result.cost = dist[static_cast<std::size_t>(dst)];
  for (int v = dst; v != -1; v = pred[static_cast<std::size_t>(v)])
    result.nodes.push_back(v);
  std::reverse(result.nodes.begin(), result.nodes.end());
  return result;
}

namespace {

std::vector<std::uint8_t> query_mask(const RoutingContext& ctx, int src,
                                     int dst, bool include_gs) {
  const auto n = static_cast<std::size_t>(ctx.graph->n_nodes);
  std::vector<std::uint8_t> allowed(n, 0);
  for (std::size_t i = 0; i < n; ++i) allowed[i] = ctx.node_is_sat[i];
  allowed[static_cast<std::size_t>(src)] = 1;
  if (dst >= 0) allowed[static_cast<std::size_t>(dst)] = 1;
  if (include_gs)
    for (const int g : ctx.gs_nodes) allowed[static_cast<std::size_t>(g)] = 1;
  return allowed;
}

}  // namespace

std::optional<RouteResult> route_flow(const RoutingContext& ctx, Policy policy,
                                      int src_node, int dst_node,
                                      double rate_mbps, bool offload) {
  const Graph& base = *ctx.graph;
  if (policy == Policy::Umbra && offload) {
    // Delay-only satellite segment to the station minimizing segment delay
    // plus the terrestrial fiber leg to the destination.
    std::vector<double> w(base.edges.size());
    for (std::size_t i = 0; i < base.edges.size(); ++i)
      w[i] = base.edges[i].delay_s;
    const auto allowed = query_mask(ctx, src_node, -1, true);
    double best = std::numeric_limits<double>::infinity();
    RouteResult out;
    for (const int gs : ctx.gs_nodes) {
      auto seg = shortest_path(base, w, src_node, gs, allowed);
      if (!seg.found) continue;
      const auto& g1 = ctx.node_geo[static_cast<std::size_t>(gs)];
      const auto& g2 = ctx.node_geo[static_cast<std::size_t>(dst_node)];
      const double terr =
          great_circle_km(g1.latitude_deg, g1.longitude_deg, g2.latitude_deg,
                          g2.longitude_deg) /
          (kFiberVelocityFactor * kLightSpeedKmS);
      const double total = seg.cost + terr;
      if (total < best) {
        best = total;
        out.path = std::move(seg.nodes);
        out.offloaded = true;
        out.offload_gs = gs;
        out.terrestrial_delay_s = terr;
      }
    }
    if (!std::isfinite(best)) return std::nullopt;
    return out;
  }

  // Satellite path between the two ground endpoints.
  Graph g = base;  // per-query battery fill; topology shared
  const double tx_wh = rate_mbps * ctx.interval_s * ctx.tx_wmin_per_mb / 60.0;
  for (auto& e : g.edges) {
    const bool head_sat = ctx.node_is_sat[static_cast<std::size_t>(e.to)] != 0;
    e.battery_ddod =
        head_sat ? battery_cost_ddod(
                       tx_wh, ctx.node_recovery_wh[static_cast<std::size_t>(e.to)],
                       ctx.capacity_wh, policy)
                 : 0.0;
  }
  std::vector<double> w;
  if (policy == Policy::Umbra) {
    w.resize(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) w[i] = g.edges[i].delay_s;
  } else {
    w = combined_weights(g, ctx.alpha);
  }
  const auto allowed = query_mask(ctx, src_node, dst_node, false);
  auto path = shortest_path(g, w, src_node, dst_node, allowed);
  if (!path.found) return std::nullopt;
  RouteResult out;
  out.path = std::move(path.nodes);
  return out;
}

Graph load_fixture_graph(std::istream& in) {
  Graph g;
  std::string line;
  int max_node = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    int u, v;
    double delay, ddod;
    if (!(row >> u >> v >> delay >> ddod))
      throw std::runtime_error("fixture graph: expected `u v delay_s ddod`");
    g.edges.push_back({u, v, delay, ddod});
    g.edges.push_back({v, u, delay, ddod});
    max_node = std::max({max_node, u, v});
  }
  g.n_nodes = max_node + 1;
  g.finalize();
  return g;
}

}  // namespace ralt
