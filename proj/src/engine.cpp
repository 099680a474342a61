#include "ralt/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ralt/kernels.hpp"
#include "ralt/power.hpp"

namespace ralt {

std::string to_string(SatMode m) {
  switch (m) {
    case SatMode::Active: return "active";
    case SatMode::Annealing: return "annealing";
    case SatMode::Sleep: return "sleep";
    case SatMode::Shutdown: return "shutdown";
  }
  return "active";
}

namespace {

double percentile(std::vector<double> v, double q) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const auto idx = static_cast<std::size_t>(
      std::min<double>(std::ceil(q * static_cast<double>(v.size())) - 1.0,
                       static_cast<double>(v.size() - 1)));
  return v[std::max<std::size_t>(idx, 0)];
}

}  // namespace

struct Engine::Impl {
  ScenarioConfig cfg;
  RadiationSeries series;

  // Satellites in (plane, slot) order; node ids: sats, then cells, then
  // ground stations.
  std::vector<OrbitalSlot> slots;
  int n = 0;
  std::vector<std::pair<int, int>> isl;  // index pairs

  // Orbital-plane bases for the position kernel.
  std::vector<double> ux, uy, uz, wx, wy, wz, cos_phi, sin_phi;
  std::vector<double> sat_x, sat_y, sat_z;

  // Ground nodes.
  std::vector<UserCell> cells;
  std::vector<GroundSite> stations;
  std::vector<Vec3> site_pos;  // cells then stations
  std::vector<GroundSite> node_geo;
  std::vector<int> gs_nodes;

  // Per-satellite state (SoA).
  std::vector<SatMode> mode;
  std::vector<int> sleep_remaining;
  std::vector<double> dod, beta_tid, beta_tnid;
  std::vector<std::vector<double>> tnid_local;  // [component][sat]
  std::vector<double> tnid_weight;              // normalized
  std::vector<double> rec_wh;                   // per-interval recovery term

  // Scratch and ledger.
  std::vector<double> gate, anneal_gate, consumed, harvested, dod_before;
  std::vector<std::uint8_t> eclipse, clamped, alive;
  std::vector<double> recovery_total_per_sat;

  std::vector<Flow> flow_list;
  std::vector<int> pairing;

  Rng see_rng{0};
  int step_index = 0;
  long total_reroutes = 0, total_drops = 0, total_sleeps = 0;
  int shutdowns_cum = 0;
  double consumed_total = 0.0, harvested_total = 0.0;
  std::vector<double> all_latencies;
  std::vector<IntervalMetrics> metric_rows;
  std::vector<TelemetryRow> telemetry_rows;
  bool telemetry_enabled = false;
  IntervalMetrics last_row;

  Impl(const ScenarioConfig& c, std::vector<WeightedSite> dist,
       std::vector<GroundSite> ground)
      : cfg(c), see_rng(derive_rng(c.seed, "see")) {
    cfg.validate();
    series = make_radiation_series(cfg);
    slots = build_constellation(cfg.constellation);
    n = static_cast<int>(slots.size());

    const auto pairs = isl_topology(cfg.constellation);
    isl.reserve(pairs.size());
    const int spp = cfg.constellation.sats_per_plane;
    for (const auto& [a, b] : pairs)
      isl.push_back({a.plane * spp + a.slot, b.plane * spp + b.slot});

    const auto nn = static_cast<std::size_t>(n);
    ux.resize(nn); uy.resize(nn); uz.resize(nn);
    wx.resize(nn); wy.resize(nn); wz.resize(nn);
    cos_phi.resize(nn); sin_phi.resize(nn);
    sat_x.resize(nn); sat_y.resize(nn); sat_z.resize(nn);
    const double incl = deg2rad(cfg.constellation.inclination_deg);
    for (std::size_t i = 0; i < nn; ++i) {
      const double raan = deg2rad(slots[i].raan_deg);
      ux[i] = std::cos(raan);
      uy[i] = std::sin(raan);
      uz[i] = 0.0;
      wx[i] = -std::sin(raan) * std::cos(incl);
      wy[i] = std::cos(raan) * std::cos(incl);
      wz[i] = std::sin(incl);
      const double phi = deg2rad(slots[i].phase_deg);
      cos_phi[i] = std::cos(phi);
      sin_phi[i] = std::sin(phi);
    }

    // Ground sites: stations come from the site list; fixed user_cell rows
    // are appended to the sampled cells.
    for (const auto& s : ground) {
      if (s.role == SiteRole::GroundStation)
        stations.push_back(s);
      else
        cells.push_back({s, cfg.traffic.base_rate_mbps, 1.0});
    }
    if (cfg.traffic.n_cells > 0) {
      Rng cell_rng = derive_rng(cfg.seed, "traffic.cells");
      auto sampled = generate_cells(cfg.traffic.n_cells, dist,
                                    cfg.traffic.base_rate_mbps, cell_rng);
      cells.insert(cells.end(), sampled.begin(), sampled.end());
    }
    if (cells.size() == 1)
      throw ConfigError("engine: a single user cell cannot form a flow pair");

    site_pos.reserve(cells.size() + stations.size());
    node_geo.assign(nn + cells.size() + stations.size(), GroundSite{});
    for (std::size_t i = 0; i < cells.size(); ++i) {
      site_pos.push_back(site_position(cells[i].site));
      node_geo[nn + i] = cells[i].site;
    }
    for (std::size_t i = 0; i < stations.size(); ++i) {
      site_pos.push_back(site_position(stations[i]));
      node_geo[nn + cells.size() + i] = stations[i];
      gs_nodes.push_back(static_cast<int>(nn + cells.size() + i));
    }

    mode.assign(nn, SatMode::Active);
    sleep_remaining.assign(nn, 0);
    dod.assign(nn, 0.0);
    beta_tid.assign(nn, 0.0);
    beta_tnid.assign(nn, 0.0);
    double wsum = 0.0;
    for (const auto& cmp : cfg.tnid_components) wsum += cmp.weight;
    if (cfg.tnid_components.empty() || wsum <= 0.0)
      throw ConfigError("engine: tnid components must carry positive weight");
    for (const auto& cmp : cfg.tnid_components) {
      tnid_weight.push_back(cmp.weight / wsum);
      tnid_local.emplace_back(nn, 0.0);
    }
    if (cfg.damage_init.initial_beta > 0.0 ||
        cfg.damage_init.initial_beta_jitter > 0.0) {
      Rng dmg_rng = derive_rng(cfg.seed, "damage.init");
      for (std::size_t i = 0; i < nn; ++i) {
        double b = cfg.damage_init.initial_beta;
        if (cfg.damage_init.initial_beta_jitter > 0.0)
          b += dmg_rng.next_double() * cfg.damage_init.initial_beta_jitter;
        beta_tid[i] = std::clamp(b, 0.0, cfg.damage.beta_tid_max);
        for (auto& comp : tnid_local) comp[i] = std::clamp(b, 0.0, 1.0);
      }
      refresh_tnid_aggregate();
    }

    rec_wh.assign(nn, 0.0);
    gate.assign(nn, 1.0);
    anneal_gate.assign(nn, 0.0);
    consumed.assign(nn, 0.0);
    harvested.assign(nn, 0.0);
    dod_before.assign(nn, 0.0);
    eclipse.assign(nn, 0);
    clamped.assign(nn, 0);
    alive.assign(nn, 1);
    recovery_total_per_sat.assign(nn, 0.0);

    if (cells.size() >= 2) {
      Rng pair_rng = derive_rng(cfg.seed, "traffic.pairing");
      pairing = pair_destinations(static_cast<int>(cells.size()), pair_rng);
      flow_list = active_flows(cells, pairing, 0.0, cfg.traffic);
    }
  }

  void refresh_tnid_aggregate() {
    std::fill(beta_tnid.begin(), beta_tnid.end(), 0.0);
    const auto& ops = kernels::active_ops();
    for (std::size_t c = 0; c < tnid_local.size(); ++c)
      ops.axpy(beta_tnid.data(), tnid_local[c].data(), tnid_weight[c],
               beta_tnid.size());
  }

  int cell_node(int cell_idx) const { return n + cell_idx; }

  Vec3 sun_direction(double t) const {
    Vec3 d = cfg.sun.direction.normalized();
    if (!cfg.sun.rotating) return d;
    const double ang = 2.0 * kPi / 86400.0 * t;
    const double c = std::cos(ang), s = std::sin(ang);
    return {d.x * c - d.y * s, d.x * s + d.y * c, d.z};
  }

  void propagate_all(double t) {
    const double wt = cfg.constellation.orbital_rate_rad_s() * t;
    kernels::active_ops().orbit_positions(
        ux.data(), uy.data(), uz.data(), wx.data(), wy.data(), wz.data(),
        cos_phi.data(), sin_phi.data(), std::cos(wt), std::sin(wt),
        cfg.constellation.semi_major_axis_km(), sat_x.data(), sat_y.data(),
        sat_z.data(), static_cast<std::size_t>(n));
  }

  Vec3 node_position(int node) const {
    if (node < n)
      return {sat_x[static_cast<std::size_t>(node)],
              sat_y[static_cast<std::size_t>(node)],
              sat_z[static_cast<std::size_t>(node)]};
    return site_pos[static_cast<std::size_t>(node - n)];
  }

  // Build the per-interval routing graph over Active/Annealing satellites
  // and all ground sites.
  void build_graph(Graph& g, RoutingContext& ctx) {
    const auto nn = static_cast<std::size_t>(n);
    const int n_nodes = n + static_cast<int>(site_pos.size());
    for (std::size_t i = 0; i < nn; ++i) {
      const bool fwd = mode[i] == SatMode::Active ||
                       (mode[i] == SatMode::Annealing && !cfg.engine.anneal_offline);
      alive[i] = fwd ? 1 : 0;
    }

    g.edges.clear();
    g.n_nodes = n_nodes;
    std::vector<double> ax, ay, az, bx, by, bz;
    std::vector<std::pair<int, int>> undirected;
    for (const auto& [a, b] : isl) {
      if (!alive[static_cast<std::size_t>(a)] ||
          !alive[static_cast<std::size_t>(b)])
        continue;
      undirected.push_back({a, b});
    }
    // Ground visibility edges per site.
    const double sin_min_el = std::sin(deg2rad(cfg.min_elevation_deg));
    std::vector<std::uint8_t> vis(nn);
    for (std::size_t s = 0; s < site_pos.size(); ++s) {
      const Vec3 gpos = site_pos[s];
      const Vec3 up = gpos.normalized();
      kernels::active_ops().visible_mask(sat_x.data(), sat_y.data(),
                                         sat_z.data(), gpos.x, gpos.y, gpos.z,
                                         up.x, up.y, up.z, sin_min_el,
                                         vis.data(), nn);
      const int site_node = n + static_cast<int>(s);
      for (std::size_t i = 0; i < nn; ++i)
        if (vis[i] && alive[i]) undirected.push_back({site_node, static_cast<int>(i)});
    }

    const std::size_t m = undirected.size();
    ax.resize(m); ay.resize(m); az.resize(m);
    bx.resize(m); by.resize(m); bz.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
      const Vec3 pa = node_position(undirected[e].first);
      const Vec3 pb = node_position(undirected[e].second);
      ax[e] = pa.x; ay[e] = pa.y; az[e] = pa.z;
      bx[e] = pb.x; by[e] = pb.y; bz[e] = pb.z;
    }
    std::vector<double> delay(m);
    if (m > 0)
      kernels::active_ops().pair_delay(ax.data(), ay.data(), az.data(),
                                       bx.data(), by.data(), bz.data(),
                                       1.0 / kLightSpeedKmS, delay.data(), m);
    g.edges.reserve(2 * m);
    for (std::size_t e = 0; e < m; ++e) {
      g.edges.push_back({undirected[e].first, undirected[e].second, delay[e], 0.0});
      g.edges.push_back({undirected[e].second, undirected[e].first, delay[e], 0.0});
    }
    g.finalize();

    ctx.graph = &g;
    ctx.node_is_sat.assign(static_cast<std::size_t>(n_nodes), 0);
    for (int i = 0; i < n; ++i) ctx.node_is_sat[static_cast<std::size_t>(i)] = 1;
    ctx.node_recovery_wh.assign(static_cast<std::size_t>(n_nodes), 0.0);
    for (int i = 0; i < n; ++i)
      ctx.node_recovery_wh[static_cast<std::size_t>(i)] =
          rec_wh[static_cast<std::size_t>(i)];
    ctx.gs_nodes = gs_nodes;
    ctx.node_geo = node_geo;
    ctx.capacity_wh = cfg.battery.capacity_wh;
    ctx.alpha = cfg.alpha;
    ctx.interval_s = cfg.engine.interval_s;
    ctx.tx_wmin_per_mb = cfg.energy.tx_wmin_per_mb;
  }

  bool path_unavailable(const Flow& f) const {
    for (const int node : f.path) {
      if (node >= n) continue;
      if (!alive[static_cast<std::size_t>(node)]) return true;
    }
    return false;
  }

  bool path_has_shutdown(const Flow& f) const {
    for (const int node : f.path)
      if (node < n && mode[static_cast<std::size_t>(node)] == SatMode::Shutdown)
        return true;
    return false;
  }

  double flow_latency(const Flow& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < f.path.size(); ++i) {
      const Vec3 a = node_position(f.path[i]);
      const Vec3 b = node_position(f.path[i + 1]);
      acc += (a - b).norm() / kLightSpeedKmS;
    }
    return acc + f.terrestrial_delay_s;
  }

  IntervalMetrics step() {
    const double t = static_cast<double>(step_index) * cfg.engine.interval_s;
    const double dt = cfg.engine.interval_s;
    const double horizon = cfg.engine.horizon_s;
    if (t >= horizon)
      throw std::logic_error("engine: stepping past the configured horizon");
    const auto nn = static_cast<std::size_t>(n);

    IntervalMetrics row;
    row.t = t;

    // (1) propagate.
    propagate_all(t);

    // (2) environment.
    const double intensity = intensity_at(series, t);
    const double rho = density(intensity, cfg.radiation);
    const double drag_wh =
        drag_energy_wh(rho, cfg.constellation.altitude_km, dt, cfg.energy);
    const double anneal_wh = annealing_energy_wh(dt, cfg.energy);
    const double harvest_full_wh = harvest_energy_wh(true, dt, cfg.energy);
    const double p_sleep = sleep_probability(intensity, cfg.radiation);

    // (3) damage accumulation on non-shutdown satellites.
    for (std::size_t i = 0; i < nn; ++i)
      gate[i] = mode[i] == SatMode::Shutdown ? 0.0 : 1.0;
    const auto& ops = kernels::active_ops();
    ops.gated_saturating_add(beta_tid.data(), gate.data(),
                             cfg.radiation.tid_rate_per_s * intensity * dt,
                             cfg.damage.beta_tid_max, nn);
    for (auto& comp : tnid_local)
      ops.gated_saturating_add(comp.data(), gate.data(),
                               cfg.radiation.tnid_rate_per_s * intensity * dt,
                               1.0, nn);
    refresh_tnid_aggregate();

    // Sleep countdown: a satellite sleeps exactly sleep_intervals intervals.
    for (std::size_t i = 0; i < nn; ++i) {
      if (mode[i] == SatMode::Sleep && --sleep_remaining[i] <= 0)
        mode[i] = SatMode::Active;
    }

    // (4) SEE sleep events among Active satellites. One uniform per
    // satellite in (plane, slot) order regardless of mode, so paired-policy
    // runs consume identical randomness.
    for (std::size_t i = 0; i < nn; ++i) {
      const double u = see_rng.next_double();
      if (u < p_sleep && mode[i] == SatMode::Active) {
        mode[i] = SatMode::Sleep;
        sleep_remaining[i] = cfg.engine.sleep_intervals;
        ++row.sleeps;
      }
    }

    // (5) annealing triggers and energy feasibility.
    const double inv_cap = 1.0 / cfg.battery.capacity_wh;
    for (std::size_t i = 0; i < nn; ++i) {
      const bool due =
          needs_annealing(beta_tid[i], beta_tnid[i], cfg.damage).any();
      const bool annealing_active = mode[i] == SatMode::Annealing || due;
      rec_wh[i] = drag_wh + (annealing_active ? anneal_wh : 0.0);
      if (mode[i] != SatMode::Active && mode[i] != SatMode::Annealing) continue;
      if (dod[i] + rec_wh[i] * inv_cap > cfg.energy.shutdown_dod) {
        // Cannot afford recovery: sleep-bound, annealing deferred.
        mode[i] = SatMode::Sleep;
        sleep_remaining[i] = cfg.engine.sleep_intervals;
        ++row.sleeps;
      } else if (mode[i] == SatMode::Active && due) {
        mode[i] = SatMode::Annealing;
      }
    }

    // (6) rerouting of affected flows on the policy's weighted graph.
    Graph graph;
    RoutingContext ctx;
    build_graph(graph, ctx);
    for (auto& f : flow_list) {
      f.rate_mbps =
          cells[static_cast<std::size_t>(f.src_cell)].base_rate_mbps *
          diurnal_factor(
              cells[static_cast<std::size_t>(f.src_cell)].site.longitude_deg,
              t, cfg.traffic);
    }
    for (auto& f : flow_list) {
      RerouteReason reason;
      if (f.path.empty())
        reason = RerouteReason::Initial;
      else if (path_has_shutdown(f))
        reason = RerouteReason::ShutdownOnPath;
      else if (path_unavailable(f))
        reason = RerouteReason::SleepOnPath;
      else
        continue;

      const bool offload =
          cfg.policy == Policy::Umbra && reason != RerouteReason::Initial;
      auto result = route_flow(ctx, cfg.policy, cell_node(f.src_cell),
                               cell_node(f.dst_cell), f.rate_mbps, offload);
      if (result.has_value()) {
        f.path = std::move(result->path);
        f.offloaded = result->offloaded;
        f.offload_gs = result->offload_gs;
        f.terrestrial_delay_s = result->terrestrial_delay_s;
        f.status = reason == RerouteReason::Initial ? FlowStatus::Active
                                                    : FlowStatus::Rerouted;
        if (reason != RerouteReason::Initial) ++row.reroutes;
      } else {
        f.path.clear();
        f.offloaded = false;
        f.offload_gs = -1;
        f.terrestrial_delay_s = 0.0;
        f.status = FlowStatus::Dropped;
      }
    }

    // (7) energy charges: drag for every non-shutdown satellite, annealing
    // draw for Annealing ones, transmission per on-path satellite, harvest
    // outside eclipse.
    std::fill(consumed.begin(), consumed.end(), 0.0);
    std::fill(harvested.begin(), harvested.end(), 0.0);
    for (std::size_t i = 0; i < nn; ++i) {
      anneal_gate[i] = mode[i] == SatMode::Annealing ? 1.0 : 0.0;
      if (mode[i] == SatMode::Shutdown) continue;
      consumed[i] += drag_wh;
      recovery_total_per_sat[i] += drag_wh;
      if (mode[i] == SatMode::Annealing) {
        consumed[i] += anneal_wh;
        recovery_total_per_sat[i] += anneal_wh;
      }
    }
    // Annealing recovery applied over this interval's duration.
    const double anneal_dec = cfg.damage.anneal_rate_per_h * dt / 3600.0;
    ops.gated_saturating_sub(beta_tid.data(), anneal_gate.data(), anneal_dec, nn);
    for (auto& comp : tnid_local)
      ops.gated_saturating_sub(comp.data(), anneal_gate.data(), anneal_dec, nn);
    refresh_tnid_aggregate();
    for (std::size_t i = 0; i < nn; ++i) {
      if (mode[i] != SatMode::Annealing) continue;
      bool done = beta_tid[i] <= 0.0;
      for (const auto& comp : tnid_local) done = done && comp[i] <= 0.0;
      if (done) mode[i] = SatMode::Active;
    }

    for (const auto& f : flow_list) {
      if (f.status == FlowStatus::Dropped || f.path.empty()) continue;
      const double tx =
          transmission_energy_wh(f.rate_mbps, dt, cfg.energy);
      for (const int node : f.path)
        if (node < n) consumed[static_cast<std::size_t>(node)] += tx;
    }

    const Vec3 sun = sun_direction(t);
    ops.eclipse_mask(sat_x.data(), sat_y.data(), sat_z.data(), sun.x, sun.y,
                     sun.z, kEarthRadiusKm, eclipse.data(), nn);
    for (std::size_t i = 0; i < nn; ++i)
      if (mode[i] != SatMode::Shutdown && !eclipse[i])
        harvested[i] = harvest_full_wh;

    // (8) battery update and shutdown marking.
    std::copy(dod.begin(), dod.end(), dod_before.begin());
    ops.battery_step(dod.data(), consumed.data(), harvested.data(), inv_cap,
                     clamped.data(), nn);
    for (std::size_t i = 0; i < nn; ++i) {
      consumed_total += consumed[i];
      harvested_total += harvested[i];
      if (mode[i] != SatMode::Shutdown && dod[i] > cfg.energy.shutdown_dod) {
        mode[i] = SatMode::Shutdown;  // permanent for the scenario
        ++shutdowns_cum;
      }
    }

    // (9) metrics and telemetry.
    double ddod_sum = 0.0;
    int ddod_count = 0;
    for (std::size_t i = 0; i < nn; ++i) {
      if (gate[i] == 0.0) continue;  // was shutdown before this step
      const double inc = std::max(0.0, dod[i] - dod_before[i]);
      ddod_sum += inc;
      row.max_ddod = std::max(row.max_ddod, inc);
      ++ddod_count;
    }
    row.mean_ddod = ddod_count > 0 ? ddod_sum / ddod_count : 0.0;

    std::vector<double> latencies;
    for (auto& f : flow_list) {
      if (f.status == FlowStatus::Dropped || f.path.empty()) {
        ++row.drops;
        continue;
      }
      latencies.push_back(flow_latency(f));
    }
    if (!latencies.empty()) {
      row.mean_latency_s =
          std::accumulate(latencies.begin(), latencies.end(), 0.0) /
          static_cast<double>(latencies.size());
      row.p95_latency_s = percentile(latencies, 0.95);
    }
    all_latencies.insert(all_latencies.end(), latencies.begin(),
                         latencies.end());
    row.shutdowns_cum = shutdowns_cum;
    total_reroutes += row.reroutes;
    total_drops += row.drops;
    total_sleeps += row.sleeps;

    if (telemetry_enabled) {
      for (std::size_t i = 0; i < nn; ++i)
        telemetry_rows.push_back({t, slots[i].id.plane, slots[i].id.slot,
                                  dod[i], beta_tid[i], beta_tnid[i], mode[i]});
    }
    metric_rows.push_back(row);
    last_row = row;
    ++step_index;
    return row;
  }

  RunReport run(StepObserver* observer, const Engine& self) {
    const auto steps = static_cast<int>(
        std::llround(cfg.engine.horizon_s / cfg.engine.interval_s));
    for (int k = 0; k < steps; ++k) {
      const IntervalMetrics row = step();
      if (observer) observer->on_step(self, row);
    }
    RunReport report;
    report.metrics = metric_rows;
    report.telemetry = telemetry_rows;
    auto& s = report.summary;
    s.policy = to_string(cfg.policy);
    s.seed = cfg.seed;
    s.intervals = steps;
    s.n_satellites = n;
    s.n_flows = static_cast<int>(flow_list.size());
    double ddod_acc = 0.0;
    for (const auto& r : metric_rows) ddod_acc += r.mean_ddod;
    s.mean_ddod_per_interval =
        metric_rows.empty() ? 0.0 : ddod_acc / static_cast<double>(metric_rows.size());
    if (!all_latencies.empty()) {
      s.latency_mean_s =
          std::accumulate(all_latencies.begin(), all_latencies.end(), 0.0) /
          static_cast<double>(all_latencies.size());
      s.latency_p50_s = percentile(all_latencies, 0.50);
      s.latency_p95_s = percentile(all_latencies, 0.95);
    }
    s.total_reroutes = total_reroutes;
    s.total_drops = total_drops;
    s.total_sleep_events = total_sleeps;
    s.total_shutdowns = shutdowns_cum;
    s.consumed_wh_total = consumed_total;
    s.harvested_wh_total = harvested_total;
    s.recovery_wh_total = std::accumulate(recovery_total_per_sat.begin(),
                                          recovery_total_per_sat.end(), 0.0);
    s.recovery_share_of_capacity =
        s.recovery_wh_total / (cfg.battery.capacity_wh * n);
    s.kernels_backend = kernels::active_backend_name();
    return report;
  }
};

Engine::Engine(const ScenarioConfig& cfg)
    : Engine(cfg,
             cfg.traffic.n_cells > 0
                 ? load_weighted_sites(cfg.user_distribution_csv)
                 : std::vector<WeightedSite>{},
             load_ground_sites(cfg.ground_sites_csv)) {}

Engine::Engine(const ScenarioConfig& cfg, std::vector<WeightedSite> dist,
               std::vector<GroundSite> ground)
    : impl_(std::make_unique<Impl>(cfg, std::move(dist), std::move(ground))) {}

Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

void Engine::set_telemetry_enabled(bool enabled) {
  impl_->telemetry_enabled = enabled;
}

IntervalMetrics Engine::step() { return impl_->step(); }

RunReport Engine::run(StepObserver* observer) {
  return impl_->run(observer, *this);
}

const ScenarioConfig& Engine::config() const { return impl_->cfg; }
int Engine::n_sats() const { return impl_->n; }
int Engine::n_cells() const { return static_cast<int>(impl_->cells.size()); }
int Engine::steps_done() const { return impl_->step_index; }
double Engine::now_s() const {
  return impl_->step_index * impl_->cfg.engine.interval_s;
}
SatMode Engine::mode(int sat) const {
  return impl_->mode[static_cast<std::size_t>(sat)];
}
double Engine::dod(int sat) const {
  return impl_->dod[static_cast<std::size_t>(sat)];
}
double Engine::beta_tid(int sat) const {
  return impl_->beta_tid[static_cast<std::size_t>(sat)];
}
double Engine::beta_tnid(int sat) const {
  return impl_->beta_tnid[static_cast<std::size_t>(sat)];
}
const std::vector<Flow>& Engine::flows() const { return impl_->flow_list; }
int Engine::sat_node_count() const { return impl_->n; }
double Engine::last_consumed_wh(int sat) const {
  return impl_->consumed[static_cast<std::size_t>(sat)];
}
double Engine::last_harvested_wh(int sat) const {
  return impl_->harvested[static_cast<std::size_t>(sat)];
}
double Engine::last_dod_before(int sat) const {
  return impl_->dod_before[static_cast<std::size_t>(sat)];
}
bool Engine::last_clamped(int sat) const {
  return impl_->clamped[static_cast<std::size_t>(sat)] != 0;
}

}  // namespace ralt
