#include "ralt/report.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ralt {

using nlohmann::json;

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

std::string metrics_csv(const std::vector<IntervalMetrics>& rows) {
  std::ostringstream os;
  os << "t,mean_ddod,max_ddod,mean_latency_s,p95_latency_s,reroutes,sleeps,"
        "shutdowns_cum,drops\n";
  for (const auto& r : rows) {
    os << fmt(r.t) << ',' << fmt(r.mean_ddod) << ',' << fmt(r.max_ddod) << ','
       << fmt(r.mean_latency_s) << ',' << fmt(r.p95_latency_s) << ','
       << r.reroutes << ',' << r.sleeps << ',' << r.shutdowns_cum << ','
       << r.drops << '\n';
  }
  return os.str();
}

std::string telemetry_csv(const std::vector<TelemetryRow>& rows) {
  std::ostringstream os;
  os << "t,plane,slot,dod,beta_tid,beta_tnid,mode\n";
  for (const auto& r : rows) {
    os << fmt(r.t) << ',' << r.plane << ',' << r.slot << ',' << fmt(r.dod)
       << ',' << fmt(r.beta_tid) << ',' << fmt(r.beta_tnid) << ','
       << to_string(r.mode) << '\n';
  }
  return os.str();
}

std::string summary_json(const RunSummary& s, const ScenarioConfig& cfg) {
  json j;
  j["policy"] = s.policy;
  j["seed"] = s.seed;
  j["intervals"] = s.intervals;
  j["n_satellites"] = s.n_satellites;
  j["n_flows"] = s.n_flows;
  j["mean_ddod_per_interval"] = s.mean_ddod_per_interval;
  j["latency"] = {{"mean_s", s.latency_mean_s},
                  {"p50_s", s.latency_p50_s},
                  {"p95_s", s.latency_p95_s}};
  j["totals"] = {{"reroutes", s.total_reroutes},
                 {"drops", s.total_drops},
                 {"sleep_events", s.total_sleep_events},
                 {"shutdowns", s.total_shutdowns},
                 {"consumed_wh", s.consumed_wh_total},
                 {"harvested_wh", s.harvested_wh_total},
                 {"recovery_wh", s.recovery_wh_total}};
  j["recovery_share_of_capacity"] = s.recovery_share_of_capacity;
  j["kernels_backend"] = s.kernels_backend;
  j["config"] = json::parse(config_to_json(cfg));
  return j.dump(2) + "\n";
}

std::string manifest_json(const ScenarioConfig& cfg,
                          const std::string& config_path,
                          const std::string& out_dir,
                          const std::vector<std::string>& overrides) {
  json j;
  j["tool"] = "ralt";
  j["version"] = kToolVersion;
  j["config_path"] = config_path;
  j["out_dir"] = out_dir;
  j["seed"] = cfg.seed;
  j["overrides"] = overrides;
  j["resolved_config"] = json::parse(config_to_json(cfg));
  return j.dump(2) + "\n";
}

std::string comparison_csv(const std::vector<CompareCell>& cells,
                           const std::vector<Policy>& policies) {
  struct Agg {
    double ddod = 0, latency = 0, p95 = 0, shutdowns = 0, reroutes = 0,
           drops = 0;
    int count = 0;
  };
  std::map<std::pair<std::string, std::string>, Agg> by_cell;
  for (const auto& c : cells) {
    auto& a = by_cell[{to_string(c.level), to_string(c.policy)}];
    a.ddod += c.summary.mean_ddod_per_interval;
    a.latency += c.summary.latency_mean_s;
    a.p95 += c.summary.latency_p95_s;
    a.shutdowns += c.summary.total_shutdowns;
    a.reroutes += static_cast<double>(c.summary.total_reroutes);
    a.drops += static_cast<double>(c.summary.total_drops);
    ++a.count;
  }
  auto mean = [](double sum, int n) { return n > 0 ? sum / n : 0.0; };

  std::ostringstream os;
  os << "level,policy,seeds,mean_ddod,latency_mean_s,latency_p95_s,"
        "shutdowns_mean,reroutes_mean,drops_mean";
  for (const auto metric : {"ddod", "latency", "shutdowns"})
    for (const auto p : policies)
      os << ',' << metric << "_reduction_vs_" << to_string(p) << "_pct";
  os << '\n';

  const std::vector<const char*> levels = {"low", "mean", "high", "custom"};
  for (const char* level : levels) {
    for (const auto self : policies) {
      const auto it = by_cell.find({level, to_string(self)});
      if (it == by_cell.end()) continue;
      const auto& a = it->second;
      os << level << ',' << to_string(self) << ',' << a.count << ','
         << fmt(mean(a.ddod, a.count)) << ',' << fmt(mean(a.latency, a.count))
         << ',' << fmt(mean(a.p95, a.count)) << ','
         << fmt(mean(a.shutdowns, a.count)) << ','
         << fmt(mean(a.reroutes, a.count)) << ','
         << fmt(mean(a.drops, a.count));
      auto reduction = [&](auto metric_of) {
        for (const auto other : policies) {
          const auto oit = by_cell.find({level, to_string(other)});
          double red = 0.0;
          if (oit != by_cell.end()) {
            const double mine = metric_of(a);
            const double theirs = metric_of(oit->second);
            if (theirs != 0.0) red = (theirs - mine) / theirs * 100.0;
          }
          os << ',' << fmt(red);
        }
      };
      reduction([&](const Agg& x) { return mean(x.ddod, x.count); });
      reduction([&](const Agg& x) { return mean(x.latency, x.count); });
      reduction([&](const Agg& x) { return mean(x.shutdowns, x.count); });
      os << '\n';
    }
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace ralt
