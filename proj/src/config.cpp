#include "ralt/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ralt {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& section,
                    std::initializer_list<const char*> known) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok)
      throw ConfigError("config: unknown key `" + section +
                        (section.empty() ? "" : ".") + key + "`");
  }
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) {
    try {
      out = obj.at(key).get<T>();
    } catch (const json::exception&) {
      throw ConfigError(std::string("config: bad value for `") + key + "`");
    }
  }
}

ConstellationKind kind_from_string(const std::string& s) {
  if (s == "walker_delta") return ConstellationKind::WalkerDelta;
  if (s == "near_polar_star") return ConstellationKind::NearPolarStar;
  throw ConfigError("config: unknown constellation kind `" + s + "`");
}

std::string kind_to_string(ConstellationKind k) {
  return k == ConstellationKind::WalkerDelta ? "walker_delta"
                                             : "near_polar_star";
}

ScenarioConfig from_json(const json& j) {
  ScenarioConfig cfg;
  reject_unknown(j, "",
                 {"constellation", "radiation", "battery", "energy", "damage",
                  "traffic", "sites", "routing", "engine", "sun", "policy",
                  "seed"});

  if (j.contains("constellation")) {
    const auto& c = j.at("constellation");
    reject_unknown(c, "constellation",
                   {"kind", "planes", "sats_per_plane", "altitude_km",
                    "inclination_deg", "phasing_offset_deg"});
    std::string kind = kind_to_string(cfg.constellation.kind);
    read(c, "kind", kind);
    cfg.constellation.kind = kind_from_string(kind);
    read(c, "planes", cfg.constellation.num_planes);
    read(c, "sats_per_plane", cfg.constellation.sats_per_plane);
    read(c, "altitude_km", cfg.constellation.altitude_km);
    read(c, "inclination_deg", cfg.constellation.inclination_deg);
    read(c, "phasing_offset_deg", cfg.constellation.phasing_offset_deg);
  }

  if (j.contains("radiation")) {
    const auto& r = j.at("radiation");
    reject_unknown(r, "radiation",
                   {"source", "level", "path", "constant_intensity", "jitter",
                    "sample_interval_s", "density_base_kg_km3", "density_gain",
                    "sleep_p_min", "sleep_p_max", "sleep_steepness"});
    read(r, "source", cfg.radiation_source.source);
    std::string level = to_string(cfg.radiation_source.level);
    read(r, "level", level);
    cfg.radiation_source.level = radiation_level_from_string(level);
    read(r, "path", cfg.radiation_source.path);
    read(r, "constant_intensity", cfg.radiation_source.constant_intensity);
    read(r, "jitter", cfg.radiation_source.jitter);
    read(r, "sample_interval_s", cfg.radiation_source.sample_interval_s);
    read(r, "density_base_kg_km3", cfg.radiation.density_base_kg_km3);
    read(r, "density_gain", cfg.radiation.density_gain);
    read(r, "sleep_p_min", cfg.radiation.sleep_p_min);
    read(r, "sleep_p_max", cfg.radiation.sleep_p_max);
    read(r, "sleep_steepness", cfg.radiation.sleep_steepness);
  }

  if (j.contains("battery")) {
    const auto& b = j.at("battery");
    reject_unknown(b, "battery", {"capacity_wh", "shutdown_dod"});
    read(b, "capacity_wh", cfg.battery.capacity_wh);
    read(b, "shutdown_dod", cfg.energy.shutdown_dod);
  }

  if (j.contains("energy")) {
    const auto& e = j.at("energy");
    reject_unknown(e, "energy",
                   {"anneal_w", "tx_wmin_per_mb", "harvest_w", "cd",
                    "area_m2"});
    read(e, "anneal_w", cfg.energy.anneal_w);
    read(e, "tx_wmin_per_mb", cfg.energy.tx_wmin_per_mb);
    read(e, "harvest_w", cfg.energy.harvest_w);
    read(e, "cd", cfg.energy.drag_coefficient);
    read(e, "area_m2", cfg.energy.cross_section_m2);
  }

  if (j.contains("damage")) {
    const auto& d = j.at("damage");
    reject_unknown(d, "damage",
                   {"gamma_tid", "gamma_tnid", "beta_max_tid", "beta_max_tnid",
                    "tid_rate", "tnid_rate", "anneal_rate_per_h",
                    "initial_beta", "initial_beta_jitter", "anneal_offline",
                    "tnid_components"});
    read(d, "gamma_tid", cfg.damage.gamma_tid);
    read(d, "gamma_tnid", cfg.damage.gamma_tnid);
    read(d, "beta_max_tid", cfg.damage.beta_tid_max);
    read(d, "beta_max_tnid", cfg.damage.beta_tnid_max);
    read(d, "tid_rate", cfg.radiation.tid_rate_per_s);
    read(d, "tnid_rate", cfg.radiation.tnid_rate_per_s);
    read(d, "anneal_rate_per_h", cfg.damage.anneal_rate_per_h);
    read(d, "initial_beta", cfg.damage_init.initial_beta);
    read(d, "initial_beta_jitter", cfg.damage_init.initial_beta_jitter);
    read(d, "anneal_offline", cfg.engine.anneal_offline);
    if (d.contains("tnid_components")) {
      cfg.tnid_components.clear();
      for (const auto& c : d.at("tnid_components")) {
        TnidComponent tc;
        tc.name = c.at("name").get<std::string>();
        tc.weight = c.at("weight").get<double>();
        cfg.tnid_components.push_back(tc);
      }
    }
  }

  if (j.contains("traffic")) {
    const auto& t = j.at("traffic");
    reject_unknown(t, "traffic",
                   {"n_cells", "base_rate_mbps", "f_min", "peak_hour",
                    "distribution_csv"});
    read(t, "n_cells", cfg.traffic.n_cells);
    read(t, "base_rate_mbps", cfg.traffic.base_rate_mbps);
    read(t, "f_min", cfg.traffic.f_min);
    read(t, "peak_hour", cfg.traffic.peak_hour);
    read(t, "distribution_csv", cfg.user_distribution_csv);
  }

  if (j.contains("sites")) {
    const auto& s = j.at("sites");
    reject_unknown(s, "sites", {"ground_csv"});
    read(s, "ground_csv", cfg.ground_sites_csv);
  }

  if (j.contains("routing")) {
    const auto& r = j.at("routing");
    reject_unknown(r, "routing", {"alpha", "min_elevation_deg"});
    read(r, "alpha", cfg.alpha);
    read(r, "min_elevation_deg", cfg.min_elevation_deg);
  }

  if (j.contains("engine")) {
    const auto& e = j.at("engine");
    reject_unknown(e, "engine",
                   {"interval_s", "horizon_s", "sleep_intervals"});
    read(e, "interval_s", cfg.engine.interval_s);
    read(e, "horizon_s", cfg.engine.horizon_s);
    read(e, "sleep_intervals", cfg.engine.sleep_intervals);
  }

  if (j.contains("sun")) {
    const auto& s = j.at("sun");
    reject_unknown(s, "sun", {"rotating", "direction"});
    read(s, "rotating", cfg.sun.rotating);
    if (s.contains("direction")) {
      const auto& d = s.at("direction");
      if (!d.is_array() || d.size() != 3)
        throw ConfigError("config: sun.direction must be a 3-vector");
      cfg.sun.direction = {d[0].get<double>(), d[1].get<double>(),
                           d[2].get<double>()};
    }
  }

  if (j.contains("policy"))
    cfg.policy = policy_from_string(j.at("policy").get<std::string>());
  read(j, "seed", cfg.seed);
  return cfg;
}

}  // namespace

void ScenarioConfig::validate() const {
  try {
    constellation.validate();
    radiation.validate();
    energy.validate();
    damage.validate();
    traffic.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (engine.interval_s <= 0.0) throw ConfigError("config: interval must be > 0");
  if (engine.horizon_s <= 0.0) throw ConfigError("config: horizon must be > 0");
  const double ratio = engine.horizon_s / engine.interval_s;
  if (std::abs(ratio - std::round(ratio)) > 1e-9)
    throw ConfigError("config: interval must divide horizon");
  if (engine.sleep_intervals < 1)
    throw ConfigError("config: sleep_intervals must be >= 1");
  if (alpha < 0.0 || alpha > 1.0)
    throw ConfigError("config: routing.alpha must lie in [0, 1]");
  if (min_elevation_deg < 0.0 || min_elevation_deg > 90.0)
    throw ConfigError("config: min_elevation_deg must lie in [0, 90]");
  if (radiation_source.source != "synthetic" &&
      radiation_source.source != "file" &&
      radiation_source.source != "constant")
    throw ConfigError("config: radiation.source must be synthetic|file|constant");
  if (radiation_source.source == "file" && radiation_source.path.empty())
    throw ConfigError("config: radiation.source=file requires radiation.path");
  if (damage_init.initial_beta < 0.0 || damage_init.initial_beta_jitter < 0.0)
    throw ConfigError("config: initial damage must be nonnegative");
  if (sun.direction.norm() <= 0.0)
    throw ConfigError("config: sun.direction must be nonzero");
}

ScenarioConfig config_from_json_text(const std::string& text,
                                     const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  ScenarioConfig cfg = from_json(j);
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  ScenarioConfig cfg = config_from_json_text(buf.str(), path);

  const auto base = std::filesystem::path(path).parent_path();
  auto resolve = [&](std::string& p) {
    if (!p.empty() && std::filesystem::path(p).is_relative())
      p = (base / p).string();
  };
  resolve(cfg.user_distribution_csv);
  resolve(cfg.ground_sites_csv);
  resolve(cfg.radiation_source.path);
  return cfg;
}

void apply_override(ScenarioConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("--set expects key.path=value, got `" + assignment + "`");
  const std::string keypath = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);

  json j = json::parse(config_to_json(cfg));
  json* node = &j;
  std::size_t start = 0;
  std::vector<std::string> parts;
  while (true) {
    const auto dot = keypath.find('.', start);
    parts.push_back(keypath.substr(start, dot - start));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    node = &(*node)[parts[i]];
  json parsed;
  try {
    parsed = json::parse(value);
    if (!parsed.is_number() && !parsed.is_boolean() && !parsed.is_array())
      parsed = value;
  } catch (const json::exception&) {
    parsed = value;  // bare strings
  }
  (*node)[parts.back()] = parsed;

  ScenarioConfig next = from_json(j);
  next.validate();
  cfg = next;
}

std::string config_to_json(const ScenarioConfig& cfg) {
  json j;
  j["constellation"] = {
      {"kind", kind_to_string(cfg.constellation.kind)},
      {"planes", cfg.constellation.num_planes},
      {"sats_per_plane", cfg.constellation.sats_per_plane},
      {"altitude_km", cfg.constellation.altitude_km},
      {"inclination_deg", cfg.constellation.inclination_deg},
      {"phasing_offset_deg", cfg.constellation.phasing_offset_deg}};
  j["radiation"] = {
      {"source", cfg.radiation_source.source},
      {"level", to_string(cfg.radiation_source.level)},
      {"path", cfg.radiation_source.path},
      {"constant_intensity", cfg.radiation_source.constant_intensity},
      {"jitter", cfg.radiation_source.jitter},
      {"sample_interval_s", cfg.radiation_source.sample_interval_s},
      {"density_base_kg_km3", cfg.radiation.density_base_kg_km3},
      {"density_gain", cfg.radiation.density_gain},
      {"sleep_p_min", cfg.radiation.sleep_p_min},
      {"sleep_p_max", cfg.radiation.sleep_p_max},
      {"sleep_steepness", cfg.radiation.sleep_steepness}};
  j["battery"] = {{"capacity_wh", cfg.battery.capacity_wh},
                  {"shutdown_dod", cfg.energy.shutdown_dod}};
  j["energy"] = {{"anneal_w", cfg.energy.anneal_w},
                 {"tx_wmin_per_mb", cfg.energy.tx_wmin_per_mb},
                 {"harvest_w", cfg.energy.harvest_w},
                 {"cd", cfg.energy.drag_coefficient},
                 {"area_m2", cfg.energy.cross_section_m2}};
  json comps = json::array();
  for (const auto& c : cfg.tnid_components)
    comps.push_back({{"name", c.name}, {"weight", c.weight}});
  j["damage"] = {{"gamma_tid", cfg.damage.gamma_tid},
                 {"gamma_tnid", cfg.damage.gamma_tnid},
                 {"beta_max_tid", cfg.damage.beta_tid_max},
                 {"beta_max_tnid", cfg.damage.beta_tnid_max},
                 {"tid_rate", cfg.radiation.tid_rate_per_s},
                 {"tnid_rate", cfg.radiation.tnid_rate_per_s},
                 {"anneal_rate_per_h", cfg.damage.anneal_rate_per_h},
                 {"initial_beta", cfg.damage_init.initial_beta},
                 {"initial_beta_jitter", cfg.damage_init.initial_beta_jitter},
                 {"anneal_offline", cfg.engine.anneal_offline},
                 {"tnid_components", comps}};
  j["traffic"] = {{"n_cells", cfg.traffic.n_cells},
                  {"base_rate_mbps", cfg.traffic.base_rate_mbps},
                  {"f_min", cfg.traffic.f_min},
                  {"peak_hour", cfg.traffic.peak_hour},
                  {"distribution_csv", cfg.user_distribution_csv}};
  j["sites"] = {{"ground_csv", cfg.ground_sites_csv}};
  j["routing"] = {{"alpha", cfg.alpha},
                  {"min_elevation_deg", cfg.min_elevation_deg}};
  j["engine"] = {{"interval_s", cfg.engine.interval_s},
                 {"horizon_s", cfg.engine.horizon_s},
                 {"sleep_intervals", cfg.engine.sleep_intervals}};
  j["sun"] = {{"rotating", cfg.sun.rotating},
              {"direction",
               {cfg.sun.direction.x, cfg.sun.direction.y, cfg.sun.direction.z}}};
  j["policy"] = to_string(cfg.policy);
  j["seed"] = cfg.seed;
  return j.dump(2);
}

std::vector<GroundSite> load_ground_sites(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ground-site list: " + path);
  std::vector<GroundSite> sites;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;  // latitude,longitude,role
    }
    std::istringstream row(line);
    std::string lat, lon, role;
    if (!std::getline(row, lat, ',') || !std::getline(row, lon, ',') ||
        !std::getline(row, role))
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected `latitude,longitude,role`");
    GroundSite s;
    try {
      s.latitude_deg = std::stod(lat);
      s.longitude_deg = std::stod(lon);
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": unparseable coordinate");
    }
    while (!role.empty() && (role.back() == '\r' || role.back() == ' '))
      role.pop_back();
    if (role == "user_cell")
      s.role = SiteRole::UserCell;
    else if (role == "ground_station")
      s.role = SiteRole::GroundStation;
    else
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": role must be user_cell or ground_station");
    if (std::abs(s.latitude_deg) > 90.0 || s.longitude_deg < -180.0 ||
        s.longitude_deg >= 180.0)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": coordinates out of range");
    sites.push_back(s);
  }
  if (sites.empty()) throw std::runtime_error(path + ": no sites found");
  return sites;
}

RadiationSeries make_radiation_series(const ScenarioConfig& cfg) {
  const auto& src = cfg.radiation_source;
  if (src.source == "file") return load_series(src.path);
  if (src.source == "constant") {
    RadiationSeries s;
    s.level = RadiationLevel::Custom;
    s.samples.push_back({0.0, std::clamp(src.constant_intensity, 0.0, 1.0)});
    return s;
  }
  return synth_series(src.level, cfg.engine.horizon_s, src.sample_interval_s,
                      cfg.seed, src.jitter);
}

}  // namespace ralt
