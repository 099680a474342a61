#include "ralt/radiation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ralt {

RadiationLevel radiation_level_from_string(const std::string& s) {
  if (s == "low") return RadiationLevel::Low;
  if (s == "mean") return RadiationLevel::Mean;
  if (s == "high") return RadiationLevel::High;
  if (s == "custom") return RadiationLevel::Custom;
  throw std::invalid_argument("unknown radiation level: " + s);
}

std::string to_string(RadiationLevel level) {
  switch (level) {
    case RadiationLevel::Low: return "low";
    case RadiationLevel::Mean: return "mean";
    case RadiationLevel::High: return "high";
    case RadiationLevel::Custom: return "custom";
  }
  return "custom";
}

void RadiationModelParams::validate() const {
  if (density_base_kg_km3 < 0 || density_gain < 0 || tid_rate_per_s < 0 ||
      tnid_rate_per_s < 0 || sleep_p_min < 0 || sleep_steepness < 0)
    throw std::invalid_argument("radiation params must be nonnegative");
  if (sleep_p_min > sleep_p_max || sleep_p_max > 1.0)
    throw std::invalid_argument(
        "radiation: require sleep_p_min <= sleep_p_max <= 1");
}

RadiationSeries parse_series(std::istream& in, const std::string& origin) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<RadiationSample> raw;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;  // `t_seconds,index`
    }
    std::istringstream row(line);
    std::string t_field, i_field;
    if (!std::getline(row, t_field, ',') || !std::getline(row, i_field)) {
      throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                               ": expected `t_seconds,index`");
    }
    try {
      const double t = std::stod(t_field);
      const double v = std::stod(i_field);
      raw.push_back({t, v});
    } catch (const std::exception&) {
      throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                               ": unparseable numeric field");
    }
    if (raw.size() >= 2 && raw[raw.size() - 2].t_s >= raw.back().t_s) {
      throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                               ": timestamps must be strictly increasing");
    }
  }
  if (raw.empty())
    throw std::runtime_error(origin + ": no radiation samples found");

  double lo = raw.front().intensity, hi = raw.front().intensity;
  for (const auto& s : raw) {
    lo = std::min(lo, s.intensity);
    hi = std::max(hi, s.intensity);
  }
  const double span = hi - lo;
  RadiationSeries series;
  series.level = RadiationLevel::Custom;
  series.samples.reserve(raw.size());
  for (const auto& s : raw) {
    const double i = span > 0.0 ? (s.intensity - lo) / span : 0.0;
    series.samples.push_back({s.t_s, i});
  }
  return series;
}

RadiationSeries load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open radiation file: " + path);
  return parse_series(in, path);
}

double level_mean_intensity(RadiationLevel level) {
  switch (level) {
    case RadiationLevel::Low: return 0.2;
    case RadiationLevel::Mean: return 0.5;
    case RadiationLevel::High: return 0.8;
    case RadiationLevel::Custom: break;
  }
  throw std::invalid_argument("custom level has no preset mean intensity");
}

RadiationSeries synth_series(RadiationLevel level, double horizon_s,
                             double step_s, std::uint64_t seed,
                             double jitter) {
  if (horizon_s <= 0.0) throw std::invalid_argument("horizon must be > 0");
  if (step_s <= 0.0) throw std::invalid_argument("step must be > 0");
  const double mean = level_mean_intensity(level);
  Rng rng = derive_rng(seed, "radiation.synth");
  RadiationSeries series;
  series.level = level;
  const auto n = static_cast<std::size_t>(std::llround(horizon_s / step_s));
  series.samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double v = mean;
    if (jitter > 0.0) v += rng.next_range(-jitter, jitter);
    v = std::clamp(v, 0.0, 1.0);
    series.samples.push_back({static_cast<double>(k) * step_s, v});
  }
  return series;
}

double intensity_at(const RadiationSeries& series, double t_s) {
  if (series.samples.empty())
    throw std::runtime_error("radiation series is empty");
  if (t_s < series.first_t())
    throw std::runtime_error("queried time precedes the radiation series");
  auto it = std::upper_bound(
      series.samples.begin(), series.samples.end(), t_s,
      [](double t, const RadiationSample& s) { return t < s.t_s; });
  return std::prev(it)->intensity;
}

double density(double intensity, const RadiationModelParams& p) {
  return p.density_base_kg_km3 * (1.0 + p.density_gain * intensity);
}

double sleep_probability(double intensity, const RadiationModelParams& p) {
  return p.sleep_p_min + (p.sleep_p_max - p.sleep_p_min) *
                             std::pow(intensity, p.sleep_steepness);
}

std::vector<SatelliteId> sample_see_events(const std::vector<SatelliteId>& ids,
                                           double p, Rng& rng) {
  std::vector<SatelliteId> hit;
  for (const auto& id : ids) {
    const double u = rng.next_double();
    if (u < p) hit.push_back(id);
  }
  return hit;
}

}  // namespace ralt
