#include "ralt/traffic.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ralt {

void TrafficParams::validate() const {
  if (n_cells < 0) throw std::invalid_argument("traffic: n_cells must be >= 0");
  if (n_cells == 1)
    throw std::invalid_argument("traffic: need at least 2 cells to pair flows");
  if (base_rate_mbps < 0.0)
    throw std::invalid_argument("traffic: base rate must be >= 0");
  if (f_min < 0.0 || f_min > 1.0)
    throw std::invalid_argument("traffic: f_min must lie in [0, 1]");
}

std::vector<WeightedSite> load_weighted_sites(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open site list: " + path);
  std::vector<WeightedSite> sites;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;  // latitude,longitude,weight
    }
    std::istringstream row(line);
    std::string lat, lon, w;
    if (!std::getline(row, lat, ',') || !std::getline(row, lon, ',') ||
        !std::getline(row, w))
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected `latitude,longitude,weight`");
    WeightedSite s;
    try {
      s.site.latitude_deg = std::stod(lat);
      s.site.longitude_deg = std::stod(lon);
      s.weight = std::stod(w);
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": unparseable numeric field");
    }
    s.site.role = SiteRole::UserCell;
    sites.push_back(s);
  }
  if (sites.empty()) throw std::runtime_error(path + ": no sites found");
  return sites;
}

std::vector<UserCell> generate_cells(int n,
                                     const std::vector<WeightedSite>& dist,
                                     double base_rate_mbps, Rng& rng) {
  if (n < 1) throw std::invalid_argument("generate_cells: n must be >= 1");
  if (dist.empty())
    throw std::invalid_argument("generate_cells: empty distribution");
  std::vector<double> cumulative;
  cumulative.reserve(dist.size());
  double total = 0.0;
  for (const auto& s : dist) {
    if (s.weight < 0.0)
      throw std::invalid_argument("generate_cells: negative weight");
    total += s.weight;
    cumulative.push_back(total);
  }
  if (total <= 0.0)
    throw std::invalid_argument("generate_cells: weights sum to zero");

  std::vector<UserCell> cells;
  cells.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double u = rng.next_double() * total;
    std::size_t idx = 0;
    while (idx + 1 < cumulative.size() && u >= cumulative[idx]) ++idx;
    cells.push_back({dist[idx].site, base_rate_mbps, dist[idx].weight});
  }
  return cells;
}

double diurnal_factor(double longitude_deg, double t_s,
                      const TrafficParams& p) {
  double h = std::fmod(t_s / 3600.0 + longitude_deg / 15.0, 24.0);
  if (h < 0.0) h += 24.0;
  const double phase = 2.0 * kPi * (h - p.peak_hour) / 24.0;
  return p.f_min + (1.0 - p.f_min) * 0.5 * (1.0 + std::cos(phase));
}

std::vector<int> pair_destinations(int n_cells, Rng& rng) {
  if (n_cells < 2)
    throw std::invalid_argument("pair_destinations: need at least 2 cells");
  std::vector<int> dst(static_cast<std::size_t>(n_cells));
  for (int i = 0; i < n_cells; ++i) {
    const auto pick =
        static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_cells - 1)));
    dst[static_cast<std::size_t>(i)] = pick >= i ? pick + 1 : pick;
  }
  return dst;
}

std::vector<Flow> active_flows(const std::vector<UserCell>& cells,
                               const std::vector<int>& pairing, double t_s,
                               const TrafficParams& p) {
  if (cells.size() < 2)
    throw std::invalid_argument("active_flows: need at least 2 cells");
  if (pairing.size() != cells.size())
    throw std::invalid_argument("active_flows: pairing size mismatch");
  std::vector<Flow> flows;
  flows.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Flow f;
    f.id = static_cast<int>(i);
    f.src_cell = static_cast<int>(i);
    f.dst_cell = pairing[i];
    f.rate_mbps = cells[i].base_rate_mbps *
                  diurnal_factor(cells[i].site.longitude_deg, t_s, p);
    f.created_at_s = t_s;
    flows.push_back(std::move(f));
  }
  return flows;
}

}  // namespace ralt
