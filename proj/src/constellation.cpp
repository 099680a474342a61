#include "ralt/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ralt/kernels.hpp"

namespace ralt {

double ConstellationSpec::orbital_rate_rad_s() const {
  const double a = semi_major_axis_km();
  return std::sqrt(kMuEarthKm3S2 / (a * a * a));
}

double ConstellationSpec::plane_spacing_deg() const {
  const double span = kind == ConstellationKind::WalkerDelta ? 360.0 : 180.0;
  return span / static_cast<double>(num_planes);
}

void ConstellationSpec::validate() const {
  if (num_planes < 1 || sats_per_plane < 1)
    throw std::invalid_argument(
        "constellation: num_planes and sats_per_plane must be >= 1");
  if (altitude_km <= 0.0)
    throw std::invalid_argument("constellation: altitude must be positive");
  if (inclination_deg < 0.0 || inclination_deg > 180.0)
    throw std::invalid_argument(
        "constellation: inclination must lie in [0, 180] degrees");
}

std::vector<OrbitalSlot> build_constellation(const ConstellationSpec& spec) {
  spec.validate();
  std::vector<OrbitalSlot> slots;
  slots.reserve(static_cast<std::size_t>(spec.count()));
  const double slot_spacing = 360.0 / static_cast<double>(spec.sats_per_plane);
  for (int p = 0; p < spec.num_planes; ++p) {
    const double raan = spec.plane_spacing_deg() * p;
    for (int s = 0; s < spec.sats_per_plane; ++s) {
      const double phase =
          std::fmod(slot_spacing * s + spec.phasing_offset_deg * p, 360.0);
      slots.push_back({SatelliteId{p, s}, raan, phase});
    }
  }
  return slots;
}

namespace {

// Orthonormal basis of the orbital plane: u points at the ascending node,
// w at the +90 degree in-plane direction.
void plane_basis(double raan_deg, double incl_deg, Vec3& u, Vec3& w) {
  const double co = std::cos(deg2rad(raan_deg));
  const double so = std::sin(deg2rad(raan_deg));
  const double ci = std::cos(deg2rad(incl_deg));
  const double si = std::sin(deg2rad(incl_deg));
  u = {co, so, 0.0};
  w = {-so * ci, co * ci, si};
}

}  // namespace

Position propagate(const OrbitalSlot& slot, const ConstellationSpec& spec,
                   double t_s) {
  Vec3 u, w;
  plane_basis(slot.raan_deg, spec.inclination_deg, u, w);
  const double phi = deg2rad(slot.phase_deg);
  const double wt = spec.orbital_rate_rad_s() * t_s;
  // Single-element call into the batch kernel so the pure operation and the
  // engine's bulk propagation share one arithmetic path.
  const double ux = u.x, uy = u.y, uz = u.z;
  const double wx = w.x, wy = w.y, wz = w.z;
  const double cp = std::cos(phi), sp = std::sin(phi);
  double x, y, z;
  kernels::active_ops().orbit_positions(&ux, &uy, &uz, &wx, &wy, &wz, &cp, &sp,
                                        std::cos(wt), std::sin(wt),
                                        spec.semi_major_axis_km(), &x, &y, &z,
                                        1);
  return Position{{x, y, z}, t_s};
}

std::vector<std::pair<SatelliteId, SatelliteId>> isl_topology(
    const ConstellationSpec& spec) {
  spec.validate();
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> dedup;
  auto add = [&](SatelliteId a, SatelliteId b) {
    auto ka = std::make_pair(a.plane, a.slot);
    auto kb = std::make_pair(b.plane, b.slot);
    if (kb < ka) std::swap(ka, kb);
    if (ka != kb) dedup.insert({ka, kb});
  };
  for (int p = 0; p < spec.num_planes; ++p) {
    for (int s = 0; s < spec.sats_per_plane; ++s) {
      if (spec.sats_per_plane > 1)
        add({p, s}, {p, (s + 1) % spec.sats_per_plane});
      if (spec.num_planes > 1) {
        const bool wrap = spec.kind == ConstellationKind::WalkerDelta;
        if (p + 1 < spec.num_planes)
          add({p, s}, {p + 1, s});
        else if (wrap)
          add({p, s}, {0, s});
      }
    }
  }
  std::vector<std::pair<SatelliteId, SatelliteId>> edges;
  edges.reserve(dedup.size());
  for (const auto& [a, b] : dedup)
    edges.push_back({SatelliteId{a.first, a.second},
                     SatelliteId{b.first, b.second}});
  return edges;
}

Vec3 site_position(const GroundSite& site) {
  const double lat = deg2rad(site.latitude_deg);
  const double lon = deg2rad(site.longitude_deg);
  return Vec3{std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon),
              std::sin(lat)} *
         kEarthRadiusKm;
}

bool visible(const Position& sat, const GroundSite& site,
             double min_elevation_deg) {
  const Vec3 g = site_position(site);
  const Vec3 up = g.normalized();
  const double sat_x = sat.r.x, sat_y = sat.r.y, sat_z = sat.r.z;
  std::uint8_t mask = 0;
  kernels::active_ops().visible_mask(&sat_x, &sat_y, &sat_z, g.x, g.y, g.z,
                                     up.x, up.y, up.z,
                                     std::sin(deg2rad(min_elevation_deg)),
                                     &mask, 1);
  return mask != 0;
}

bool in_eclipse(const Position& sat, const Vec3& sun_direction) {
  std::uint8_t mask = 0;
  const double x = sat.r.x, y = sat.r.y, z = sat.r.z;
  kernels::active_ops().eclipse_mask(&x, &y, &z, sun_direction.x,
                                     sun_direction.y, sun_direction.z,
                                     kEarthRadiusKm, &mask, 1);
  return mask != 0;
}

double propagation_delay_s(const Position& a, const Position& b) {
  return (a.r - b.r).norm() / kLightSpeedKmS;
}

}  // namespace ralt
