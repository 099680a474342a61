#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "ralt/geo.hpp"

namespace ralt {

enum class ConstellationKind { WalkerDelta, NearPolarStar };

struct ConstellationSpec {
  int num_planes = 1;
  int sats_per_plane = 1;
  double altitude_km = 550.0;
  double inclination_deg = 53.0;
  double phasing_offset_deg = 0.0;  // relative phase between adjacent planes
  ConstellationKind kind = ConstellationKind::WalkerDelta;

  int count() const { return num_planes * sats_per_plane; }
  double semi_major_axis_km() const { return kEarthRadiusKm + altitude_km; }
  double orbital_rate_rad_s() const;
  double period_s() const { return 2.0 * kPi / orbital_rate_rad_s(); }
  // Right-ascension spacing between adjacent planes: the full circle for a
  // Walker delta, a half circle for a near-polar star.
  double plane_spacing_deg() const;

  void validate() const;  // throws std::invalid_argument
};

struct SatelliteId {
  int plane = 0;
  int slot = 0;
  auto operator<=>(const SatelliteId&) const = default;
};

enum class SiteRole { UserCell, GroundStation };

struct GroundSite {
  double latitude_deg = 0.0;
  double longitude_deg = 0.0;
  SiteRole role = SiteRole::UserCell;
};

struct Position {
  Vec3 r;              // km, Earth-centered inertial
  double epoch_s = 0;  // seconds since scenario start
};

// One satellite's fixed orbital slot: the plane's right ascension and the
// in-plane phase at epoch 0.
struct OrbitalSlot {
  SatelliteId id;
  double raan_deg = 0.0;
  double phase_deg = 0.0;
};

std::vector<OrbitalSlot> build_constellation(const ConstellationSpec& spec);

Position propagate(const OrbitalSlot& slot, const ConstellationSpec& spec,
                   double t_s);

// +Grid inter-satellite links: two intra-plane neighbours (slot +/- 1) and
// two inter-plane neighbours (same slot, plane +/- 1). The plane ring wraps
// only for WalkerDelta; a NearPolarStar keeps its counter-rotating seam
// unlinked.
std::vector<std::pair<SatelliteId, SatelliteId>> isl_topology(
    const ConstellationSpec& spec);

// Ground sites are held fixed in the inertial frame (the scenario does not
// model Earth rotation), so a site's position is time-independent.
Vec3 site_position(const GroundSite& site);

bool visible(const Position& sat, const GroundSite& site,
             double min_elevation_deg);

bool in_eclipse(const Position& sat, const Vec3& sun_direction);

double propagation_delay_s(const Position& a, const Position& b);

}  // namespace ralt
