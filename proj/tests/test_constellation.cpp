#include <cmath>
#include <map>
#include <stdexcept>

#include "doctest.h"
#include "ralt/constellation.hpp"
#include "ralt/rng.hpp"

using namespace ralt;

namespace {

ConstellationSpec make_spec(int planes, int spp, double alt, double incl,
                            ConstellationKind kind) {
  ConstellationSpec s;
  s.num_planes = planes;
  s.sats_per_plane = spp;
  s.altitude_km = alt;
  s.inclination_deg = incl;
  s.kind = kind;
  return s;
}

}  // namespace

TEST_CASE("build_constellation geometry") {
  SUBCASE("single satellite at phase zero") {
    const auto slots = make_spec(1, 1, 550, 53, ConstellationKind::WalkerDelta);
    const auto out = build_constellation(slots);
    REQUIRE(out.size() == 1);
    CHECK(out[0].phase_deg == 0.0);
    CHECK(out[0].raan_deg == 0.0);
  }

  SUBCASE("starlink shell geometry: 72x22 walker delta") {
    const auto spec = make_spec(72, 22, 550, 53, ConstellationKind::WalkerDelta);
    const auto out = build_constellation(spec);
    CHECK(out.size() == 1584);
    CHECK(spec.plane_spacing_deg() == doctest::Approx(5.0));
    CHECK(out[22].raan_deg == doctest::Approx(5.0));  // first sat of plane 1
  }

  SUBCASE("near-polar star spreads planes over a half circle") {
    const auto spec = make_spec(2, 2, 600, 90, ConstellationKind::NearPolarStar);
    const auto out = build_constellation(spec);
    CHECK(out.size() == 4);
    CHECK(spec.plane_spacing_deg() == doctest::Approx(90.0));
  }

  SUBCASE("rejects empty constellations") {
    CHECK_THROWS_AS(
        build_constellation(make_spec(0, 5, 550, 53,
                                      ConstellationKind::WalkerDelta)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        build_constellation(make_spec(5, 0, 550, 53,
                                      ConstellationKind::WalkerDelta)),
        std::invalid_argument);
  }
}

TEST_CASE("propagate: circular keplerian motion") {
  const auto spec = make_spec(6, 8, 550, 53, ConstellationKind::WalkerDelta);
  const auto slots = build_constellation(spec);

  SUBCASE("identity at epoch") {
    const auto p0 = propagate(slots[11], spec, 0.0);
    CHECK(p0.epoch_s == 0.0);
    CHECK(p0.r.norm() ==
          doctest::Approx(spec.semi_major_axis_km()).epsilon(1e-9));
  }

  SUBCASE("period of a 6921 km orbit is about 5731 s") {
    CHECK(spec.period_s() == doctest::Approx(5731.0).epsilon(2e-4));
  }

  SUBCASE("periodicity within 1e-6 km") {
    const auto p0 = propagate(slots[5], spec, 0.0);
    const auto p1 = propagate(slots[5], spec, spec.period_s());
    CHECK((p0.r - p1.r).norm() < 1e-6);
  }

  SUBCASE("radius stays on the shell for arbitrary epochs") {
    Rng rng(7);
    for (int k = 0; k < 200; ++k) {
      const double t = rng.next_range(0.0, 86400.0);
      const auto& slot = slots[rng.next_below(slots.size())];
      const auto p = propagate(slot, spec, t);
      CHECK(std::abs(p.r.norm() / spec.semi_major_axis_km() - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("isl_topology builds a +Grid") {
  auto degree_map = [](const ConstellationSpec& spec) {
    std::map<std::pair<int, int>, int> deg;
    for (const auto& [a, b] : isl_topology(spec)) {
      ++deg[{a.plane, a.slot}];
      ++deg[{b.plane, b.slot}];
    }
    return deg;
  };

  SUBCASE("singleton has no links") {
    CHECK(isl_topology(make_spec(1, 1, 550, 53, ConstellationKind::WalkerDelta))
              .empty());
  }

  SUBCASE("3x3 walker delta: degree 4, 18 edges") {
    const auto spec = make_spec(3, 3, 550, 53, ConstellationKind::WalkerDelta);
    const auto edges = isl_topology(spec);
    CHECK(edges.size() == 18);
    for (const auto& [id, d] : degree_map(spec)) CHECK(d == 4);
  }

  SUBCASE("2x3 near-polar star: no seam wrap, degree 3") {
    const auto spec = make_spec(2, 3, 600, 98, ConstellationKind::NearPolarStar);
    const auto edges = isl_topology(spec);
    CHECK(edges.size() == 9);
    for (const auto& [id, d] : degree_map(spec)) CHECK(d == 3);
    for (const auto& [a, b] : edges)
      CHECK(std::abs(a.plane - b.plane) <= 1);  // only adjacent planes link
  }
}

TEST_CASE("ground visibility") {
  const GroundSite site{0.0, 0.0, SiteRole::UserCell};

  SUBCASE("zenith satellite is visible at any mask up to 90 degrees") {
    const Position sat{{kEarthRadiusKm + 550.0, 0.0, 0.0}, 0.0};
    CHECK(visible(sat, site, 25.0));
    CHECK(visible(sat, site, 90.0));
  }

  SUBCASE("antipodal satellite is not visible") {
    const Position sat{{-(kEarthRadiusKm + 550.0), 0.0, 0.0}, 0.0};
    CHECK_FALSE(visible(sat, site, 0.0));
  }

  SUBCASE("20 degrees of central angle puts a 550 km satellite below a 25 "
          "degree mask") {
    const double r = kEarthRadiusKm + 550.0;
    const Position sat{{r * std::cos(deg2rad(20.0)),
                        r * std::sin(deg2rad(20.0)), 0.0},
                       0.0};
    // elevation = atan2(cos(20) - R/r, sin(20)) ~ 3.2 degrees
    CHECK_FALSE(visible(sat, site, 25.0));
    CHECK(visible(sat, site, 3.0));
  }
}

TEST_CASE("cylindrical eclipse test") {
  const Vec3 sun{1.0, 0.0, 0.0};
  const double r = kEarthRadiusKm + 550.0;

  SUBCASE("sunward satellite is lit") {
    CHECK_FALSE(in_eclipse(Position{{r, 0, 0}, 0}, sun));
  }
  SUBCASE("anti-sunward satellite is shadowed") {
    CHECK(in_eclipse(Position{{-r, 0, 0}, 0}, sun));
  }
  SUBCASE("perpendicular offset beyond one Earth radius exits the shadow") {
    CHECK_FALSE(in_eclipse(Position{{-5000.0, 6372.0, 0.0}, 0}, sun));
    CHECK(in_eclipse(Position{{-5000.0, 6370.0, 0.0}, 0}, sun));
  }
  SUBCASE("invariant under rotation about the sun axis") {
    Rng rng(99);
    for (int k = 0; k < 200; ++k) {
      const Vec3 p{rng.next_range(-9000, 9000), rng.next_range(-9000, 9000),
                   rng.next_range(-9000, 9000)};
      const bool base = in_eclipse(Position{p, 0}, sun);
      const double a = rng.next_range(0, 2 * kPi);
      const Vec3 rotated{p.x, p.y * std::cos(a) - p.z * std::sin(a),
                         p.y * std::sin(a) + p.z * std::cos(a)};
      CHECK(in_eclipse(Position{rotated, 0}, sun) == base);
    }
  }
}

TEST_CASE("propagation delay") {
  const Position a{{0, 0, 0}, 0};

  SUBCASE("coincident points have zero delay") {
    CHECK(propagation_delay_s(a, a) == 0.0);
  }
  SUBCASE("1000 km separation") {
    const Position b{{1000, 0, 0}, 0};
    CHECK(propagation_delay_s(a, b) == doctest::Approx(3.3356e-3).epsilon(1e-4));
  }
  SUBCASE("2997.92458 km is exactly 10 ms") {
    const Position b{{2997.92458, 0, 0}, 0};
    CHECK(propagation_delay_s(a, b) == doctest::Approx(1.0e-2).epsilon(1e-12));
  }
  SUBCASE("symmetry and triangle inequality") {
    Rng rng(4242);
    for (int k = 0; k < 200; ++k) {
      const Position p{{rng.next_range(-9e3, 9e3), rng.next_range(-9e3, 9e3),
                        rng.next_range(-9e3, 9e3)},
                       0};
      const Position q{{rng.next_range(-9e3, 9e3), rng.next_range(-9e3, 9e3),
                        rng.next_range(-9e3, 9e3)},
                       0};
      const Position s{{rng.next_range(-9e3, 9e3), rng.next_range(-9e3, 9e3),
                        rng.next_range(-9e3, 9e3)},
                       0};
      CHECK(propagation_delay_s(p, q) == propagation_delay_s(q, p));
      CHECK(propagation_delay_s(p, s) <=
            propagation_delay_s(p, q) + propagation_delay_s(q, s) + 1e-15);
    }
  }
}
