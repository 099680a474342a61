#include "doctest.h"
#include "ralt/power.hpp"
#include "ralt/rng.hpp"

using namespace ralt;

TEST_CASE("drag energy from classical mechanics") {
  EnergyParams ep;  // Cd 2.2, A 10 m^2

  SUBCASE("zero density means zero drag") {
    CHECK(drag_energy_wh(0.0, 550, 3600, ep) == 0.0);
  }

  SUBCASE("hand-evaluated drag power at 1e-12 kg/m^3") {
    // 1e-12 kg/m^3 == 1e-3 kg/km^3; v ~ 7589 m/s at a = 6921 km.
    const double wh = drag_energy_wh(1e-3, 550, 3600, ep);
    CHECK(wh == doctest::Approx(4.806).epsilon(1e-3));
  }

  SUBCASE("linear in density and interval") {
    Rng rng(11);
    for (int k = 0; k < 50; ++k) {
      const double rho = rng.next_range(0.0, 1.0);
      const double dt = rng.next_range(1.0, 7200.0);
      CHECK(drag_energy_wh(2 * rho, 550, dt, ep) ==
            doctest::Approx(2 * drag_energy_wh(rho, 550, dt, ep)));
      CHECK(drag_energy_wh(rho, 550, 2 * dt, ep) ==
            doctest::Approx(2 * drag_energy_wh(rho, 550, dt, ep)));
    }
  }
}

TEST_CASE("transmission energy") {
  EnergyParams ep;
  CHECK(transmission_energy_wh(0.0, 60, ep) == 0.0);
  CHECK(transmission_energy_wh(300.0, 60, ep) == doctest::Approx(24.0));
  CHECK(transmission_energy_wh(1.0, 60, ep) == doctest::Approx(0.08));
}

TEST_CASE("annealing energy") {
  EnergyParams ep;
  CHECK(annealing_energy_wh(0, ep) == 0.0);
  CHECK(annealing_energy_wh(3600, ep) == doctest::Approx(40.0));
  CHECK(annealing_energy_wh(1800, ep) == doctest::Approx(20.0));
}

TEST_CASE("harvest energy") {
  EnergyParams ep;
  CHECK(harvest_energy_wh(false, 3600, ep) == 0.0);
  CHECK(harvest_energy_wh(true, 3600, ep) == doctest::Approx(1200.0));
  CHECK(harvest_energy_wh(true, 0, ep) == 0.0);
}

TEST_CASE("battery stepping") {
  SUBCASE("balanced energy leaves dod unchanged") {
    const BatteryState b{5000.0, 0.4};
    const auto r = step_battery(b, 123.0, 123.0);
    CHECK(r.state.dod == doctest::Approx(0.4));
    CHECK_FALSE(r.exhausted);
  }
  SUBCASE("consumption moves dod by energy over capacity") {
    const BatteryState b{5000.0, 0.5};
    const auto r = step_battery(b, 500.0, 0.0);
    CHECK(r.state.dod == doctest::Approx(0.6));
  }
  SUBCASE("over-consumption clamps at 1 and flags exhaustion") {
    const BatteryState b{5000.0, 0.99};
    const auto r = step_battery(b, 5000.0, 0.0);
    CHECK(r.state.dod == 1.0);
    CHECK(r.exhausted);
  }
  SUBCASE("dod stays in [0, 1] under random op sequences") {
    Rng rng(77);
    BatteryState b{5000.0, 0.0};
    for (int k = 0; k < 2000; ++k) {
      const auto r = step_battery(b, rng.next_range(0, 4000),
                                  rng.next_range(0, 4000));
      b = r.state;
      CHECK(b.dod >= 0.0);
      CHECK(b.dod <= 1.0);
    }
  }
  SUBCASE("stepping is additive when no clamping occurs") {
    const BatteryState b{5000.0, 0.3};
    const auto once = step_battery(b, 400.0 + 250.0, 100.0 + 50.0);
    const auto twice =
        step_battery(step_battery(b, 400.0, 100.0).state, 250.0, 50.0);
    CHECK(once.state.dod == doctest::Approx(twice.state.dod).epsilon(1e-12));
  }
}

TEST_CASE("recovery energy feeding the RALT edge weights") {
  EnergyParams ep;
  RadiationModelParams rp;
  rp.density_base_kg_km3 = 0.0;  // isolate the radiation-driven terms
  rp.density_gain = 9.0;

  SUBCASE("no radiation and no annealing due means no recovery cost") {
    CHECK(recovery_energy_wh(0.0, 550, 3600, false, ep, rp) == 0.0);
  }
  SUBCASE("annealing due adds the 40 W draw") {
    CHECK(recovery_energy_wh(0.0, 550, 3600, true, ep, rp) ==
          doctest::Approx(40.0));
  }
  SUBCASE("drag and annealing are additive") {
    rp.density_base_kg_km3 = 1e-4;
    const double both = recovery_energy_wh(0.7, 550, 3600, true, ep, rp);
    const double drag_only = recovery_energy_wh(0.7, 550, 3600, false, ep, rp);
    CHECK(both == doctest::Approx(drag_only + 40.0));
    CHECK(both > drag_only);
    CHECK(both > 40.0);
  }
  SUBCASE("monotone in intensity at equal annealing state") {
    rp.density_base_kg_km3 = 1e-4;
    Rng rng(13);
    for (int k = 0; k < 100; ++k) {
      const double a = rng.next_double(), b = rng.next_double();
      const double lo = std::min(a, b), hi = std::max(a, b);
      CHECK(recovery_energy_wh(lo, 550, 60, false, ep, rp) <=
            recovery_energy_wh(hi, 550, 60, false, ep, rp));
    }
  }
}
