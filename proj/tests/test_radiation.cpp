#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "ralt/radiation.hpp"

using namespace ralt;

TEST_CASE("load_series parses and normalizes the radiation CSV") {
  SUBCASE("single-row file degenerates to zero intensity") {
    std::istringstream in("t_seconds,index\n0,0.5\n");
    const auto s = parse_series(in, "<mem>");
    REQUIRE(s.samples.size() == 1);
    CHECK(s.samples[0].intensity == 0.0);
  }

  SUBCASE("min-max normalization over the file") {
    std::istringstream in("t_seconds,index\n0,10\n60,20\n120,30\n");
    const auto s = parse_series(in, "<mem>");
    REQUIRE(s.samples.size() == 3);
    CHECK(s.samples[0].intensity == doctest::Approx(0.0));
    CHECK(s.samples[1].intensity == doctest::Approx(0.5));
    CHECK(s.samples[2].intensity == doctest::Approx(1.0));
  }

  SUBCASE("non-monotone timestamps are rejected with a line number") {
    std::istringstream in("t_seconds,index\n60,1\n0,2\n");
    CHECK_THROWS_WITH_AS(parse_series(in, "<mem>"),
                         doctest::Contains("<mem>:3"), std::runtime_error);
  }

  SUBCASE("empty file is rejected") {
    std::istringstream in("t_seconds,index\n");
    CHECK_THROWS_AS(parse_series(in, "<mem>"), std::runtime_error);
  }

  SUBCASE("garbage rows are rejected") {
    std::istringstream in("t_seconds,index\n0,abc\n");
    CHECK_THROWS_AS(parse_series(in, "<mem>"), std::runtime_error);
  }
}

TEST_CASE("synthetic series") {
  SUBCASE("jitter-free low level is constant 0.2") {
    const auto s = synth_series(RadiationLevel::Low, 3600, 60, 7, 0.0);
    CHECK(s.samples.size() == 60);
    for (const auto& x : s.samples) CHECK(x.intensity == doctest::Approx(0.2));
    CHECK(s.samples.front().t_s == 0.0);
    CHECK(s.samples.back().t_s == doctest::Approx(3540.0));
  }

  SUBCASE("zero horizon is rejected") {
    CHECK_THROWS_AS(synth_series(RadiationLevel::Low, 0, 60, 7),
                    std::invalid_argument);
  }

  SUBCASE("same seed reproduces the series exactly") {
    const auto a = synth_series(RadiationLevel::High, 7200, 60, 42);
    const auto b = synth_series(RadiationLevel::High, 7200, 60, 42);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i)
      CHECK(a.samples[i].intensity == b.samples[i].intensity);
  }

  SUBCASE("default jitter keeps high level within [0.75, 0.85]") {
    const auto s = synth_series(RadiationLevel::High, 86400, 60, 3);
    for (const auto& x : s.samples) {
      CHECK(x.intensity >= 0.75);
      CHECK(x.intensity <= 0.85);
    }
  }
}

TEST_CASE("intensity_at is a zero-order hold") {
  std::istringstream in("t_seconds,index\n0,10\n60,20\n120,30\n");
  const auto s = parse_series(in, "<mem>");
  CHECK(intensity_at(s, 60.0) == doctest::Approx(0.5));
  CHECK(intensity_at(s, 90.0) == doctest::Approx(0.5));   // holds last sample
  CHECK(intensity_at(s, 120.0) == doctest::Approx(1.0));
  CHECK(intensity_at(s, 1e9) == doctest::Approx(1.0));
  CHECK_THROWS_AS(intensity_at(s, -1.0), std::runtime_error);
}

TEST_CASE("density mapping") {
  RadiationModelParams p;
  p.density_base_kg_km3 = 1e-4;
  p.density_gain = 9.0;
  CHECK(density(0.0, p) == doctest::Approx(1e-4));
  CHECK(density(1.0, p) == doctest::Approx(1e-3));
  CHECK(density(0.5, p) == doctest::Approx(5.5e-4));

  SUBCASE("monotone nondecreasing in intensity") {
    Rng rng(5);
    for (int k = 0; k < 200; ++k) {
      const double a = rng.next_double(), b = rng.next_double();
      const double lo = std::min(a, b), hi = std::max(a, b);
      CHECK(density(lo, p) <= density(hi, p));
    }
  }
}

TEST_CASE("sleep probability curve") {
  RadiationModelParams p;
  p.sleep_p_min = 0.0;
  p.sleep_p_max = 0.1;
  p.sleep_steepness = 1.0;
  CHECK(sleep_probability(0.0, p) == doctest::Approx(0.0));
  CHECK(sleep_probability(1.0, p) == doctest::Approx(0.1));
  CHECK(sleep_probability(0.5, p) == doctest::Approx(0.05));

  SUBCASE("monotone nondecreasing in intensity") {
    p.sleep_steepness = 2.7;
    Rng rng(6);
    for (int k = 0; k < 200; ++k) {
      const double a = rng.next_double(), b = rng.next_double();
      const double lo = std::min(a, b), hi = std::max(a, b);
      CHECK(sleep_probability(lo, p) <= sleep_probability(hi, p));
    }
  }
}

TEST_CASE("SEE sampling") {
  std::vector<SatelliteId> ids;
  for (int p = 0; p < 100; ++p)
    for (int s = 0; s < 100; ++s) ids.push_back({p, s});

  SUBCASE("p = 0 selects nobody") {
    Rng rng(1);
    CHECK(sample_see_events(ids, 0.0, rng).empty());
  }
  SUBCASE("p = 1 selects everybody") {
    Rng rng(1);
    CHECK(sample_see_events(ids, 1.0, rng).size() == ids.size());
  }
  SUBCASE("hit fraction concentrates near p") {
    Rng rng(123);
    const auto hits = sample_see_events(ids, 0.1, rng);
    const double frac = static_cast<double>(hits.size()) / ids.size();
    CHECK(frac >= 0.08);
    CHECK(frac <= 0.12);
  }
  SUBCASE("deterministic under a fixed seed") {
    Rng a(9), b(9);
    CHECK(sample_see_events(ids, 0.3, a) == sample_see_events(ids, 0.3, b));
  }
}
