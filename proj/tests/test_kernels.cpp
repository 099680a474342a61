#include <cmath>
#include <vector>

#include "doctest.h"
#include "ralt/kernels.hpp"
#include "ralt/rng.hpp"

using namespace ralt;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.next_range(lo, hi);
  return v;
}

}  // namespace

TEST_CASE("scalar and avx2 kernels agree bit-for-bit") {
  const kernels::Ops* avx2 = kernels::try_avx2_ops();
  if (avx2 == nullptr) {
    MESSAGE("avx2 unavailable on this host; equivalence test skipped");
    return;
  }
  const kernels::Ops& scalar = kernels::scalar_ops();
  Rng rng(20240901);

  for (const std::size_t n : {1u, 3u, 4u, 7u, 64u, 257u}) {
    auto ax = random_vec(rng, n, -8000, 8000);
    auto ay = random_vec(rng, n, -8000, 8000);
    auto az = random_vec(rng, n, -8000, 8000);
    auto bx = random_vec(rng, n, -8000, 8000);
    auto by = random_vec(rng, n, -8000, 8000);
    auto bz = random_vec(rng, n, -8000, 8000);

    SUBCASE("") {}  // keep one deterministic pass per n

    // pair_delay
    {
      std::vector<double> out_s(n), out_v(n);
      scalar.pair_delay(ax.data(), ay.data(), az.data(), bx.data(), by.data(),
                        bz.data(), 1.0 / 299792.458, out_s.data(), n);
      avx2->pair_delay(ax.data(), ay.data(), az.data(), bx.data(), by.data(),
                       bz.data(), 1.0 / 299792.458, out_v.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(out_s[i] == out_v[i]);
    }

    // orbit_positions
    {
      std::vector<double> cp(n), sp(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double phi = rng.next_range(0, 6.283185307179586);
        cp[i] = std::cos(phi);
        sp[i] = std::sin(phi);
      }
      std::vector<double> xs(n), ys(n), zs(n), xv(n), yv(n), zv(n);
      scalar.orbit_positions(ax.data(), ay.data(), az.data(), bx.data(),
                             by.data(), bz.data(), cp.data(), sp.data(), 0.31,
                             0.95, 6921.0, xs.data(), ys.data(), zs.data(), n);
      avx2->orbit_positions(ax.data(), ay.data(), az.data(), bx.data(),
                            by.data(), bz.data(), cp.data(), sp.data(), 0.31,
                            0.95, 6921.0, xv.data(), yv.data(), zv.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(xs[i] == xv[i]);
        CHECK(ys[i] == yv[i]);
        CHECK(zs[i] == zv[i]);
      }
    }

    // visible_mask and eclipse_mask
    {
      std::vector<std::uint8_t> ms(n), mv(n);
      scalar.visible_mask(ax.data(), ay.data(), az.data(), 6371, 0, 0, 1, 0, 0,
                          0.42261826174069944, ms.data(), n);
      avx2->visible_mask(ax.data(), ay.data(), az.data(), 6371, 0, 0, 1, 0, 0,
                         0.42261826174069944, mv.data(), n);
      CHECK(ms == mv);
      scalar.eclipse_mask(ax.data(), ay.data(), az.data(), 0.6, -0.8, 0.0,
                          6371.0, ms.data(), n);
      avx2->eclipse_mask(ax.data(), ay.data(), az.data(), 0.6, -0.8, 0.0,
                         6371.0, mv.data(), n);
      CHECK(ms == mv);
    }

    // gated saturating ops and axpy
    {
      auto vs = random_vec(rng, n, 0.0, 1.0);
      auto vv = vs;
      std::vector<double> gate(n);
      for (auto& g : gate) g = rng.next_double() < 0.5 ? 0.0 : 1.0;
      scalar.gated_saturating_add(vs.data(), gate.data(), 0.37, 1.0, n);
      avx2->gated_saturating_add(vv.data(), gate.data(), 0.37, 1.0, n);
      CHECK(vs == vv);
      scalar.gated_saturating_sub(vs.data(), gate.data(), 0.11, n);
      avx2->gated_saturating_sub(vv.data(), gate.data(), 0.11, n);
      CHECK(vs == vv);
      auto ys = random_vec(rng, n, -2, 2);
      auto yv = ys;
      scalar.axpy(ys.data(), vs.data(), 0.4, n);
      avx2->axpy(yv.data(), vv.data(), 0.4, n);
      CHECK(ys == yv);
    }

    // battery_step
    {
      auto dod_s = random_vec(rng, n, 0.0, 1.0);
      auto dod_v = dod_s;
      auto cons = random_vec(rng, n, 0.0, 900.0);
      auto harv = random_vec(rng, n, 0.0, 900.0);
      std::vector<std::uint8_t> es(n), ev(n);
      scalar.battery_step(dod_s.data(), cons.data(), harv.data(), 1.0 / 5000.0,
                          es.data(), n);
      avx2->battery_step(dod_v.data(), cons.data(), harv.data(), 1.0 / 5000.0,
                         ev.data(), n);
      CHECK(dod_s == dod_v);
      CHECK(es == ev);
    }

    // minmax and combine_weights
    {
      auto v = random_vec(rng, n, -5, 5);
      double mn_s, mx_s, mn_v, mx_v;
      scalar.minmax(v.data(), n, &mn_s, &mx_s);
      avx2->minmax(v.data(), n, &mn_v, &mx_v);
      CHECK(mn_s == mn_v);
      CHECK(mx_s == mx_v);
      auto batt = random_vec(rng, n, 0, 1e-2);
      std::vector<double> ws(n), wv(n);
      scalar.combine_weights(v.data(), batt.data(), mn_s, 0.3, 0.0, 80.0, 0.5,
                             ws.data(), n);
      avx2->combine_weights(v.data(), batt.data(), mn_s, 0.3, 0.0, 80.0, 0.5,
                            wv.data(), n);
      CHECK(ws == wv);
    }
  }
}

TEST_CASE("kernel semantics on small fixtures") {
  const auto& ops = kernels::active_ops();

  SUBCASE("battery step clamps and flags exhaustion") {
    double dod = 0.99;
    double cons = 5000.0, harv = 0.0;
    std::uint8_t exhausted = 0;
    ops.battery_step(&dod, &cons, &harv, 1.0 / 5000.0, &exhausted, 1);
    CHECK(dod == 1.0);
    CHECK(exhausted == 1);

    dod = 0.2;
    cons = 0.0;
    harv = 5000.0;
    ops.battery_step(&dod, &cons, &harv, 1.0 / 5000.0, &exhausted, 1);
    CHECK(dod == 0.0);  // charging cannot push dod below zero
    CHECK(exhausted == 0);
  }

  SUBCASE("gated add saturates at the cap") {
    std::vector<double> v = {0.95, 0.2, 0.5};
    std::vector<double> gate = {1.0, 0.0, 1.0};
    ops.gated_saturating_add(v.data(), gate.data(), 0.2, 1.0, 3);
    CHECK(v[0] == 1.0);
    CHECK(v[1] == 0.2);
    CHECK(v[2] == doctest::Approx(0.7));
  }

  SUBCASE("minmax") {
    std::vector<double> v = {3.0, -1.0, 7.5, 2.0, 2.0};
    double mn, mx;
    ops.minmax(v.data(), v.size(), &mn, &mx);
    CHECK(mn == -1.0);
    CHECK(mx == 7.5);
  }
}

TEST_CASE("active backend is reported") {
  const auto name = kernels::active_backend_name();
  CHECK((name == "scalar" || name == "avx2"));
}
