#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace ralt::kernels {

// Data-parallel inner loops of the simulator, provided as a scalar reference
// implementation and an AVX2 variant selected once at startup. Both paths
// are written to produce bit-identical results (same operation order, no
// fused multiply-add), which the equivalence tests assert.
//
// All arrays are structure-of-arrays, double precision, length n.
struct Ops {
  // Circular-orbit positions at a common epoch. For satellite i with
  // orbital-plane basis (u_i, w_i) and initial phase phi_i, the position is
  //   r_i = a * (u_i * cos(phi_i + wt) + w_i * sin(phi_i + wt)),
  // expanded through the angle-sum identity so only the two scalars
  // cos(wt), sin(wt) carry trigonometry.
  void (*orbit_positions)(const double* ux, const double* uy, const double* uz,
                          const double* wx, const double* wy, const double* wz,
                          const double* cos_phi, const double* sin_phi,
                          double cos_wt, double sin_wt, double radius_km,
                          double* out_x, double* out_y, double* out_z,
                          std::size_t n);

  // Propagation delay |a-b| / c per pair.
  void (*pair_delay)(const double* ax, const double* ay, const double* az,
                     const double* bx, const double* by, const double* bz,
                     double inv_c, double* out_s, std::size_t n);

  // Visibility of n satellites from one ground site: elevation above the
  // local horizon is at least min_elevation, tested as
  //   dot(sat - site, up) >= sin(min_el) * |sat - site|
  // with up the site's unit radial. Valid for min_el in [0, 90] degrees.
  void (*visible_mask)(const double* sx, const double* sy, const double* sz,
                       double site_x, double site_y, double site_z,
                       double up_x, double up_y, double up_z,
                       double sin_min_el, std::uint8_t* out, std::size_t n);

  // Cylindrical Earth-shadow test: anti-sunward component positive and
  // perpendicular distance from the shadow axis below the Earth radius.
  void (*eclipse_mask)(const double* x, const double* y, const double* z,
                       double sun_x, double sun_y, double sun_z,
                       double earth_radius_km, std::uint8_t* out,
                       std::size_t n);

  // v[i] = min(v[i] + delta * gate[i], hi); gate entries are 0.0 or 1.0.
  void (*gated_saturating_add)(double* v, const double* gate, double delta,
                               double hi, std::size_t n);

  // v[i] = max(v[i] - delta * gate[i], 0.0).
  void (*gated_saturating_sub)(double* v, const double* gate, double delta,
                               std::size_t n);

  // y[i] += a * x[i]  (TNID weighted aggregation).
  void (*axpy)(double* y, const double* x, double a, std::size_t n);

  // dod[i] = clamp(dod[i] + (consumed[i] - harvested[i]) * inv_capacity,
  //                0, 1); exhausted[i] = 1 where the raw value exceeded 1.
  void (*battery_step)(double* dod, const double* consumed,
                       const double* harvested, double inv_capacity,
                       std::uint8_t* exhausted, std::size_t n);

  void (*minmax)(const double* v, std::size_t n, double* out_min,
                 double* out_max);

  // out[i] = alpha * (delay[i] - dmin) * dscale
  //        + (1 - alpha) * (batt[i] - bmin) * bscale
  // (min-max normalized weighted average of the two edge metrics).
  void (*combine_weights)(const double* delay, const double* batt,
                          double dmin, double dscale, double bmin,
                          double bscale, double alpha, double* out,
                          std::size_t n);
};

const Ops& scalar_ops();
#if defined(RALT_BUILD_AVX2)
const Ops& avx2_ops();
#endif

// AVX2 table when this build carries it and the CPU supports it, else null.
const Ops* try_avx2_ops();

// The backend picked at startup: AVX2 when the CPU supports it, otherwise
// scalar. RALT_KERNELS=scalar|avx2 in the environment overrides.
const Ops& active_ops();
std::string active_backend_name();

}  // namespace ralt::kernels
