#include "ralt/kernels.hpp"

#if defined(RALT_BUILD_AVX2) && defined(__AVX2__)

#include <immintrin.h>

#include <cmath>

// AVX2 variants of the scalar kernels. Deliberately no FMA: mul and add are
// kept separate so every lane performs exactly the scalar operation sequence
// and the two backends agree bit-for-bit.

namespace ralt::kernels {
namespace {

inline void store_mask(std::uint8_t* out, std::size_t i, __m256d m) {
  const int bits = _mm256_movemask_pd(m);
  out[i + 0] = (bits >> 0) & 1;
  out[i + 1] = (bits >> 1) & 1;
  out[i + 2] = (bits >> 2) & 1;
  out[i + 3] = (bits >> 3) & 1;
}

void orbit_positions_avx2(const double* ux, const double* uy, const double* uz,
                          const double* wx, const double* wy, const double* wz,
                          const double* cos_phi, const double* sin_phi,
                          double cos_wt, double sin_wt, double radius_km,
                          double* out_x, double* out_y, double* out_z,
                          std::size_t n) {
  const __m256d vc = _mm256_set1_pd(cos_wt);
  const __m256d vs = _mm256_set1_pd(sin_wt);
  const __m256d vr = _mm256_set1_pd(radius_km);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d cp = _mm256_loadu_pd(cos_phi + i);
    const __m256d sp = _mm256_loadu_pd(sin_phi + i);
    const __m256d c =
        _mm256_sub_pd(_mm256_mul_pd(cp, vc), _mm256_mul_pd(sp, vs));
    const __m256d s =
        _mm256_add_pd(_mm256_mul_pd(sp, vc), _mm256_mul_pd(cp, vs));
    const __m256d px = _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(ux + i), c),
                                     _mm256_mul_pd(_mm256_loadu_pd(wx + i), s));
    const __m256d py = _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(uy + i), c),
                                     _mm256_mul_pd(_mm256_loadu_pd(wy + i), s));
    const __m256d pz = _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(uz + i), c),
                                     _mm256_mul_pd(_mm256_loadu_pd(wz + i), s));
    _mm256_storeu_pd(out_x + i, _mm256_mul_pd(vr, px));
    _mm256_storeu_pd(out_y + i, _mm256_mul_pd(vr, py));
    _mm256_storeu_pd(out_z + i, _mm256_mul_pd(vr, pz));
  }
  for (; i < n; ++i) {
    const double c = cos_phi[i] * cos_wt - sin_phi[i] * sin_wt;
    const double s = sin_phi[i] * cos_wt + cos_phi[i] * sin_wt;
    out_x[i] = radius_km * (ux[i] * c + wx[i] * s);
    out_y[i] = radius_km * (uy[i] * c + wy[i] * s);
    out_z[i] = radius_km * (uz[i] * c + wz[i] * s);
  }
}

void pair_delay_avx2(const double* ax, const double* ay, const double* az,
                     const double* bx, const double* by, const double* bz,
                     double inv_c, double* out_s, std::size_t n) {
  const __m256d vinv = _mm256_set1_pd(inv_c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx =
        _mm256_sub_pd(_mm256_loadu_pd(ax + i), _mm256_loadu_pd(bx + i));
    const __m256d dy =
        _mm256_sub_pd(_mm256_loadu_pd(ay + i), _mm256_loadu_pd(by + i));
    const __m256d dz =
        _mm256_sub_pd(_mm256_loadu_pd(az + i), _mm256_loadu_pd(bz + i));
    const __m256d d2 =
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                      _mm256_mul_pd(dz, dz));
    _mm256_storeu_pd(out_s + i, _mm256_mul_pd(_mm256_sqrt_pd(d2), vinv));
  }
  for (; i < n; ++i) {
    const double dx = ax[i] - bx[i];
    const double dy = ay[i] - by[i];
    const double dz = az[i] - bz[i];
    out_s[i] = std::sqrt(dx * dx + dy * dy + dz * dz) * inv_c;
  }
}

void visible_mask_avx2(const double* sx, const double* sy, const double* sz,
                       double site_x, double site_y, double site_z,
                       double up_x, double up_y, double up_z, double sin_min_el,
                       std::uint8_t* out, std::size_t n) {
  const __m256d gx = _mm256_set1_pd(site_x), gy = _mm256_set1_pd(site_y),
                gz = _mm256_set1_pd(site_z);
  const __m256d ux = _mm256_set1_pd(up_x), uy = _mm256_set1_pd(up_y),
                uz = _mm256_set1_pd(up_z);
  const __m256d vsin = _mm256_set1_pd(sin_min_el);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(sx + i), gx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(sy + i), gy);
    const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(sz + i), gz);
    const __m256d along =
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, ux), _mm256_mul_pd(dy, uy)),
                      _mm256_mul_pd(dz, uz));
    const __m256d range = _mm256_sqrt_pd(
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                      _mm256_mul_pd(dz, dz)));
    store_mask(out, i,
               _mm256_cmp_pd(along, _mm256_mul_pd(vsin, range), _CMP_GE_OQ));
  }
  for (; i < n; ++i) {
    const double dx = sx[i] - site_x;
    const double dy = sy[i] - site_y;
    const double dz = sz[i] - site_z;
    const double along = dx * up_x + dy * up_y + dz * up_z;
    const double range = std::sqrt(dx * dx + dy * dy + dz * dz);
    out[i] = (along >= sin_min_el * range) ? 1 : 0;
  }
}

void eclipse_mask_avx2(const double* x, const double* y, const double* z,
                       double sun_x, double sun_y, double sun_z,
                       double earth_radius_km, std::uint8_t* out,
                       std::size_t n) {
  const __m256d sx = _mm256_set1_pd(sun_x), sy = _mm256_set1_pd(sun_y),
                sz = _mm256_set1_pd(sun_z);
  const __m256d vr2 = _mm256_set1_pd(earth_radius_km * earth_radius_km);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    const __m256d vz = _mm256_loadu_pd(z + i);
    const __m256d along =
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(vx, sx), _mm256_mul_pd(vy, sy)),
                      _mm256_mul_pd(vz, sz));
    const __m256d norm2 =
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(vx, vx), _mm256_mul_pd(vy, vy)),
                      _mm256_mul_pd(vz, vz));
    const __m256d perp2 = _mm256_sub_pd(norm2, _mm256_mul_pd(along, along));
    const __m256d m = _mm256_and_pd(_mm256_cmp_pd(along, zero, _CMP_LT_OQ),
                                    _mm256_cmp_pd(perp2, vr2, _CMP_LT_OQ));
    store_mask(out, i, m);
  }
  const double r2 = earth_radius_km * earth_radius_km;
  for (; i < n; ++i) {
    const double along = x[i] * sun_x + y[i] * sun_y + z[i] * sun_z;
    const double norm2 = x[i] * x[i] + y[i] * y[i] + z[i] * z[i];
    const double perp2 = norm2 - along * along;
    out[i] = (along < 0.0 && perp2 < r2) ? 1 : 0;
  }
}

void gated_saturating_add_avx2(double* v, const double* gate, double delta,
                               double hi, std::size_t n) {
  const __m256d vd = _mm256_set1_pd(delta);
  const __m256d vhi = _mm256_set1_pd(hi);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d g = _mm256_loadu_pd(gate + i);
    const __m256d x =
        _mm256_add_pd(_mm256_loadu_pd(v + i), _mm256_mul_pd(vd, g));
    _mm256_storeu_pd(v + i, _mm256_min_pd(x, vhi));
  }
  for (; i < n; ++i) v[i] = std::min(v[i] + delta * gate[i], hi);
}

void gated_saturating_sub_avx2(double* v, const double* gate, double delta,
                               std::size_t n) {
  const __m256d vd = _mm256_set1_pd(delta);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d g = _mm256_loadu_pd(gate + i);
    const __m256d x =
        _mm256_sub_pd(_mm256_loadu_pd(v + i), _mm256_mul_pd(vd, g));
    _mm256_storeu_pd(v + i, _mm256_max_pd(x, zero));
  }
  for (; i < n; ++i) v[i] = std::max(v[i] - delta * gate[i], 0.0);
}

void axpy_avx2(double* y, const double* x, double a, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t =
        _mm256_add_pd(_mm256_loadu_pd(y + i),
                      _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(y + i, t);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void battery_step_avx2(double* dod, const double* consumed,
                       const double* harvested, double inv_capacity,
                       std::uint8_t* exhausted, std::size_t n) {
  const __m256d vinv = _mm256_set1_pd(inv_capacity);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d net = _mm256_sub_pd(_mm256_loadu_pd(consumed + i),
                                      _mm256_loadu_pd(harvested + i));
    const __m256d raw =
        _mm256_add_pd(_mm256_loadu_pd(dod + i), _mm256_mul_pd(net, vinv));
    store_mask(exhausted, i, _mm256_cmp_pd(raw, one, _CMP_GT_OQ));
    _mm256_storeu_pd(dod + i, _mm256_min_pd(_mm256_max_pd(raw, zero), one));
  }
  for (; i < n; ++i) {
    const double raw = dod[i] + (consumed[i] - harvested[i]) * inv_capacity;
    exhausted[i] = (raw > 1.0) ? 1 : 0;
    dod[i] = std::min(std::max(raw, 0.0), 1.0);
  }
}

void minmax_avx2(const double* v, std::size_t n, double* out_min,
                 double* out_max) {
  double mn = v[0], mx = v[0];
  std::size_t i = 0;
  if (n >= 4) {
    __m256d vmn = _mm256_loadu_pd(v);
    __m256d vmx = vmn;
    for (i = 4; i + 4 <= n; i += 4) {
      const __m256d x = _mm256_loadu_pd(v + i);
      vmn = _mm256_min_pd(vmn, x);
      vmx = _mm256_max_pd(vmx, x);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vmn);
    mn = std::min(std::min(lanes[0], lanes[1]), std::min(lanes[2], lanes[3]));
    _mm256_store_pd(lanes, vmx);
    mx = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  }
  for (; i < n; ++i) {
    mn = std::min(mn, v[i]);
    mx = std::max(mx, v[i]);
  }
  *out_min = mn;
  *out_max = mx;
}

void combine_weights_avx2(const double* delay, const double* batt, double dmin,
                          double dscale, double bmin, double bscale,
                          double alpha, double* out, std::size_t n) {
  const double beta = 1.0 - alpha;
  const __m256d vdmin = _mm256_set1_pd(dmin), vdscale = _mm256_set1_pd(dscale);
  const __m256d vbmin = _mm256_set1_pd(bmin), vbscale = _mm256_set1_pd(bscale);
  const __m256d va = _mm256_set1_pd(alpha), vb = _mm256_set1_pd(beta);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d nd = _mm256_mul_pd(
        _mm256_sub_pd(_mm256_loadu_pd(delay + i), vdmin), vdscale);
    const __m256d nb =
        _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(batt + i), vbmin), vbscale);
    _mm256_storeu_pd(
        out + i, _mm256_add_pd(_mm256_mul_pd(va, nd), _mm256_mul_pd(vb, nb)));
  }
  for (; i < n; ++i) {
    out[i] = alpha * ((delay[i] - dmin) * dscale) +
             beta * ((batt[i] - bmin) * bscale);
  }
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops = {
      orbit_positions_avx2,     pair_delay_avx2,
      visible_mask_avx2,        eclipse_mask_avx2,
      gated_saturating_add_avx2, gated_saturating_sub_avx2,
      axpy_avx2,                battery_step_avx2,
      minmax_avx2,              combine_weights_avx2,
  };
  return ops;
}

}  // namespace ralt::kernels

#endif  // RALT_BUILD_AVX2 && __AVX2__
