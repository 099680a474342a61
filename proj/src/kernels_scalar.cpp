#include "ralt/kernels.hpp"

#include <cmath>

namespace ralt::kernels {
namespace {

void orbit_positions_scalar(const double* ux, const double* uy,
                            const double* uz, const double* wx,
                            const double* wy, const double* wz,
                            const double* cos_phi, const double* sin_phi,
                            double cos_wt, double sin_wt, double radius_km,
                            double* out_x, double* out_y, double* out_z,
                            std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double c = cos_phi[i] * cos_wt - sin_phi[i] * sin_wt;
    const double s = sin_phi[i] * cos_wt + cos_phi[i] * sin_wt;
    out_x[i] = radius_km * (ux[i] * c + wx[i] * s);
    out_y[i] = radius_km * (uy[i] * c + wy[i] * s);
    out_z[i] = radius_km * (uz[i] * c + wz[i] * s);
  }
}

void pair_delay_scalar(const double* ax, const double* ay, const double* az,
                       const double* bx, const double* by, const double* bz,
                       double inv_c, double* out_s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = ax[i] - bx[i];
    const double dy = ay[i] - by[i];
    const double dz = az[i] - bz[i];
    out_s[i] = std::sqrt(dx * dx + dy * dy + dz * dz) * inv_c;
  }
}

void visible_mask_scalar(const double* sx, const double* sy, const double* sz,
                         double site_x, double site_y, double site_z,
                         double up_x, double up_y, double up_z,
                         double sin_min_el, std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = sx[i] - site_x;
    const double dy = sy[i] - site_y;
    const double dz = sz[i] - site_z;
    const double along = dx * up_x + dy * up_y + dz * up_z;
    const double range = std::sqrt(dx * dx + dy * dy + dz * dz);
    out[i] = (along >= sin_min_el * range) ? 1 : 0;
  }
}

void eclipse_mask_scalar(const double* x, const double* y, const double* z,
                         double sun_x, double sun_y, double sun_z,
                         double earth_radius_km, std::uint8_t* out,
                         std::size_t n) {
  const double r2 = earth_radius_km * earth_radius_km;
  for (std::size_t i = 0; i < n; ++i) {
    const double along = x[i] * sun_x + y[i] * sun_y + z[i] * sun_z;
    const double norm2 = x[i] * x[i] + y[i] * y[i] + z[i] * z[i];
    const double perp2 = norm2 - along * along;
    out[i] = (along < 0.0 && perp2 < r2) ? 1 : 0;
  }
}

void gated_saturating_add_scalar(double* v, const double* gate, double delta,
                                 double hi, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = std::min(v[i] + delta * gate[i], hi);
  }
}

void gated_saturating_sub_scalar(double* v, const double* gate, double delta,
                                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = std::max(v[i] - delta * gate[i], 0.0);
  }
}

void axpy_scalar(double* y, const double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void battery_step_scalar(double* dod, const double* consumed,
                         const double* harvested, double inv_capacity,
                         std::uint8_t* exhausted, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double raw = dod[i] + (consumed[i] - harvested[i]) * inv_capacity;
    exhausted[i] = (raw > 1.0) ? 1 : 0;
    dod[i] = std::min(std::max(raw, 0.0), 1.0);
  }
}

void minmax_scalar(const double* v, std::size_t n, double* out_min,
                   double* out_max) {
  double mn = v[0], mx = v[0];
  for (std::size_t i = 1; i < n; ++i) {
    mn = std::min(mn, v[i]);
    mx = std::max(mx, v[i]);
  }
  *out_min = mn;
  *out_max = mx;
}

void combine_weights_scalar(const double* delay, const double* batt,
                            double dmin, double dscale, double bmin,
                            double bscale, double alpha, double* out,
                            std::size_t n) {
  const double beta = 1.0 - alpha;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = alpha * ((delay[i] - dmin) * dscale) +
             beta * ((batt[i] - bmin) * bscale);
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {
      orbit_positions_scalar,     pair_delay_scalar,
      visible_mask_scalar,        eclipse_mask_scalar,
      gated_saturating_add_scalar, gated_saturating_sub_scalar,
      axpy_scalar,                battery_step_scalar,
      minmax_scalar,              combine_weights_scalar,
  };
  return ops;
}

}  // namespace ralt::kernels
