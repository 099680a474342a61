#pragma once

#include <cmath>

namespace ralt {

// Physical constants (km, s, W, Wh units throughout unless noted).
inline constexpr double kMuEarthKm3S2 = 398600.4418;  // gravitational parameter
inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kLightSpeedKmS = 299792.458;
inline constexpr double kFiberVelocityFactor = 0.67;  // terrestrial fiber legs
inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * (kPi / 180.0); }
inline double rad2deg(double r) { return r * (180.0 / kPi); }

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }

  Vec3 normalized() const {
    const double n = norm();
    return n > 0.0 ? Vec3{x / n, y / n, z / n} : Vec3{};
  }
};

// Great-circle distance between two geodetic points on the spherical Earth.
inline double great_circle_km(double lat1_deg, double lon1_deg,
                              double lat2_deg, double lon2_deg) {
  const double p1 = deg2rad(lat1_deg), p2 = deg2rad(lat2_deg);
  const double dl = deg2rad(lon2_deg - lon1_deg);
  const double s1 = std::sin((p2 - p1) / 2.0), s2 = std::sin(dl / 2.0);
  const double h = s1 * s1 + std::cos(p1) * std::cos(p2) * s2 * s2;
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

}  // namespace ralt
