#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ralt/constellation.hpp"
#include "ralt/rng.hpp"

namespace ralt {

enum class RadiationLevel { Low, Mean, High, Custom };

RadiationLevel radiation_level_from_string(const std::string& s);
std::string to_string(RadiationLevel level);

struct RadiationSample {
  double t_s = 0.0;
  double intensity = 0.0;  // normalized index in [0, 1]
};

struct RadiationSeries {
  std::vector<RadiationSample> samples;  // strictly increasing t
  RadiationLevel level = RadiationLevel::Custom;

  double first_t() const { return samples.front().t_s; }
  double last_t() const { return samples.back().t_s; }
};

struct RadiationModelParams {
  double density_base_kg_km3 = 5e-4;  // rho at I = 0 for the shell altitude
  double density_gain = 9.0;          // rho(I) = base * (1 + gain * I)
  double sleep_p_min = 0.0;
  double sleep_p_max = 0.02;
  double sleep_steepness = 2.0;
  double tid_rate_per_s = 2e-5;   // damage-units/s at unit intensity
  double tnid_rate_per_s = 2e-5;

  void validate() const;  // throws std::invalid_argument
};

// Parses the radiation CSV (`t_seconds,index` header) and min-max normalizes
// the raw index over the file. A single-valued file degenerates to I = 0.
// Throws std::runtime_error with a line number on malformed rows, empty
// files, or non-increasing timestamps.
RadiationSeries load_series(const std::string& path);
RadiationSeries parse_series(std::istream& in, const std::string& origin);

// Constant-mean synthetic series: Low/Mean/High -> 0.2/0.5/0.8 with +/-jitter
// uniform noise, clamped to [0, 1]. Samples at t = 0, step, ..., < horizon.
RadiationSeries synth_series(RadiationLevel level, double horizon_s,
                             double step_s, std::uint64_t seed,
                             double jitter = 0.05);

double level_mean_intensity(RadiationLevel level);

// Zero-order hold: value of the latest sample at or before t. Holds the last
// sample beyond the end of the series; throws if t precedes the first sample.
double intensity_at(const RadiationSeries& series, double t_s);

double density(double intensity, const RadiationModelParams& p);
double sleep_probability(double intensity, const RadiationModelParams& p);

// Bernoulli sleep draws, one per satellite in the given order. One uniform
// is consumed per satellite regardless of outcome so paired-policy runs see
// identical event streams.
std::vector<SatelliteId> sample_see_events(const std::vector<SatelliteId>& ids,
                                           double p, Rng& rng);

}  // namespace ralt
