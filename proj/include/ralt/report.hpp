#pragma once

#include <string>
#include <vector>

#include "ralt/config.hpp"
#include "ralt/engine.hpp"

namespace ralt {

inline constexpr const char* kToolVersion = "0.1.0";

std::string metrics_csv(const std::vector<IntervalMetrics>& rows);
std::string telemetry_csv(const std::vector<TelemetryRow>& rows);
std::string summary_json(const RunSummary& summary, const ScenarioConfig& cfg);
std::string manifest_json(const ScenarioConfig& cfg,
                          const std::string& config_path,
                          const std::string& out_dir,
                          const std::vector<std::string>& overrides);

// One paired-design cell: a policy run at a radiation level and seed.
struct CompareCell {
  RadiationLevel level = RadiationLevel::Mean;
  Policy policy = Policy::Ralt;
  std::uint64_t seed = 0;
  RunSummary summary;
};

// Per-(level, policy) means plus pairwise percentage reductions against
// every policy in the table (positive: the row's policy is lower).
std::string comparison_csv(const std::vector<CompareCell>& cells,
                           const std::vector<Policy>& policies);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace ralt
