#include "ralt/damage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ralt {

void DamageParams::validate() const {
  if (gamma_tid <= 0.0 || gamma_tid >= 1.0 || gamma_tnid <= 0.0 ||
      gamma_tnid >= 1.0)
    throw std::invalid_argument("damage: gammas must lie strictly in (0, 1)");
  if (beta_tid_max <= 0.0 || beta_tnid_max <= 0.0)
    throw std::invalid_argument("damage: beta maxima must be positive");
  if (anneal_rate_per_h <= 0.0)
    throw std::invalid_argument("damage: anneal rate must be positive");
}

double aggregate_tnid(const std::vector<TnidComponent>& locals) {
  if (locals.empty())
    throw std::invalid_argument("tnid aggregation needs at least one component");
  double wsum = 0.0;
  for (const auto& c : locals) {
    if (c.weight < 0.0)
      throw std::invalid_argument("tnid weights must be nonnegative");
    wsum += c.weight;
  }
  if (wsum <= 0.0)
    throw std::invalid_argument("tnid weights must not all be zero");
  double acc = 0.0;
  for (const auto& c : locals) acc += (c.weight / wsum) * c.local;
  return acc;
}

DamageState::DamageState(std::vector<TnidComponent> components,
                         double beta_tid)
    : beta_tid_(beta_tid), components_(std::move(components)) {
  double wsum = 0.0;
  for (const auto& c : components_) wsum += c.weight;
  if (components_.empty() || wsum <= 0.0)
    throw std::invalid_argument("damage state needs weighted tnid components");
  for (auto& c : components_) c.weight /= wsum;
  refresh_aggregate();
}

void DamageState::refresh_aggregate() {
  double acc = 0.0;
  for (const auto& c : components_) acc += c.weight * c.local;
  beta_tnid_ = acc;
}

void DamageState::accumulate(double intensity, double dt_s,
                             const RadiationModelParams& rp,
                             const DamageParams& dp) {
  if (dt_s < 0.0) throw std::invalid_argument("accumulate: dt must be >= 0");
  beta_tid_ =
      std::min(beta_tid_ + rp.tid_rate_per_s * intensity * dt_s, dp.beta_tid_max);
  const double inc = rp.tnid_rate_per_s * intensity * dt_s;
  for (auto& c : components_) c.local = std::min(c.local + inc, 1.0);
  refresh_aggregate();
}

void DamageState::apply_annealing(double duration_s, const DamageParams& dp) {
  if (duration_s < 0.0)
    throw std::invalid_argument("apply_annealing: duration must be >= 0");
  const double dec = dp.anneal_rate_per_h * duration_s / 3600.0;
  beta_tid_ = std::max(beta_tid_ - dec, 0.0);
  for (auto& c : components_) c.local = std::max(c.local - dec, 0.0);
  refresh_aggregate();
}

bool DamageState::fully_annealed() const {
  if (beta_tid_ > 0.0) return false;
  for (const auto& c : components_)
    if (c.local > 0.0) return false;
  return true;
}

void DamageState::set_uniform(double beta, const DamageParams& dp) {
  beta_tid_ = std::clamp(beta, 0.0, dp.beta_tid_max);
  for (auto& c : components_) c.local = std::clamp(beta, 0.0, 1.0);
  refresh_aggregate();
}

AnnealingDue needs_annealing(double beta_tid, double beta_tnid,
                             const DamageParams& p) {
  return {beta_tid >= p.gamma_tid * p.beta_tid_max,
          beta_tnid >= p.gamma_tnid * p.beta_tnid_max};
}

AnnealingDue needs_annealing(const DamageState& state, const DamageParams& p) {
  return needs_annealing(state.beta_tid(), state.beta_tnid(), p);
}

std::vector<TnidComponent> default_tnid_components() {
  return {{"power", 0.0, 0.4}, {"communication", 0.0, 0.4},
          {"payload", 0.0, 0.2}};
}

}  // namespace ralt
