#pragma once

#include <string>
#include <vector>

#include "ralt/radiation.hpp"

namespace ralt {

struct TnidComponent {
  std::string name;
  double local = 0.0;   // component-local damage in [0, 1]
  double weight = 0.0;  // mission-criticality weight, normalized on build
};

struct DamageParams {
  double gamma_tid = 0.7;
  double gamma_tnid = 0.7;
  double beta_tid_max = 1.0;
  double beta_tnid_max = 1.0;
  double anneal_rate_per_h = 0.5;  // damage-units removed per hour

  void validate() const;  // throws std::invalid_argument
};

// Weighted aggregate of component-local TNID values. Weights are
// renormalized; an all-zero weight vector is rejected.
double aggregate_tnid(const std::vector<TnidComponent>& locals);

class DamageState {
 public:
  // Components' weights are normalized to sum to 1 at construction.
  explicit DamageState(std::vector<TnidComponent> components,
                       double beta_tid = 0.0);

  double beta_tid() const { return beta_tid_; }
  double beta_tnid() const { return beta_tnid_; }
  const std::vector<TnidComponent>& components() const { return components_; }

  void accumulate(double intensity, double dt_s,
                  const RadiationModelParams& rp, const DamageParams& dp);
  void apply_annealing(double duration_s, const DamageParams& dp);
  bool fully_annealed() const;

  // Used by the engine to seed heterogeneous start-of-scenario damage.
  void set_uniform(double beta, const DamageParams& dp);

 private:
  void refresh_aggregate();

  double beta_tid_ = 0.0;
  double beta_tnid_ = 0.0;
  std::vector<TnidComponent> components_;
};

struct AnnealingDue {
  bool tid = false;
  bool tnid = false;
  bool any() const { return tid || tnid; }
};

// Eq-style trigger: damage at or beyond gamma * beta_max (boundary
// inclusive) means recovery is due.
AnnealingDue needs_annealing(const DamageState& state, const DamageParams& p);
AnnealingDue needs_annealing(double beta_tid, double beta_tnid,
                             const DamageParams& p);

std::vector<TnidComponent> default_tnid_components();

}  // namespace ralt
