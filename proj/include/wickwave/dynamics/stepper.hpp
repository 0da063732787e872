#pragma once

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "wickwave/dynamics/nonlinearity.hpp"
#include "wickwave/dynamics/propagators.hpp"
#include "wickwave/stochastic/wick.hpp"

namespace wickwave {

class BlowupError : public std::runtime_error {
 public:
  BlowupError(const std::string& msg, double t, double norm, FieldPair lastGood)
      : std::runtime_error(msg), time(t), norm(norm), lastGood(std::move(lastGood)) {}
  double time;
  double norm;
  FieldPair lastGood;
};

struct StepperConfig {
  int k = 3;
  bool damped = false;
  double dt = 0.01;
  double epsilon = 0.1;
  double ceiling = std::numeric_limits<double>::infinity();  // on ||v||_{H^{1-eps}}
  double projectionRadius = kNoProjection;
};

// Strang step for v'' + (damped ? v' : 0) + (1 - Delta) v + sum_l C(k,l) Xi_l v^{k-l} = 0:
// half kick, exact linear flow over dt, half kick. Both kicks use the forcing at
// the step midpoint.
class VStepper {
 public:
  VStepper(const Lattice& lattice, const StepperConfig& cfg);

  FieldPair step(const FieldPair& state, const std::vector<SpectralField>& midForcing) const;

  // Integrates nSteps from t0 with forcing taken from `wick` at step midpoints.
  // observer(t, state) is called at t0 and after every step.
  FieldPair integrate(const FieldPair& initial, const WickPowerSeries& wick, double t0, int nSteps,
                      const std::function<void(double, const FieldPair&)>& observer = {}) const;

  const StepperConfig& config() const { return cfg_; }

 private:
  StepperConfig cfg_;
  LinearFlow flow_;
};

// Convenience single step matching the module interface.
FieldPair stepVEquation(const FieldPair& state, const WickPowerSeries& wick, double t, bool damped, double dt,
                        int k = 3);

}  // namespace wickwave
