#include "wickwave/dynamics/stepper.hpp"

#include <cmath>

#include "wickwave/spectral/multipliers.hpp"

namespace wickwave {

VStepper::VStepper(const Lattice& lattice, const StepperConfig& cfg)
    : cfg_(cfg), flow_(lattice, cfg.dt, cfg.damped) {
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("dt must be positive");
}

FieldPair VStepper::step(const FieldPair& s, const std::vector<SpectralField>& xi) const {
  FieldPair a = s;
  a.velocity.axpy(-0.5 * cfg_.dt, wickNonlinearity(a.position, xi, cfg_.k, cfg_.projectionRadius));
  FieldPair b = flow_.apply(a);
  b.velocity.axpy(-0.5 * cfg_.dt, wickNonlinearity(b.position, xi, cfg_.k, cfg_.projectionRadius));
  return b;
}

FieldPair VStepper::integrate(const FieldPair& initial, const WickPowerSeries& wick, double t0, int nSteps,
                              const std::function<void(double, const FieldPair&)>& observer) const {
  FieldPair s = initial;
  if (observer) observer(t0, s);
  for (int j = 0; j < nSteps; ++j) {
    const double t = t0 + j * cfg_.dt;
    FieldPair next = step(s, wick.forcingAt(t + 0.5 * cfg_.dt));
    const double norm = sobolevNorm(next.position, 1.0 - cfg_.epsilon);
    if (!(norm <= cfg_.ceiling))
      throw BlowupError("blowup guard: ||v||_{H^{1-eps}} = " + std::to_string(norm) + " exceeds ceiling " +
                            std::to_string(cfg_.ceiling) + " at t = " + std::to_string(t + cfg_.dt),
                        t + cfg_.dt, norm, s);
    s = std::move(next);
    if (observer) observer(t + cfg_.dt, s);
  }
  return s;
}

FieldPair stepVEquation(const FieldPair& state, const WickPowerSeries& wick, double t, bool damped, double dt, int k) {
  StepperConfig cfg;
  cfg.k = k;
  cfg.damped = damped;
  cfg.dt = dt;
  return VStepper(state.lattice(), cfg).step(state, wick.forcingAt(t + 0.5 * dt));
}

}  // namespace wickwave
