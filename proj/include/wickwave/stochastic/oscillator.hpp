#pragma once

namespace wickwave {

// Exact transition of one real mode over a step h for
//   undamped:  x'' + w^2 x = dW
//   damped:    x'' + x' + w^2 x = dW
// with unit-intensity noise: state' = phi * state + increment, increment ~ N(0, cov).
struct OscillatorStep {
  double phi[2][2];
  double cov[2][2];
};

OscillatorStep oscillatorStep(double omega, double h, bool damped);

// Lower Cholesky factor of a 2x2 covariance with a 1e-14 diagonal floor.
struct Chol2 {
  double l11, l21, l22;
};
Chol2 cholesky2(const double cov[2][2]);

}  // namespace wickwave
