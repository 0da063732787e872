#include "wickwave/stochastic/oscillator.hpp"

#include <cmath>
#include <stdexcept>

namespace wickwave {

OscillatorStep oscillatorStep(double w, double h, bool damped) {
  if (h < 0.0) throw std::invalid_argument("oscillator step must be nonnegative");
  OscillatorStep s{};
  if (!damped) {
    const double c = std::cos(w * h), sn = std::sin(w * h);
    s.phi[0][0] = c;
    s.phi[0][1] = sn / w;
    s.phi[1][0] = -w * sn;
    s.phi[1][1] = c;
    const double s2 = std::sin(2.0 * w * h) / (4.0 * w);
    s.cov[0][0] = (0.5 * h - s2) / (w * w);
    s.cov[0][1] = s.cov[1][0] = sn * sn / (2.0 * w * w);
    s.cov[1][1] = 0.5 * h + s2;
    return s;
  }
  const double nu = std::sqrt(w * w - 0.25);
  const double e = std::exp(-0.5 * h);
  const double c = std::cos(nu * h), sn = std::sin(nu * h);
  s.phi[0][0] = e * (c + sn / (2.0 * nu));
  s.phi[0][1] = e * sn / nu;
  s.phi[1][0] = -w * w * e * sn / nu;
  s.phi[1][1] = e * (c - sn / (2.0 * nu));

  // Integrals over [0,h] of e^{-tau}, e^{-tau} cos(b tau), e^{-tau} sin(b tau), b = 2 nu.
  const double b = 2.0 * nu;
  const double eh = std::exp(-h);
  const double J0 = -std::expm1(-h);
  const double sb = std::sin(0.5 * b * h);
  const double oneMinusCos = J0 + 2.0 * eh * sb * sb;  // 1 - e^{-h} cos(bh)
  const double Jc = (oneMinusCos + b * eh * std::sin(b * h)) / (1.0 + b * b);
  const double Js = (-eh * std::sin(b * h) + b * oneMinusCos) / (1.0 + b * b);
  const double d = J0 - Jc;
  s.cov[0][0] = d / (2.0 * nu * nu);
  s.cov[0][1] = s.cov[1][0] = Js / (2.0 * nu) - d / (4.0 * nu * nu);
  s.cov[1][1] = 0.5 * (J0 + Jc) - Js / (2.0 * nu) + d / (8.0 * nu * nu);
  return s;
}

Chol2 cholesky2(const double cov[2][2]) {
  constexpr double floor = 1e-14;
  Chol2 L{};
  if (cov[0][0] <= floor) {
    L.l11 = std::sqrt(std::max(cov[0][0], 0.0));
    L.l21 = 0.0;
    L.l22 = std::sqrt(std::max(cov[1][1], 0.0));
    return L;
  }
  L.l11 = std::sqrt(cov[0][0]);
  L.l21 = cov[1][0] / L.l11;
  L.l22 = std::sqrt(std::max(cov[1][1] - L.l21 * L.l21, 0.0));
  return L;
}

}  // namespace wickwave
