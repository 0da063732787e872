#include "wickwave/spectral/multipliers.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wickwave/spectral/transform.hpp"

namespace wickwave {

SpectralField applyMultiplier(const SpectralField& f, const Multiplier& m) {
  const Lattice& l = f.lattice();
  SpectralField out(l);
  for (std::size_t i = 0; i < l.size(); ++i) {
    const Frequency n = l.frequency(i);
    const double a = m(n);
    const double b = m(Frequency{-n.n1, -n.n2});
    if (a != b && std::abs(a - b) > 1e-14 * std::max(std::abs(a), std::abs(b)))
      throw std::invalid_argument("multiplier is not even; it would break Hermitian symmetry");
    out.coeffs()[i] = a * f.coeffs()[i];
  }
  return out;
}

SpectralField projectLow(const SpectralField& f, double N) {
  SpectralField out = f;
  const double r2 = N * N;
  for (std::size_t i = 0; i < out.coeffs().size(); ++i)
    if (f.lattice().frequency(i).norm2() > r2) out.coeffs()[i] = 0.0;
  return out;
}

SpectralField projectHigh(const SpectralField& f, double N) {
  SpectralField out = f;
  const double r2 = N * N;
  for (std::size_t i = 0; i < out.coeffs().size(); ++i)
    if (f.lattice().frequency(i).norm2() <= r2) out.coeffs()[i] = 0.0;
  return out;
}

IOperatorSpec::IOperatorSpec(double N_, double s_, IProfile p) : N(N_), s(s_), profile(p) {
  if (!(N_ > 0.0)) throw std::invalid_argument("I-operator cutoff N must be positive");
  if (!(s_ > 0.0 && s_ <= 1.0)) throw std::invalid_argument("I-operator regularity s must lie in (0,1]");
}

double iMultiplier(const IOperatorSpec& spec, double r) {
  if (r <= spec.N) return 1.0;
  const double q = std::log(r / spec.N);
  double w = 1.0;
  if (spec.profile == IProfile::Smoothstep && r < 2.0 * spec.N) {
    const double t = q / std::log(2.0);
    w = t * t * (3.0 - 2.0 * t);
  }
  return std::exp(-(1.0 - spec.s) * w * q);
}

double iMultiplier(const IOperatorSpec& spec, Frequency n) { return iMultiplier(spec, std::sqrt(n.norm2())); }

SpectralField applyI(const SpectralField& f, const IOperatorSpec& spec) {
  if (!std::isfinite(spec.N)) return f;
  return applyMultiplier(f, [&](Frequency n) { return iMultiplier(spec, n); });
}

double sobolevNorm(const SpectralField& f, double s, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("Sobolev exponent p must be >= 1");
  const Lattice& l = f.lattice();
  if (p == 2.0) {
    double sum = 0.0;
    for (std::size_t i = 0; i < l.size(); ++i)
      sum += std::pow(1.0 + l.frequency(i).norm2(), s) * std::norm(f.coeffs()[i]);
    return std::sqrt(sum);
  }
  const SpectralField g = s == 0.0 ? f : applyMultiplier(f, [s](Frequency n) { return std::pow(1.0 + n.norm2(), 0.5 * s); });
  const auto values = gridTransform(l.gridSize()).toGrid(g);
  double sum = 0.0;
  if (std::isinf(p)) {
    for (double v : values) sum = std::max(sum, std::abs(v));
    return sum;
  }
  for (double v : values) sum += std::pow(std::abs(v), p);
  return std::pow(sum / double(values.size()), 1.0 / p);
}

}  // namespace wickwave
