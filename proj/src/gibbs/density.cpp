#include "wickwave/gibbs/density.hpp"

#include <cmath>
#include <limits>

#include "wickwave/dynamics/nonlinearity.hpp"
#include "wickwave/stochastic/convolution.hpp"
#include "wickwave/stochastic/variance.hpp"

namespace wickwave {

GibbsSpec::GibbsSpec(double N_, int k_) : N(N_), k(k_) {
  if (!(N_ > 0.0)) throw std::invalid_argument("Gibbs cutoff N must be positive");
  if (k_ < 3 || k_ % 2 == 0) throw std::invalid_argument("Gibbs nonlinearity degree k must be odd and >= 3");
  alpha = alphaN(N_);
}

GibbsSpec GibbsSpec::withAlpha(double a) const {
  GibbsSpec s = *this;
  s.alpha = a;
  return s;
}

Lattice GibbsSpec::lattice() const { return Lattice(int(std::ceil(N))); }

double wickPotential(const SpectralField& u, const GibbsSpec& spec) {
  if (spec.potentialOff) return 0.0;
  return wickPotentialValue(u, spec.alpha, spec.k, spec.N);
}

double gibbsLogDensity(const SpectralField& u, const GibbsSpec& spec) { return -wickPotential(u, spec); }

double gibbsDensityRN(const SpectralField& u, const GibbsSpec& spec) {
  const double r = std::exp(gibbsLogDensity(u, spec));
  if (!std::isfinite(r)) throw std::overflow_error("density overflows; use gibbsLogDensity");
  return r;
}

double pointwisePotentialFloor(int k, double alpha) {
  const int m = k + 1;
  const double B = 2.0 * std::sqrt(m * std::max(alpha, 1e-12)) + 1.0;
  const int n = 20000;
  double best = hermite(m, -B, alpha), at = -B;
  for (int i = 1; i <= n; ++i) {
    const double y = -B + 2.0 * B * i / n;
    const double h = hermite(m, y, alpha);
    if (h < best) best = h, at = y;
  }
  // Newton on H_{m}' = m H_{m-1}, H_{m}'' = m (m-1) H_{m-2}.
  for (int it = 0; it < 50; ++it) {
    const double d1 = m * hermite(m - 1, at, alpha);
    const double d2 = m * (m - 1) * hermite(m - 2, at, alpha);
    if (!(d2 > 0.0)) break;
    const double next = at - d1 / d2;
    if (std::abs(next - at) < 1e-15 * std::max(1.0, std::abs(at))) break;
    at = next;
  }
  best = std::min(best, hermite(m, at, alpha));
  return best / m;
}

DensityBound estimateDensityBound(const GibbsSpec& spec, const NoiseStream& noise, int starts, double inflation) {
  DensityBound out;
  out.starts = starts;
  if (spec.potentialOff) {
    out.logBound = 0.0;  // R_N == 1 exactly
    return out;
  }
  const double scales[] = {0.5, 1.0, 2.0};
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < starts; ++s) {
    const Lattice l = spec.lattice();
    SpectralField u = sampleMu1Pair(l, noise.forMember(std::uint32_t(s)), spec.N, Purpose::BoundSearch).position;
    u *= scales[s % 3];
    double V = wickPotential(u, spec);
    double eta = 0.1;
    for (int it = 0; it < 5000; ++it) {
      const SpectralField F = hermiteNonlinearity(u, spec.alpha, spec.k, spec.N);
      // Gradient in the real coordinates of each canonical mode: 1 x F_0, 2 x F_n.
      SpectralField G(u.lattice());
      double g2 = 0.0;
      forEachCanonical(u.lattice(), spec.N, [&](Frequency n, std::size_t idx) {
        const bool zero = n.n1 == 0 && n.n2 == 0;
        const cplx g = (zero ? 1.0 : 2.0) * F.coeffs()[idx];
        G.setPair(n, g);
        g2 += std::norm(g);
      });
      if (g2 < 1e-26) break;
      bool moved = false;
      for (int bt = 0; bt < 60; ++bt) {
        SpectralField trial = u;
        trial.axpy(-eta, G);
        const double Vt = wickPotential(trial, spec);
        if (Vt <= V - 1e-4 * eta * g2) {
          moved = V - Vt > 1e-15 * std::max(1.0, std::abs(V));
          u = std::move(trial);
          V = Vt;
          eta *= 1.5;
          break;
        }
        eta *= 0.5;
      }
      if (!moved) break;
    }
    best = std::min(best, V);
  }
  out.minPotential = best;
  out.logBound = -best + std::log(inflation);
  return out;
}

}  // namespace wickwave
