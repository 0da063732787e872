#include "wickwave/dynamics/splitting.hpp"

#include <cmath>
#include <stdexcept>

#include "wickwave/dynamics/nonlinearity.hpp"
#include "wickwave/stochastic/variance.hpp"

namespace wickwave {

TruncatedSdNLW::TruncatedSdNLW(const Lattice& lattice, const SplitConfig& cfg)
    : lattice_(lattice), cfg_(cfg), alpha_(cfg.alpha >= 0.0 ? cfg.alpha : alphaN(cfg.N)) {
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (cfg.k < 1) throw std::invalid_argument("k must be positive");
  forEachCanonical(lattice, 1e9, [&](Frequency n, std::size_t idx) {
    const double w = besselWeight(n);
    Mode m{n, idx, n.norm2() <= cfg.N * cfg.N, oscillatorStep(w, cfg.dt, false),
           oscillatorStep(w, cfg.dt, cfg.damping), {}};
    m.chol = cholesky2(m.damped.cov);
    modes_.push_back(m);
  });
}

FieldPair TruncatedSdNLW::ouHalfStep(const FieldPair& s, std::uint32_t stepIndex, const NoiseStream& noise,
                                     bool second) const {
  FieldPair out = s;
  if (!cfg_.damping) return out;
  // dv = -v dt + sqrt(2) dW over dt/2: mean e^{-dt/2} v, variance 1 - e^{-dt}.
  const double decay = std::exp(-0.5 * cfg_.dt);
  const double spread = std::sqrt(-std::expm1(-cfg_.dt));
  const NoiseStream ns = noise.withPurpose(second ? Purpose::OuSecondHalf : Purpose::OuFirstHalf);
  for (const auto& m : modes_) {
    if (!m.low) continue;
    cplx v = decay * s.velocity.coeffs()[m.idx];
    if (cfg_.noise) {
      const auto z = ns.normals4(stepIndex, m.n);
      const bool zero = m.n.n1 == 0 && m.n.n2 == 0;
      v += zero ? cplx(spread * z[0], 0.0) : spread * std::sqrt(0.5) * cplx(z[0], z[1]);
    }
    out.velocity.setPair(m.n, v);
  }
  return out;
}

FieldPair TruncatedSdNLW::hamiltonianStep(const FieldPair& s) const {
  FieldPair a = s;
  const double h = cfg_.dt;
  auto kick = [&](FieldPair& st) {
    if (!cfg_.nonlinearity) return;
    const SpectralField f = hermiteNonlinearity(st.position, alpha_, cfg_.k, cfg_.N);
    for (const auto& m : modes_)
      if (m.low) st.velocity.setPair(m.n, st.velocity.coeffs()[m.idx] - 0.5 * h * f.coeffs()[m.idx]);
  };
  kick(a);
  for (const auto& m : modes_) {
    if (!m.low) continue;
    const cplx x = a.position.coeffs()[m.idx], y = a.velocity.coeffs()[m.idx];
    a.position.setPair(m.n, m.rot.phi[0][0] * x + m.rot.phi[0][1] * y);
    a.velocity.setPair(m.n, m.rot.phi[1][0] * x + m.rot.phi[1][1] * y);
  }
  kick(a);
  return a;
}

FieldPair TruncatedSdNLW::step(const FieldPair& state, std::uint32_t stepIndex, const NoiseStream& noise) const {
  if (!(state.lattice() == lattice_)) throw std::invalid_argument("state lattice mismatch");
  FieldPair s = ouHalfStep(state, stepIndex, noise, false);
  s = hamiltonianStep(s);
  s = ouHalfStep(s, stepIndex, noise, true);
  const NoiseStream hs = noise.withPurpose(Purpose::HighModes);
  for (const auto& m : modes_) {
    if (m.low) continue;
    const cplx x = state.position.coeffs()[m.idx], y = state.velocity.coeffs()[m.idx];
    cplx nx = m.damped.phi[0][0] * x + m.damped.phi[0][1] * y;
    cplx ny = m.damped.phi[1][0] * x + m.damped.phi[1][1] * y;
    if (cfg_.noise && cfg_.damping) {
      // Per real component the forcing sqrt(2) dB_n has intensity 1.
      const auto z = hs.normals4(stepIndex, m.n);
      const cplx g1(z[0], z[1]), g2(z[2], z[3]);
      nx += m.chol.l11 * g1;
      ny += m.chol.l21 * g1 + m.chol.l22 * g2;
    }
    s.position.setPair(m.n, nx);
    s.velocity.setPair(m.n, ny);
  }
  return s;
}

double TruncatedSdNLW::hamiltonian(const FieldPair& s) const {
  double e = 0.0;
  for (std::size_t i = 0; i < lattice_.size(); ++i) {
    const Frequency n = lattice_.frequency(i);
    if (n.norm2() > cfg_.N * cfg_.N) continue;
    e += 0.5 * (1.0 + n.norm2()) * std::norm(s.position.coeffs()[i]) + 0.5 * std::norm(s.velocity.coeffs()[i]);
  }
  if (cfg_.nonlinearity) e += wickPotentialValue(s.position, alpha_, cfg_.k, cfg_.N);
  return e;
}

FieldPair splitStepTruncatedSdNLW(const FieldPair& state, double N, int k, double dt, std::uint32_t stepIndex,
                                  const NoiseStream& noise) {
  SplitConfig cfg;
  cfg.N = N;
  cfg.k = k;
  cfg.dt = dt;
  cfg.noise = noise.enabled;
  return TruncatedSdNLW(state.lattice(), cfg).step(state, stepIndex, noise);
}

}  // namespace wickwave
