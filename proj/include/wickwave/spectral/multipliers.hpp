#pragma once

#include <functional>

#include "wickwave/spectral/lattice.hpp"

namespace wickwave {

using Multiplier = std::function<double(Frequency)>;

// c'_n = m(n) c_n. Throws if m(n) != m(-n) somewhere on the lattice.
SpectralField applyMultiplier(const SpectralField& f, const Multiplier& m);

SpectralField projectLow(const SpectralField& f, double N);   // keeps |n| <= N
SpectralField projectHigh(const SpectralField& f, double N);  // keeps |n| > N

// Interpolation rule for m_N on N < |xi| < 2N.
enum class IProfile {
  Smoothstep,  // (N/|xi|)^{(1-s) w(t)}, w = 3t^2 - 2t^3, t = log2(|xi|/N)
  Sharp        // (N/|xi|)^{1-s} for every |xi| > N
};

struct IOperatorSpec {
  double N = 1.0;
  double s = 0.5;
  IProfile profile = IProfile::Smoothstep;

  IOperatorSpec() = default;
  IOperatorSpec(double N_, double s_, IProfile p = IProfile::Smoothstep);
};

double iMultiplier(const IOperatorSpec& spec, double absXi);
double iMultiplier(const IOperatorSpec& spec, Frequency n);
SpectralField applyI(const SpectralField& f, const IOperatorSpec& spec);

// ||<grad>^s f||_{L^p}: Parseval for p == 2, collocation average over the
// lattice grid otherwise. Integrals use the normalized measure on the torus.
double sobolevNorm(const SpectralField& f, double s, double p = 2.0);

}  // namespace wickwave
