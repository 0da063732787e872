#pragma once

#include <cstdint>
#include <vector>

#include "wickwave/spectral/lattice.hpp"
#include "wickwave/stochastic/noise.hpp"
#include "wickwave/stochastic/oscillator.hpp"

namespace wickwave {

struct SplitConfig {
  double N = 1.0;        // cutoff of the nonlinear modes
  int k = 3;             // nonlinearity degree
  double dt = 0.05;
  double alpha = -1.0;   // Wick parameter; negative means alphaN(N)
  bool nonlinearity = true;
  bool damping = true;   // OU half steps (and damping of the high modes)
  bool noise = true;
};

// Strang splitting of the truncated damped stochastic wave equation
//   u'' + u' + (1 - Delta) u + P_N :(P_N u)^k: = sqrt(2) xi
// on modes |n| <= N: OU(dt/2), Verlet kick-oscillate-kick for the Hamiltonian
// part, OU(dt/2). Modes N < |n| <= K follow the exact linear damped stochastic flow.
class TruncatedSdNLW {
 public:
  TruncatedSdNLW(const Lattice& lattice, const SplitConfig& cfg);

  FieldPair step(const FieldPair& state, std::uint32_t stepIndex, const NoiseStream& noise) const;
  FieldPair ouHalfStep(const FieldPair& state, std::uint32_t stepIndex, const NoiseStream& noise, bool second) const;
  FieldPair hamiltonianStep(const FieldPair& state) const;

  // Truncated Hamiltonian on |n| <= N including the Wick potential.
  double hamiltonian(const FieldPair& state) const;
  double alpha() const { return alpha_; }
  const SplitConfig& config() const { return cfg_; }

 private:
  struct Mode {
    Frequency n;
    std::size_t idx;
    bool low;
    OscillatorStep rot;     // undamped flow over dt (low modes)
    OscillatorStep damped;  // damped flow over dt (high modes)
    Chol2 chol;
  };
  Lattice lattice_;
  SplitConfig cfg_;
  double alpha_;
  std::vector<Mode> modes_;  // canonical representatives
};

FieldPair splitStepTruncatedSdNLW(const FieldPair& state, double N, int k, double dt, std::uint32_t stepIndex,
                                  const NoiseStream& noise);

}  // namespace wickwave
