#pragma once

#include <optional>
#include <vector>

#include "wickwave/spectral/lattice.hpp"
#include "wickwave/stochastic/noise.hpp"
#include "wickwave/stochastic/oscillator.hpp"

namespace wickwave {

enum class ConvolutionKind { Psi, Phi };

struct StochasticConvolutionPath {
  Lattice lattice;
  double cutoff = 0.0;  // retained modes |n| <= cutoff
  ConvolutionKind kind = ConvolutionKind::Psi;
  std::vector<double> times;
  std::vector<FieldPair> states;
  std::vector<double> variance;  // sigma_N(t) for Psi, alpha_N for Phi
  std::uint64_t seed = 0;
};

// Standard complex Gaussians g_n / <n> (position) and h_n (velocity), |n| <= cutoff.
// Draws use `purpose` (Mu1Initial by default).
FieldPair sampleMu1Pair(const Lattice& lattice, const NoiseStream& noise, std::optional<double> cutoff = std::nullopt,
                        Purpose purpose = Purpose::Mu1Initial);

// Precomputed exact per-mode transitions for a fixed lattice, cutoff and time grid;
// sampling many ensemble members reuses them.
class ConvolutionSampler {
 public:
  ConvolutionSampler(const Lattice& lattice, double cutoff, std::vector<double> times, ConvolutionKind kind);

  const std::vector<double>& times() const { return times_; }
  // Phi only: initial data, or nullopt to draw it from mu_1.
  StochasticConvolutionPath sample(const NoiseStream& noise, const std::optional<FieldPair>& initial = std::nullopt) const;

 private:
  struct Mode {
    Frequency n;
    std::size_t idx;
    std::size_t table;  // index into per-step transition table
    double scale;       // noise standard deviation per real component
  };
  Lattice lattice_;
  double cutoff_;
  std::vector<double> times_;
  ConvolutionKind kind_;
  std::vector<Mode> modes_;
  std::vector<double> tableOmega_;
  // steps_[j][table] for the interval [t_j, t_{j+1}]
  std::vector<std::vector<OscillatorStep>> steps_;
  std::vector<std::vector<Chol2>> chol_;
};

StochasticConvolutionPath samplePsi(const Lattice& lattice, const std::vector<double>& times, const NoiseStream& noise,
                                    std::optional<double> cutoff = std::nullopt);
StochasticConvolutionPath samplePhi(const Lattice& lattice, const std::vector<double>& times, const NoiseStream& noise,
                                    const std::optional<FieldPair>& initial = std::nullopt,
                                    std::optional<double> cutoff = std::nullopt);

// Value of the real field at x = (2pi j1/M, 2pi j2/M) by direct summation.
double pointValue(const SpectralField& f, double x1, double x2);

}  // namespace wickwave
