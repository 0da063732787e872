#pragma once

#include <stdexcept>
#include <vector>

#include "wickwave/spectral/multipliers.hpp"
#include "wickwave/stochastic/oscillator.hpp"

namespace wickwave {

// n -> sin(t<n>)/<n>
Multiplier propagatorS(double t);

// D(t) = e^{-t/2} sin(t nu)/nu and its time derivative, nu = (3/4 + |n|^2)^{1/2}.
struct DampedPropagator {
  Multiplier D;
  Multiplier dD;
};
DampedPropagator propagatorD(double t);

// Homogeneous flow of u'' + (damped ? u' : 0) + (1 - Delta) u = 0 over time h, per mode.
class LinearFlow {
 public:
  LinearFlow(const Lattice& lattice, double h, bool damped);
  FieldPair apply(const FieldPair& state) const;
  const OscillatorStep& mode(std::size_t idx) const { return table_[tableOf_[idx]]; }
  double h() const { return h_; }

 private:
  Lattice lattice_;
  double h_;
  std::vector<OscillatorStep> table_;
  std::vector<std::size_t> tableOf_;
};

FieldPair advanceLinear(const FieldPair& state, double h, bool damped);

// Energy of the linear undamped flow: (1/2) sum <n>^2 |u_n|^2 + (1/2) sum |v_n|^2.
double linearEnergy(const FieldPair& state);

}  // namespace wickwave
