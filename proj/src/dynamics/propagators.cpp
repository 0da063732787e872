#include "wickwave/dynamics/propagators.hpp"

#include <cmath>
#include <map>

namespace wickwave {

Multiplier propagatorS(double t) {
  return [t](Frequency n) {
    const double w = besselWeight(n);
    return std::sin(t * w) / w;
  };
}

DampedPropagator propagatorD(double t) {
  if (t < 0.0) throw std::invalid_argument("propagatorD requires t >= 0");
  DampedPropagator p;
  p.D = [t](Frequency n) {
    const double nu = std::sqrt(0.75 + n.norm2());
    return std::exp(-0.5 * t) * std::sin(t * nu) / nu;
  };
  p.dD = [t](Frequency n) {
    const double nu = std::sqrt(0.75 + n.norm2());
    return std::exp(-0.5 * t) * (std::cos(t * nu) - 0.5 * std::sin(t * nu) / nu);
  };
  return p;
}

LinearFlow::LinearFlow(const Lattice& lattice, double h, bool damped) : lattice_(lattice), h_(h) {
  std::map<double, std::size_t> seen;
  tableOf_.resize(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const double q = lattice.frequency(i).norm2();
    auto it = seen.find(q);
    if (it == seen.end()) {
      it = seen.emplace(q, table_.size()).first;
      table_.push_back(oscillatorStep(std::sqrt(1.0 + q), h, damped));
    }
    tableOf_[i] = it->second;
  }
}

FieldPair LinearFlow::apply(const FieldPair& s) const {
  if (!(s.lattice() == lattice_)) throw std::invalid_argument("linear flow lattice mismatch");
  FieldPair out(lattice_);
  const auto& u = s.position.coeffs();
  const auto& v = s.velocity.coeffs();
  auto& nu = out.position.coeffs();
  auto& nv = out.velocity.coeffs();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const OscillatorStep& st = table_[tableOf_[i]];
    nu[i] = st.phi[0][0] * u[i] + st.phi[0][1] * v[i];
    nv[i] = st.phi[1][0] * u[i] + st.phi[1][1] * v[i];
  }
  return out;
}

FieldPair advanceLinear(const FieldPair& state, double h, bool damped) {
  return LinearFlow(state.lattice(), h, damped).apply(state);
}

double linearEnergy(const FieldPair& s) {
  const Lattice& l = s.lattice();
  double e = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i)
    e += 0.5 * (1.0 + l.frequency(i).norm2()) * std::norm(s.position.coeffs()[i]) +
         0.5 * std::norm(s.velocity.coeffs()[i]);
  return e;
}

}  // namespace wickwave
