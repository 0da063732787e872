#include "wickwave/stochastic/convolution.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "wickwave/stochastic/variance.hpp"

namespace wickwave {

namespace {
double defaultCutoff(const Lattice& l, std::optional<double> cutoff) { return cutoff ? *cutoff : double(l.K()); }
}  // namespace

FieldPair sampleMu1Pair(const Lattice& lattice, const NoiseStream& noise, std::optional<double> cutoff,
                        Purpose purpose) {
  const NoiseStream ns = noise.withPurpose(purpose);
  FieldPair out(lattice);
  forEachCanonical(lattice, defaultCutoff(lattice, cutoff), [&](Frequency n, std::size_t) {
    const auto z = ns.normals4(0, n);
    const double w = besselWeight(n);
    if (n.n1 == 0 && n.n2 == 0) {
      out.position[n] = z[0] / w;
      out.velocity[n] = z[2];
      return;
    }
    const double r = std::sqrt(0.5);
    out.position.setPair(n, cplx(r * z[0], r * z[1]) / w);
    out.velocity.setPair(n, cplx(r * z[2], r * z[3]));
  });
  return out;
}

ConvolutionSampler::ConvolutionSampler(const Lattice& lattice, double cutoff, std::vector<double> times,
                                       ConvolutionKind kind)
    : lattice_(lattice), cutoff_(cutoff), times_(std::move(times)), kind_(kind) {
  if (times_.empty() || times_[0] != 0.0) throw std::invalid_argument("time grid must start at t = 0");
  for (std::size_t j = 1; j < times_.size(); ++j)
    if (!(times_[j] > times_[j - 1])) throw std::invalid_argument("time grid must be strictly increasing");

  std::map<int, std::size_t> tableOf;
  const double noiseFactor = kind == ConvolutionKind::Phi ? std::sqrt(2.0) : 1.0;
  forEachCanonical(lattice_, cutoff_, [&](Frequency n, std::size_t idx) {
    const int q = n.n1 * n.n1 + n.n2 * n.n2;
    auto it = tableOf.find(q);
    if (it == tableOf.end()) {
      it = tableOf.emplace(q, tableOmega_.size()).first;
      tableOmega_.push_back(std::sqrt(1.0 + q));
    }
    const double perComponent = q == 0 ? 1.0 : std::sqrt(0.5);
    modes_.push_back({n, idx, it->second, noiseFactor * perComponent});
  });
  const bool damped = kind == ConvolutionKind::Phi;
  for (std::size_t j = 0; j + 1 < times_.size(); ++j) {
    const double h = times_[j + 1] - times_[j];
    std::vector<OscillatorStep> row;
    std::vector<Chol2> crow;
    for (double w : tableOmega_) {
      row.push_back(oscillatorStep(w, h, damped));
      crow.push_back(cholesky2(row.back().cov));
    }
    steps_.push_back(std::move(row));
    chol_.push_back(std::move(crow));
  }
}

StochasticConvolutionPath ConvolutionSampler::sample(const NoiseStream& noise,
                                                     const std::optional<FieldPair>& initial) const {
  StochasticConvolutionPath path;
  path.lattice = lattice_;
  path.cutoff = cutoff_;
  path.kind = kind_;
  path.times = times_;
  path.seed = noise.seed;
  const NoiseStream ns =
      noise.withPurpose(kind_ == ConvolutionKind::Psi ? Purpose::PsiIncrement : Purpose::PhiIncrement);

  FieldPair state(lattice_);
  if (kind_ == ConvolutionKind::Phi) {
    if (initial) {
      if (!(initial->lattice() == lattice_)) throw std::invalid_argument("initial data lattice mismatch");
      for (const auto& m : modes_) {
        state.position.setPair(m.n, initial->position.coeffs()[m.idx]);
        state.velocity.setPair(m.n, initial->velocity.coeffs()[m.idx]);
      }
    } else {
      state = sampleMu1Pair(lattice_, noise, cutoff_);
    }
  }
  path.states.reserve(times_.size());
  path.states.push_back(state);
  for (std::size_t j = 0; j + 1 < times_.size(); ++j) {
    for (const auto& m : modes_) {
      const OscillatorStep& st = steps_[j][m.table];
      const Chol2& L = chol_[j][m.table];
      const cplx x = state.position.coeffs()[m.idx];
      const cplx y = state.velocity.coeffs()[m.idx];
      const auto z = ns.normals4(std::uint32_t(j + 1), m.n);
      const cplx g1(z[0], z[1]), g2(z[2], z[3]);
      cplx nx = st.phi[0][0] * x + st.phi[0][1] * y + m.scale * (L.l11 * g1);
      cplx ny = st.phi[1][0] * x + st.phi[1][1] * y + m.scale * (L.l21 * g1 + L.l22 * g2);
      state.position.setPair(m.n, nx);
      state.velocity.setPair(m.n, ny);
    }
    path.states.push_back(state);
  }
  const double v = kind_ == ConvolutionKind::Phi ? alphaN(cutoff_) : 0.0;
  for (double t : times_) path.variance.push_back(kind_ == ConvolutionKind::Phi ? v : sigmaN(cutoff_, t));
  return path;
}

StochasticConvolutionPath samplePsi(const Lattice& lattice, const std::vector<double>& times, const NoiseStream& noise,
                                    std::optional<double> cutoff) {
  return ConvolutionSampler(lattice, defaultCutoff(lattice, cutoff), times, ConvolutionKind::Psi).sample(noise);
}

StochasticConvolutionPath samplePhi(const Lattice& lattice, const std::vector<double>& times, const NoiseStream& noise,
                                    const std::optional<FieldPair>& initial, std::optional<double> cutoff) {
  return ConvolutionSampler(lattice, defaultCutoff(lattice, cutoff), times, ConvolutionKind::Phi)
      .sample(noise, initial);
}

double pointValue(const SpectralField& f, double x1, double x2) {
  const Lattice& l = f.lattice();
  double sum = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const Frequency n = l.frequency(i);
    const cplx c = f.coeffs()[i];
    if (c == cplx(0.0, 0.0)) continue;
    const double ph = n.n1 * x1 + n.n2 * x2;
    sum += c.real() * std::cos(ph) - c.imag() * std::sin(ph);
  }
  return sum;
}

}  // namespace wickwave
