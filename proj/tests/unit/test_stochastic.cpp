#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "wickwave/spectral/multipliers.hpp"
#include "wickwave/spectral/transform.hpp"
#include "wickwave/stochastic/convolution.hpp"
#include "wickwave/stochastic/oscillator.hpp"
#include "wickwave/stochastic/path_io.hpp"
#include "wickwave/stochastic/variance.hpp"
#include "wickwave/stochastic/wick.hpp"

using namespace wickwave;

TEST_CASE("hermite") {
  CHECK(hermite(2, 3.0, 2.0) == 7.0);
  CHECK(hermite(3, 1.0, 1.0) == -2.0);
  CHECK(hermite(0, 5.0, 3.0) == 1.0);
  CHECK(hermite(4, 0.0, 2.0) == 12.0);
  for (double x : {-1.3, 0.4, 2.0})
    for (int k = 0; k < 7; ++k) CHECK(hermite(k, x, 0.0) == doctest::Approx(std::pow(x, k)).epsilon(1e-15));
  // Generating function exp(tx - sigma t^2/2) = sum_k t^k/k! H_k(x; sigma).
  for (double t : {-1.0, -0.3, 0.5, 1.0})
    for (double x : {-1.0, 0.2, 1.0})
      for (double sg : {0.0, 0.7, 2.0}) {
        double sum = 0.0, fact = 1.0;
        for (int k = 0; k <= 40; ++k) {
          if (k > 0) fact *= k;
          sum += std::pow(t, k) / fact * hermite(k, x, sg);
        }
        // Eight terms leave a tail of order 1/9! ~ 3e-6 at |t| = |x| = 1, so the
        // identity is checked with forty terms.
        CHECK(std::abs(sum - std::exp(t * x - 0.5 * sg * t * t)) < 1e-8);
      }
}

TEST_CASE("lattice variance sums") {
  CHECK(sigmaN(7.0, 0.0) == 0.0);
  for (double t : {0.3, 1.0, 2.5}) {
    const double r2 = std::sqrt(2.0);
    const double sym = t / 2 - std::sin(2 * t) / 4 + t - std::sin(2 * r2 * t) / (2 * r2);
    CHECK(sigmaN(1.0, t) == doctest::Approx(sym).epsilon(1e-14));
  }
  CHECK(alphaN(1.0) == 3.0);
  CHECK(alphaN(2.0) == doctest::Approx(3.0 + 4.0 / 3.0 + 4.0 / 5.0).epsilon(1e-15));
  double prev = 0.0;
  for (int N = 1; N <= 60; ++N) {
    CHECK(alphaN(N) >= prev);
    prev = alphaN(N);
  }
  for (double t : {0.5, 1.0, 2.0})
    for (int N = 16; N <= 512; N *= 2) {
      const double r = sigmaN(N, t) / (t * std::log(double(N)));
      CHECK(r > 1.0);
      CHECK(r < 4.0);
    }
}

TEST_CASE("varianceIPsi") {
  IOperatorSpec spec(16.0, 0.9);
  CHECK(varianceIPsi(spec, 0.0) == 0.0);
  // Identity region matches sigmaN when the cutoff stays below N.
  CHECK(varianceIPsi(spec, 1.3, 12.0) == doctest::Approx(sigmaN(12.0, 1.3)).epsilon(1e-13));
  double lo = 1e9, hi = 0.0;
  for (int N : {16, 32, 64, 128, 256})
    for (double t : {1.0, 2.0, 4.0}) {
      const double c0 = varianceIPsi(IOperatorSpec(N, 0.9), t) / (t * std::log(double(N)));
      lo = std::min(lo, c0);
      hi = std::max(hi, c0);
    }
  CHECK(hi / lo < 1.5);
  // The closed-form tail agrees with a larger explicit lattice sum.
  IOperatorSpec sp4(4.0, 0.6);
  const double full = varianceIPsi(sp4, 1.0);
  const double explicitSum = varianceIPsi(sp4, 1.0, 1500.0);
  const double a = 0.4;
  const double tail = std::numbers::pi * std::pow(4.0, 2 * a) * std::pow(1500.0, -2 * a) / (2 * a);
  CHECK(full == doctest::Approx(explicitSum + tail).epsilon(2e-4));
}

namespace {
// Closed-form position / velocity variance per real component for Psi.
double psiPosVar(double w, double t) { return 0.5 * (t / (2 * w * w) - std::sin(2 * w * t) / (4 * w * w * w)); }

// Covariance propagation through a sequence of exact steps.
void propagate(double w, const std::vector<double>& times, bool damped, double intensity, double S[2][2]) {
  for (std::size_t j = 0; j + 1 < times.size(); ++j) {
    auto st = oscillatorStep(w, times[j + 1] - times[j], damped);
    double T[2][2] = {{0, 0}, {0, 0}};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double v = intensity * st.cov[a][b];
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) v += st.phi[a][c] * S[c][d] * st.phi[b][d];
        T[a][b] = v;
      }
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) S[a][b] = T[a][b];
  }
}
}  // namespace

TEST_CASE("exact update is independent of the time grid") {
  for (double w : {1.0, std::sqrt(2.0), 7.3, 40.0}) {
    std::vector<double> coarse{0.0, 0.7, 1.9}, fine{0.0};
    for (int j = 1; j <= 38; ++j) fine.push_back(1.9 * j / 38.0);
    for (bool damped : {false, true}) {
      double A[2][2] = {{0, 0}, {0, 0}}, B[2][2] = {{0, 0}, {0, 0}};
      propagate(w, coarse, damped, 0.5, A);
      propagate(w, fine, damped, 0.5, B);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(std::abs(A[a][b] - B[a][b]) < 1e-10);
      if (!damped) CHECK(A[0][0] == doctest::Approx(psiPosVar(w, 1.9)).epsilon(1e-12));
    }
  }
}

TEST_CASE("damped stationary covariance is preserved by one exact step") {
  for (double w2 : {1.0, 2.0, 5.0, 101.0, 5001.0})
    for (double h : {1e-4, 0.01, 0.3, 1.0, 5.0}) {
      const double w = std::sqrt(w2);
      // Per real component with intensity 2 * (1/2): diag(1/(2 w^2), 1/2).
      double S[2][2] = {{0.5 / w2, 0.0}, {0.0, 0.5}};
      propagate(w, {0.0, h}, true, 1.0, S);
      CHECK(std::abs(S[0][0] - 0.5 / w2) < 1e-10 * std::max(1.0, 0.5 / w2));
      CHECK(std::abs(S[0][1]) < 1e-10);
      CHECK(std::abs(S[1][1] - 0.5) < 1e-10);
    }
}

TEST_CASE("damped deterministic mode matches the closed-form solution") {
  Lattice l(3);
  FieldPair init(l);
  const Frequency n{2, 1};
  init.position.setPair(n, cplx(0.7, -0.2));
  init.velocity.setPair(n, cplx(-0.4, 1.1));
  std::vector<double> times{0.0, 0.5, 1.25, 3.0};
  auto p = samplePhi(l, times, NoiseStream::off(), init);
  const double w2 = 6.0, nu = std::sqrt(w2 - 0.25);
  const cplx x0(0.7, -0.2), v0(-0.4, 1.1);
  for (std::size_t j = 0; j < times.size(); ++j) {
    const double t = times[j];
    const cplx x = std::exp(-t / 2) * (x0 * std::cos(nu * t) + (v0 + 0.5 * x0) / nu * std::sin(nu * t));
    CHECK(std::abs(p.states[j].position[n] - x) < 1e-13);
    CHECK(p.states[j].position.isHermitian(0.0));
  }
  // Zero noise and zero data give the zero path.
  auto z = samplePhi(l, times, NoiseStream::off(), FieldPair(l));
  for (const auto& s : z.states) CHECK(s.position.maxAbs() == 0.0);
}

TEST_CASE("samplePsi basics") {
  Lattice l(4);
  auto p0 = samplePsi(l, {0.0}, NoiseStream(1));
  CHECK(p0.states.at(0).position.maxAbs() == 0.0);
  CHECK_THROWS_AS(samplePsi(l, {0.0, 0.5, 0.5}, NoiseStream(1)), std::invalid_argument);
  CHECK_THROWS_AS(samplePsi(l, {0.1, 0.5}, NoiseStream(1)), std::invalid_argument);
  auto a = samplePsi(l, {0.0, 0.3, 1.0}, NoiseStream(5, 2));
  auto b = samplePsi(l, {0.0, 0.3, 1.0}, NoiseStream(5, 2));
  CHECK(a.states == b.states);
  CHECK(a.variance[2] == sigmaN(4.0, 1.0));
  for (const auto& s : a.states) {
    CHECK(s.position.isHermitian(0.0));
    for (std::size_t i = 0; i < l.size(); ++i)
      if (l.frequency(i).norm2() > 16) CHECK(s.position.coeffs()[i] == cplx(0, 0));
  }
}

TEST_CASE("different seeds decorrelate") {
  Lattice l(1);
  ConvolutionSampler sm(l, 1.0, {0.0, 1.0}, ConvolutionKind::Psi);
  const int M = 10000;
  double sxy = 0, sxx = 0, syy = 0;
  for (int i = 0; i < M; ++i) {
    const double x = sm.sample(NoiseStream(11, i)).states[1].position[Frequency{1, 0}].real();
    const double y = sm.sample(NoiseStream(12, i)).states[1].position[Frequency{1, 0}].real();
    sxy += x * y;
    sxx += x * x;
    syy += y * y;
  }
  CHECK(std::abs(sxy / std::sqrt(sxx * syy)) < 0.05);
}

TEST_CASE("sampleMu1Pair moments and reality") {
  Lattice l(3);
  const int M = 20000;
  const Frequency n{1, 2};
  double pos = 0, vel = 0, pos0 = 0;
  for (int i = 0; i < M; ++i) {
    auto f = sampleMu1Pair(l, NoiseStream(3, i));
    pos += std::norm(f.position[n]);
    vel += std::norm(f.velocity[n]);
    pos0 += std::norm(f.position[Frequency{0, 0}]);
  }
  CHECK(pos / M == doctest::Approx(1.0 / 6.0).epsilon(4.0 * std::sqrt(1.0 / M)));
  CHECK(vel / M == doctest::Approx(1.0).epsilon(4.0 * std::sqrt(1.0 / M)));
  CHECK(pos0 / M == doctest::Approx(1.0).epsilon(4.0 * std::sqrt(2.0 / M)));
  auto f = sampleMu1Pair(l, NoiseStream(4));
  CHECK(f.position.isHermitian(0.0));
  CHECK(f.velocity.isHermitian(0.0));
}

TEST_CASE("I Psi variance matches the lattice formula by Monte Carlo") {
  Lattice l(8);
  IOperatorSpec spec(3.0, 0.6);
  ConvolutionSampler sm(l, 8.0, {0.0, 1.5}, ConvolutionKind::Psi);
  const int M = 10000;
  double s1 = 0, s2 = 0;
  for (int i = 0; i < M; ++i) {
    const double x = pointValue(applyI(sm.sample(NoiseStream(21, i)).states[1].position, spec), 0.0, 0.0);
    s1 += x * x;
    s2 += x * x * x * x;
  }
  const double mean = s1 / M, se = std::sqrt((s2 / M - mean * mean) / M);
  CHECK(std::abs(mean - varianceIPsi(spec, 1.5, 8.0)) < 4 * se);
}

TEST_CASE("Wick powers") {
  Lattice l(4);
  auto p = samplePhi(l, {0.0, 0.5}, NoiseStream(8));
  auto w = wickPowers(p, 3);
  CHECK(w.at(1, 1) == p.states[1].position);
  for (int d = 1; d <= 3; ++d) CHECK(w.at(1, d).isHermitian(0.0));

  // Variance 0 reduces to ordinary powers.
  auto z = p.states[0].position;
  auto plain = wickPowersOfField(z, 0.0, 3, l);
  auto& tr = gridTransform(dealiasedGridSize(4, 3));
  auto g = tr.toGrid(z);
  for (double& v : g) v = v * v * v;
  CHECK(test::maxDiff(plain[2], tr.fromGrid(g, l)) < 1e-12);

  // Full band: grid values are H_l of the point value.
  auto wf = wickPowers(p, 3, WickBand::Full);
  const double x = pointValue(p.states[1].position, 0.0, 0.0);
  CHECK(pointValue(wf.at(1, 3), 0.0, 0.0) == doctest::Approx(hermite(3, x, alphaN(4.0))).epsilon(1e-11));

  CHECK_THROWS_AS(wickPowersOfField(z, 1.0, 3, l, 14), std::invalid_argument);

  // Mean of :Phi^2: vanishes in expectation.
  ConvolutionSampler sm(l, 4.0, {0.0, 1.0}, ConvolutionKind::Phi);
  const int M = 4000;
  double s = 0, s2 = 0;
  for (int i = 0; i < M; ++i) {
    auto q = sm.sample(NoiseStream(30, i));
    const double m = wickPowersOfField(q.states[1].position, alphaN(4.0), 2, l)[1][Frequency{0, 0}].real();
    s += m;
    s2 += m * m;
  }
  const double mean = s / M, se = std::sqrt((s2 / M - mean * mean) / M);
  CHECK(std::abs(mean) < 4 * se);
}

TEST_CASE("path export round trip") {
  Lattice l(3);
  auto p = samplePsi(l, {0.0, 0.25, 0.5}, NoiseStream(77));
  const auto stem = (std::filesystem::temp_directory_path() / "wickwave_path_test").string();
  exportPath(p, stem);
  auto q = importPath(stem);
  CHECK(q.times == p.times);
  CHECK(q.variance == p.variance);
  CHECK(q.seed == 77u);
  CHECK(std::abs(q.states[2].position[Frequency{1, 1}] - p.states[2].position[Frequency{1, 1}]) < 1e-6);
  std::filesystem::remove(stem + ".wwf");
  std::filesystem::remove(stem + ".json");
}
