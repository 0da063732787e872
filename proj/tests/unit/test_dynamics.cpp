#include <doctest.h>

#include <random>

#include "../common/manufactured.hpp"
#include "test_support.hpp"
#include "wickwave/dynamics/picard.hpp"
#include "wickwave/dynamics/propagators.hpp"
#include "wickwave/dynamics/splitting.hpp"
#include "wickwave/dynamics/stepper.hpp"
#include "wickwave/spectral/multipliers.hpp"
#include "wickwave/stochastic/variance.hpp"

using namespace wickwave;
using test::maxDiff;
using test::randomField;

namespace {
FieldPair randomPair(const Lattice& l, std::mt19937_64& rng, double decay = 2.0, double amp = 1.0) {
  return FieldPair(randomField(l, rng, decay, amp), randomField(l, rng, decay - 1.0, amp));
}
double pairDiff(const FieldPair& a, const FieldPair& b) {
  return std::max(maxDiff(a.position, b.position), maxDiff(a.velocity, b.velocity));
}
}  // namespace

TEST_CASE("propagatorS") {
  auto S0 = propagatorS(0.0);
  CHECK(S0({3, -1}) == 0.0);
  for (double t : {0.1, 1.0, 4.0}) CHECK(propagatorS(t)({0, 0}) == doctest::Approx(std::sin(t)).epsilon(1e-15));
}

TEST_CASE("linear flow group property and composition") {
  std::mt19937_64 rng(1);
  Lattice l(6);
  auto s = randomPair(l, rng);
  for (bool damped : {false, true}) {
    auto a = advanceLinear(advanceLinear(s, 0.37, damped), 1.21, damped);
    auto b = advanceLinear(s, 1.58, damped);
    CHECK(pairDiff(a, b) < 1e-12);
    LinearFlow f(l, 0.01, damped);
    FieldPair c = s;
    for (int j = 0; j < 300; ++j) c = f.apply(c);
    CHECK(pairDiff(c, advanceLinear(s, 3.0, damped)) < 1e-10);
  }
  // Undamped linear energy is constant.
  FieldPair c = s;
  LinearFlow f(l, 0.05, false);
  const double e0 = linearEnergy(s);
  for (int j = 0; j < 1000; ++j) c = f.apply(c);
  CHECK(std::abs(linearEnergy(c) - e0) < 1e-10 * e0);
}

TEST_CASE("propagatorD") {
  auto p0 = propagatorD(0.0);
  CHECK(p0.D({2, 1}) == 0.0);
  CHECK(p0.dD({2, 1}) == 1.0);
  CHECK_THROWS_AS(propagatorD(-1.0), std::invalid_argument);

  // u(t) = dD(t) phi0 + D(t)(phi0 + phi1) solves x'' + x' + <n>^2 x = 0 (8th-order differences).
  const Frequency n{1, 1};
  const double w2 = 3.0, phi0 = 0.8, phi1 = -0.3;
  auto x = [&](double t) {
    auto p = propagatorD(t);
    return p.dD(n) * phi0 + p.D(n) * (phi0 + phi1);
  };
  const double h = 0.01;
  const double c1[4] = {4.0 / 5, -1.0 / 5, 4.0 / 105, -1.0 / 280};
  const double c2[5] = {-205.0 / 72, 8.0 / 5, -1.0 / 5, 8.0 / 315, -1.0 / 560};
  for (double t : {0.5, 1.0, 2.7}) {
    double d1 = 0.0, d2 = c2[0] * x(t);
    for (int j = 1; j <= 4; ++j) {
      d1 += c1[j - 1] * (x(t + j * h) - x(t - j * h));
      d2 += c2[j] * (x(t + j * h) + x(t - j * h));
    }
    d1 /= h;
    d2 /= h * h;
    CHECK(std::abs(d2 + d1 + w2 * x(t)) < 1e-10);
    CHECK(x(0.0) == doctest::Approx(phi0));
  }
  // Envelope: e^{t/2} times the phase-space amplitude is constant.
  const double nu = std::sqrt(w2 - 0.25);
  auto amp = [&](double t) {
    const double xd = (x(t + 1e-6) - x(t - 1e-6)) / 2e-6;
    return std::exp(0.5 * t) * std::hypot(x(t), (xd + 0.5 * x(t)) / nu);
  };
  CHECK(amp(3.0) == doctest::Approx(amp(0.2)).epsilon(1e-6));
  CHECK(amp(8.0) == doctest::Approx(amp(0.2)).epsilon(1e-6));
}

TEST_CASE("Wick nonlinearity equals H_k of the shifted field") {
  std::mt19937_64 rng(2);
  Lattice l(8);
  auto z = randomField(l, rng, 0.0, 0.5, 2.0);
  auto v = randomField(l, rng, 0.0, 0.5, 2.0);
  for (int k : {1, 2, 3}) {
    auto xi = wickPowersOfField(z, 0.7, k, l);
    CHECK(maxDiff(wickNonlinearity(v, xi, k), hermiteNonlinearity(z + v, 0.7, k)) < 1e-12);
  }
  std::vector<SpectralField> zero(3, SpectralField(l));
  CHECK(wickNonlinearity(SpectralField(l), zero, 3).maxAbs() == 0.0);
}

TEST_CASE("Simpson weights integrate cubics exactly") {
  for (int j = 1; j <= 9; ++j) {
    const double dt = 0.1;
    auto w = simpsonWeights(j, dt);
    double s = 0.0, ex = 0.0;
    for (int i = 0; i <= j; ++i) s += w[i] * std::pow(i * dt, j == 1 ? 1 : 3);
    ex = j == 1 ? 0.5 * dt * dt : std::pow(j * dt, 4) / 4.0;
    CHECK(s == doctest::Approx(ex).epsilon(1e-13));
  }
}

TEST_CASE("picardSolve") {
  Lattice l(8);
  SolverConfig cfg;
  cfg.dt = 0.01;
  cfg.T = 0.2;
  cfg.fixedPointTol = 1e-11;

  SUBCASE("zero data gives the zero trajectory") {
    EnhancedDataSet d;
    d.k = 3;
    d.v0 = d.v1 = SpectralField(l);
    d.times = {0.0, 0.2};
    d.xi.assign(2, std::vector<SpectralField>(3, SpectralField(l)));
    auto r = picardSolve(d, false, cfg);
    for (const auto& s : r.states) CHECK(s.position.maxAbs() == 0.0);
  }

  for (bool damped : {false, true}) {
    test::ManufacturedProblem mp{l, 3, damped};
    auto d = mp.data(cfg.T, cfg.dt);
    auto r = picardSolve(d, damped, cfg);
    CHECK(r.converged);
    CHECK(r.contractionFactor < 1.0);
    double err = 0.0;
    for (std::size_t j = 0; j < r.times.size(); ++j)
      err = std::max(err, sobolevNorm(r.states[j].position - mp.v(r.times[j]), 0.9));
    CHECK(err < 1e-6);

    // Independent of the initial iterate.
    SolverConfig c2 = cfg;
    c2.startFromLinear = true;
    auto r2 = picardSolve(d, damped, c2);
    double diff = 0.0;
    for (std::size_t j = 0; j < r.times.size(); ++j)
      diff = std::max(diff, sobolevNorm(r.states[j].position - r2.states[j].position, 0.9));
    CHECK(diff < 2 * cfg.fixedPointTol);
  }

  SUBCASE("epsilon validation and no-contraction") {
    test::ManufacturedProblem mp{l, 3, false};
    auto d = mp.data(0.2, 0.01);
    SolverConfig bad = cfg;
    bad.epsilon = 0.25;
    CHECK_THROWS_AS(picardSolve(d, false, bad), std::invalid_argument);
    test::ManufacturedProblem big{l, 3, false, 6.0};
    auto db = big.data(2.0, 0.02);
    SolverConfig c = cfg;
    c.T = 2.0;
    c.dt = 0.02;
    c.maxPicardIters = 30;
    CHECK_THROWS_AS(picardSolve(db, false, c), NoContractionError);
  }
}

TEST_CASE("Strang stepper") {
  Lattice l(8);
  StepperConfig cfg;
  cfg.dt = 0.01;
  VStepper zero(l, cfg);
  std::vector<SpectralField> z(3, SpectralField(l));
  CHECK(zero.step(FieldPair(l), z).position.maxAbs() == 0.0);

  test::ManufacturedProblem mp{l, 3, false};
  const double T = 0.4;
  auto ws = mp.series(T, 0.0025 / 2);
  auto runAt = [&](double dt) {
    StepperConfig c;
    c.dt = dt;
    return VStepper(l, c).integrate(FieldPair(mp.v(0), mp.v(0, 1)), ws, 0.0, int(std::lround(T / dt)));
  };
  const auto a = runAt(0.02), b = runAt(0.01), c = runAt(0.005);
  const double e1 = sobolevNorm(a.position - b.position, 0.9);
  const double e2 = sobolevNorm(b.position - c.position, 0.9);
  CHECK(std::log2(e1 / e2) >= 1.7);
  // It also converges to the manufactured solution.
  CHECK(sobolevNorm(c.position - mp.v(T), 0.9) < 1e-4);

  // Agreement with the Picard solver on the same window.
  SolverConfig pc;
  pc.dt = 0.0025;
  pc.T = T;
  pc.fixedPointTol = 1e-6;
  auto pr = picardSolve(mp.data(T, 0.0025 / 2), false, pc);
  const auto d = runAt(0.0025);
  CHECK(sobolevNorm(pr.states.back().position - d.position, 0.9) < 10 * pc.fixedPointTol);

  // Guard: raising the ceiling does not change an unguarded trajectory; a low ceiling throws.
  StepperConfig g = cfg;
  g.ceiling = 1e3;
  const auto u1 = VStepper(l, g).integrate(FieldPair(mp.v(0), mp.v(0, 1)), ws, 0.0, 20);
  g.ceiling = 1e9;
  const auto u2 = VStepper(l, g).integrate(FieldPair(mp.v(0), mp.v(0, 1)), ws, 0.0, 20);
  CHECK(u1 == u2);
  g.ceiling = 1e-3;
  CHECK_THROWS_AS(VStepper(l, g).integrate(FieldPair(mp.v(0), mp.v(0, 1)), ws, 0.0, 20), BlowupError);
}

TEST_CASE("split step: linear limit") {
  Lattice l(3);
  std::mt19937_64 rng(3);
  auto s0 = randomPair(l, rng);
  auto errAt = [&](double dt) {
    SplitConfig c;
    c.N = 2.0;
    c.dt = dt;
    c.nonlinearity = false;
    c.noise = false;
    TruncatedSdNLW st(l, c);
    FieldPair s = s0;
    const int n = int(std::lround(1.0 / dt));
    for (int j = 0; j < n; ++j) s = st.step(s, j, NoiseStream::off());
    return pairDiff(s, advanceLinear(s0, 1.0, true));
  };
  const double e1 = errAt(0.02), e2 = errAt(0.01);
  CHECK(e1 < 1e-3);
  CHECK(std::log2(e1 / e2) > 1.8);
}

TEST_CASE("split step: Hamiltonian drift is second order") {
  Lattice l(2);
  std::mt19937_64 rng(4);
  const auto s0 = randomPair(l, rng, 1.0, 0.8);
  auto drift = [&](double dt) {
    SplitConfig c;
    c.N = 2.0;
    c.dt = dt;
    c.damping = false;
    c.noise = false;
    TruncatedSdNLW st(l, c);
    FieldPair s = s0;
    const double e0 = st.hamiltonian(s);
    double m = 0.0;
    for (int j = 0; j < int(std::lround(1.0 / dt)); ++j) {
      s = st.step(s, j, NoiseStream::off());
      m = std::max(m, std::abs(st.hamiltonian(s) - e0));
    }
    return m;
  };
  const double d1 = drift(0.02), d2 = drift(0.01);
  CHECK(d2 < 1e-2);
  CHECK(std::log2(d1 / d2) > 1.8);
}

TEST_CASE("OU half step keeps the white-noise velocity law") {
  const double dt = 0.05;
  const double decay = std::exp(-0.5 * dt), spread2 = -std::expm1(-dt);
  CHECK(std::abs(decay * decay + spread2 - 1.0) < 1e-10);

  Lattice l(1);
  SplitConfig c;
  c.N = 1.0;
  c.dt = 0.05;
  c.nonlinearity = false;
  TruncatedSdNLW st(l, c);
  const int M = 10000, steps = 1000;
  double s0 = 0, s1 = 0, q1 = 0;
  const Frequency n{1, 0};
  for (int i = 0; i < M; ++i) {
    NoiseStream ns(7, i);
    FieldPair f = sampleMu1Pair(l, ns);
    s0 += std::norm(f.velocity[n]);
    for (int j = 0; j < steps; ++j) f = st.ouHalfStep(f, j, ns, j % 2 == 1);
    const double v = std::norm(f.velocity[n]);
    s1 += v;
    q1 += v * v;
  }
  const double mean = s1 / M, se = std::sqrt((q1 / M - mean * mean) / M);
  CHECK(std::abs(mean - 1.0) < 4 * se);
  CHECK(std::abs(s0 / M - 1.0) < 4 * se);
}

TEST_CASE("Hamiltonian step is volume preserving") {
  Lattice l(1);
  SplitConfig c;
  c.N = 1.0;
  c.dt = 1e-3;
  TruncatedSdNLW st(l, c);
  // Real coordinates: u0, Re/Im u(1,0), Re/Im u(0,1), then the same for velocities.
  const Frequency modes[3] = {{0, 0}, {1, 0}, {0, 1}};
  auto pack = [&](const FieldPair& s) {
    std::vector<double> x;
    for (const auto* f : {&s.position, &s.velocity}) {
      x.push_back((*f)[modes[0]].real());
      for (int m = 1; m < 3; ++m) {
        x.push_back((*f)[modes[m]].real());
        x.push_back((*f)[modes[m]].imag());
      }
    }
    return x;
  };
  auto unpack = [&](const std::vector<double>& x) {
    FieldPair s(l);
    int p = 0;
    for (auto* f : {&s.position, &s.velocity}) {
      f->setPair(modes[0], x[p++]);
      for (int m = 1; m < 3; ++m) {
        f->setPair(modes[m], cplx(x[p], x[p + 1]));
        p += 2;
      }
    }
    return s;
  };
  std::vector<double> x0{0.3, -0.2, 0.5, 0.1, 0.4, 0.7, -0.6, 0.2, 0.9, -0.1};
  const int D = 10;
  std::vector<std::vector<double>> J(D, std::vector<double>(D));
  const double eps = 1e-6;
  for (int j = 0; j < D; ++j) {
    auto xp = x0, xm = x0;
    xp[j] += eps;
    xm[j] -= eps;
    auto fp = pack(st.hamiltonianStep(unpack(xp))), fm = pack(st.hamiltonianStep(unpack(xm)));
    for (int i = 0; i < D; ++i) J[i][j] = (fp[i] - fm[i]) / (2 * eps);
  }
  double det = 1.0;
  for (int c0 = 0; c0 < D; ++c0) {
    int piv = c0;
    for (int r = c0 + 1; r < D; ++r)
      if (std::abs(J[r][c0]) > std::abs(J[piv][c0])) piv = r;
    if (piv != c0) {
      std::swap(J[piv], J[c0]);
      det = -det;
    }
    det *= J[c0][c0];
    for (int r = c0 + 1; r < D; ++r) {
      const double f = J[r][c0] / J[c0][c0];
      for (int cc = c0; cc < D; ++cc) J[r][cc] -= f * J[c0][cc];
    }
  }
  CHECK(std::abs(det - 1.0) < 1e-6);
}
