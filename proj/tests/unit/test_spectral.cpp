#include <doctest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"
#include "wickwave/spectral/multipliers.hpp"
#include "wickwave/spectral/snapshot.hpp"
#include "wickwave/spectral/transform.hpp"

using namespace wickwave;
using wickwave::test::maxDiff;
using wickwave::test::randomField;

TEST_CASE("besselWeight") {
  CHECK(besselWeight({0, 0}) == 1.0);
  CHECK(besselWeight({1, 0}) == doctest::Approx(1.41421356237));
  CHECK(besselWeight({3, 4}) == doctest::Approx(std::sqrt(26.0)).epsilon(1e-15));
}

TEST_CASE("lattice rejects undersized grids") {
  CHECK_THROWS_AS(Lattice(4, 9), std::invalid_argument);
  CHECK_THROWS_AS(Lattice(4, 8), std::invalid_argument);
  CHECK_NOTHROW(Lattice(4, 10));
}

TEST_CASE("applyMultiplier") {
  std::mt19937_64 rng(1);
  Lattice l(6, 14);
  auto f = randomField(l, rng);
  CHECK(applyMultiplier(f, [](Frequency) { return 1.0; }) == f);

  auto inv2 = [](Frequency n) { return 1.0 / (1.0 + n.norm2()); };
  auto inv4 = [](Frequency n) { return 1.0 / ((1.0 + n.norm2()) * (1.0 + n.norm2())); };
  CHECK(maxDiff(applyMultiplier(applyMultiplier(f, inv2), inv2), applyMultiplier(f, inv4)) < 1e-16);

  // Parseval with m = <n>: norm^2 equals the weighted coefficient sum.
  auto g = applyMultiplier(f, [](Frequency n) { return besselWeight(n); });
  double direct = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) direct += (1.0 + l.frequency(i).norm2()) * std::norm(f.coeffs()[i]);
  CHECK(innerProduct(g, g) == doctest::Approx(direct).epsilon(1e-13));
  CHECK(g.isHermitian(0.0));

  CHECK_THROWS_AS(applyMultiplier(f, [](Frequency n) { return double(n.n1); }), std::invalid_argument);
}

TEST_CASE("projections") {
  std::mt19937_64 rng(2);
  Lattice l(5);
  auto f = randomField(l, rng);
  auto lo0 = projectLow(f, 0.0);
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l.frequency(i).norm2() > 0) CHECK(lo0.coeffs()[i] == cplx(0, 0));
  CHECK(lo0[Frequency{0, 0}] == f[Frequency{0, 0}]);

  for (double N : {0.0, 1.0, 2.5, 3.0, 10.0}) {
    auto lo = projectLow(f, N), hi = projectHigh(f, N);
    CHECK(lo + hi == f);
    CHECK(innerProduct(lo, hi) == 0.0);
    CHECK(projectLow(lo, N) == lo);
  }
  SpectralField e(l);
  e.setPair({2, 0}, 1.0);
  CHECK(projectLow(e, 1.0).maxAbs() == 0.0);
}

TEST_CASE("iMultiplier endpoints, monotonicity and range") {
  IOperatorSpec spec(10.0, 0.5);
  CHECK(iMultiplier(spec, 7.0) == 1.0);
  CHECK(iMultiplier(spec, 10.0) == 1.0);
  CHECK(iMultiplier(spec, 20.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(iMultiplier(spec, 35.0) == doctest::Approx(std::pow(10.0 / 35.0, 0.5)).epsilon(1e-14));
  CHECK(iMultiplier(IOperatorSpec(10.0, 1.0), 100.0) == 1.0);
  for (double s : {0.6, 0.85, 0.99}) {
    IOperatorSpec sp(16.0, s);
    double prev = 1.0;
    for (double r = 0.0; r < 100.0; r += 0.01) {
      const double m = iMultiplier(sp, r);
      CHECK(m <= prev + 1e-15);
      CHECK(m > 0.0);
      CHECK(m <= 1.0);
      prev = m;
    }
    // C^1 at both junctions: one-sided difference quotients agree.
    for (double r0 : {16.0, 32.0}) {
      const double h = 1e-6;
      const double left = (iMultiplier(sp, r0) - iMultiplier(sp, r0 - h)) / h;
      const double right = (iMultiplier(sp, r0 + h) - iMultiplier(sp, r0)) / h;
      CHECK(left == doctest::Approx(right).epsilon(1e-4).scale(1.0));
    }
  }
}

TEST_CASE("sobolevNorm examples") {
  Lattice l(4, 16);
  SpectralField c(l);
  c[Frequency{0, 0}] = -2.5;
  for (double s : {-1.0, 0.0, 0.7, 2.0})
    for (double p : {1.0, 2.0, 3.0, 16.0}) CHECK(sobolevNorm(c, s, p) == doctest::Approx(2.5).epsilon(1e-13));

  SpectralField cosx(l);
  cosx.setPair({1, 0}, 0.5);
  CHECK(sobolevNorm(cosx, 1.0, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  // L^4 of cos(x1) with normalized measure: (3/8)^{1/4}.
  CHECK(sobolevNorm(cosx, 0.0, 4.0) == doctest::Approx(std::pow(3.0 / 8.0, 0.25)).epsilon(1e-13));
  CHECK_THROWS_AS(sobolevNorm(cosx, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("multiplier sandwich with N-independent constants") {
  std::mt19937_64 rng(3);
  const double s = 0.85;
  const double C2 = std::pow(5.0, 0.5 * (1.0 - s));
  for (int N : {8, 16, 32, 64}) {
    Lattice l(2 * N + 8);
    IOperatorSpec spec(N, s);
    for (int trial = 0; trial < 100 / 4; ++trial) {
      auto f = randomField(l, rng, 0.5 + 0.1 * (trial % 10));
      auto If = applyI(f, spec);
      const double hs = sobolevNorm(f, s), ih1 = sobolevNorm(If, 1.0);
      CHECK(hs <= 1.0 * ih1 * (1 + 1e-12));
      CHECK(ih1 <= C2 * std::pow(N, 1.0 - s) * hs * (1 + 1e-12));
    }
  }
}

TEST_CASE("grid round trip and reality") {
  std::mt19937_64 rng(4);
  for (int K : {1, 4, 13}) {
    Lattice l(K);
    auto f = randomField(l, rng, 0.0);
    for (int M : {l.gridSize(), dealiasedGridSize(K, 3), 2 * K + 6}) {
      auto& tr = gridTransform(M);
      auto back = tr.fromGrid(tr.toGrid(f), l);
      CHECK(maxDiff(back, f) <= 1e-12 * f.maxAbs());
      CHECK(back.isHermitian(0.0));
    }
  }
}

TEST_CASE("dealiased powers equal brute-force convolution powers") {
  std::mt19937_64 rng(5);
  for (int K : {1, 2, 3, 4}) {
    Lattice l(K);
    auto f = randomField(l, rng, 0.0);
    for (int d : {2, 3, 4}) {
      // Brute force: repeated convolution on the full band, then truncate.
      Lattice big(d * K);
      SpectralField p = f.resized(big);
      for (int j = 1; j < d; ++j) {
        SpectralField q(big);
        for (std::size_t a = 0; a < big.size(); ++a) {
          Frequency na = big.frequency(a);
          if (p.coeffs()[a] == cplx(0, 0)) continue;
          for (std::size_t b = 0; b < l.size(); ++b) {
            Frequency nb = l.frequency(b);
            Frequency nc{na.n1 + nb.n1, na.n2 + nb.n2};
            if (big.contains(nc)) q[nc] += p.coeffs()[a] * f.coeffs()[b];
          }
        }
        p = q;
      }
      const int M = dealiasedGridSize(K, d);
      auto& tr = gridTransform(M);
      auto g = tr.toGrid(f);
      for (double& v : g) v = std::pow(v, d);
      auto viaGrid = tr.fromGrid(g, l);
      CHECK(maxDiff(viaGrid, p.resized(l)) < 1e-12 * std::max(1.0, p.maxAbs()));
    }
  }
}

TEST_CASE("snapshot format is bit-exact") {
  std::mt19937_64 rng(6);
  Lattice l(3, 10);
  auto f = randomField(l, rng), g = randomField(l, rng);
  std::stringstream a;
  writeSnapshot(a, l, {f, g});
  const std::string bytes = a.str();
  CHECK(bytes.substr(0, 4) == "WWF1");
  CHECK(bytes.size() == 16 + 2 * l.size() * 8);
  CHECK(static_cast<unsigned char>(bytes[4]) == 3);
  CHECK(static_cast<unsigned char>(bytes[8]) == 10);
  CHECK(static_cast<unsigned char>(bytes[12]) == 2);
  Snapshot s;
  REQUIRE(readSnapshot(a, s));
  CHECK(s.lattice == l);
  REQUIRE(s.fields.size() == 2);
  for (std::size_t i = 0; i < l.size(); ++i) {
    CHECK(s.fields[0].coeffs()[i].real() == double(float(f.coeffs()[i].real())));
    CHECK(s.fields[1].coeffs()[i].imag() == double(float(g.coeffs()[i].imag())));
  }
  std::stringstream b;
  writeSnapshot(b, s.lattice, s.fields);
  CHECK(b.str() == bytes);
  Snapshot t;
  CHECK_FALSE(readSnapshot(a, t));
}
