#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wickwave {

using cplx = std::complex<double>;

struct Frequency {
  int n1 = 0;
  int n2 = 0;
  double norm2() const { return double(n1) * n1 + double(n2) * n2; }
};

// <n> = (1 + |n|^2)^{1/2}
double besselWeight(Frequency n);

// Frequency box {|n1|,|n2| <= K} together with the collocation grid used for
// physical-space evaluation. The grid is [0, 2pi)^2 with gridSize points per axis.
class Lattice {
 public:
  Lattice() = default;
  Lattice(int K, int gridSize);
  explicit Lattice(int K) : Lattice(K, 2 * K + 2) {}

  int K() const { return K_; }
  int gridSize() const { return gridSize_; }
  int side() const { return 2 * K_ + 1; }
  std::size_t size() const { return std::size_t(side()) * side(); }
  bool contains(Frequency n) const {
    return n.n1 >= -K_ && n.n1 <= K_ && n.n2 >= -K_ && n.n2 <= K_;
  }
  std::size_t index(Frequency n) const {
    return std::size_t(n.n1 + K_) * side() + std::size_t(n.n2 + K_);
  }
  Frequency frequency(std::size_t idx) const {
    return {int(idx / side()) - K_, int(idx % side()) - K_};
  }
  bool operator==(const Lattice&) const = default;

 private:
  int K_ = 0;
  int gridSize_ = 2;
};

// Fourier coefficients of a real field, u(x) = sum_n c_n e^{i n.x}.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(const Lattice& lattice)
      : lattice_(lattice), coeffs_(lattice.size(), cplx(0.0, 0.0)) {}

  const Lattice& lattice() const { return lattice_; }
  std::vector<cplx>& coeffs() { return coeffs_; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }

  cplx& operator[](Frequency n) { return coeffs_[lattice_.index(n)]; }
  const cplx& operator[](Frequency n) const { return coeffs_[lattice_.index(n)]; }
  // Zero outside the lattice.
  cplx at(Frequency n) const { return lattice_.contains(n) ? (*this)[n] : cplx(0.0, 0.0); }

  // Sets c_n and c_{-n} = conj(c_n); at n = 0 the imaginary part is dropped.
  void setPair(Frequency n, cplx value);

  bool isHermitian(double tol = 0.0) const;
  double maxAbs() const;
  double supportRadius() const;  // max |n| over nonzero coefficients, -1 if zero field

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double a);
  // this += a * o
  void axpy(double a, const SpectralField& o);

  // Copies coefficients into a lattice of a different size (truncating or zero-padding).
  SpectralField resized(const Lattice& target) const;

  bool operator==(const SpectralField&) const = default;

 private:
  Lattice lattice_;
  std::vector<cplx> coeffs_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double a, SpectralField f);

struct FieldPair {
  SpectralField position;
  SpectralField velocity;

  FieldPair() = default;
  explicit FieldPair(const Lattice& l) : position(l), velocity(l) {}
  FieldPair(SpectralField u, SpectralField v);
  const Lattice& lattice() const { return position.lattice(); }
  bool operator==(const FieldPair&) const = default;
};

// Real L^2 inner product with normalized measure: sum_n f_n conj(g_n).
double innerProduct(const SpectralField& f, const SpectralField& g);

// Calls fn(n, idx) on canonical representatives of {n, -n}: n = 0 first, then
// n1 > 0 or (n1 == 0 and n2 > 0), restricted to |n| <= radius.
template <class Fn>
void forEachCanonical(const Lattice& lattice, double radius, Fn&& fn) {
  const int K = lattice.K();
  const double r2 = radius * radius;
  for (int n1 = 0; n1 <= K; ++n1) {
    for (int n2 = (n1 == 0 ? 0 : -K); n2 <= K; ++n2) {
      Frequency n{n1, n2};
      if (n.norm2() > r2) continue;
      fn(n, lattice.index(n));
    }
  }
}

}  // namespace wickwave
