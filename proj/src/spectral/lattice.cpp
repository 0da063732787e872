#include "wickwave/spectral/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wickwave {

double besselWeight(Frequency n) { return std::sqrt(1.0 + n.norm2()); }

Lattice::Lattice(int K, int gridSize) : K_(K), gridSize_(gridSize) {
  if (K < 0) throw std::invalid_argument("lattice K must be nonnegative");
  if (gridSize % 2 != 0 || gridSize < 2 * K + 2)
    throw std::invalid_argument("gridSize must be even and at least 2K+2 (K=" + std::to_string(K) +
                                ", gridSize=" + std::to_string(gridSize) + ")");
}

void SpectralField::setPair(Frequency n, cplx value) {
  if (n.n1 == 0 && n.n2 == 0) {
    (*this)[n] = cplx(value.real(), 0.0);
    return;
  }
  (*this)[n] = value;
  (*this)[Frequency{-n.n1, -n.n2}] = std::conj(value);
}

bool SpectralField::isHermitian(double tol) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Frequency n = lattice_.frequency(i);
    if (std::abs(coeffs_[i] - std::conj((*this)[Frequency{-n.n1, -n.n2}])) > tol) return false;
  }
  return true;
}

double SpectralField::maxAbs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double SpectralField::supportRadius() const {
  double r2 = -1.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != cplx(0.0, 0.0)) r2 = std::max(r2, lattice_.frequency(i).norm2());
  return r2 < 0 ? -1.0 : std::sqrt(r2);
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  if (!(o.lattice_ == lattice_)) throw std::invalid_argument("lattice mismatch in field sum");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  if (!(o.lattice_ == lattice_)) throw std::invalid_argument("lattice mismatch in field difference");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double a) {
  for (auto& c : coeffs_) c *= a;
  return *this;
}

void SpectralField::axpy(double a, const SpectralField& o) {
  if (!(o.lattice_ == lattice_)) throw std::invalid_argument("lattice mismatch in axpy");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += a * o.coeffs_[i];
}

SpectralField SpectralField::resized(const Lattice& target) const {
  SpectralField out(target);
  const int K = std::min(target.K(), lattice_.K());
  for (int n1 = -K; n1 <= K; ++n1)
    for (int n2 = -K; n2 <= K; ++n2) out[Frequency{n1, n2}] = (*this)[Frequency{n1, n2}];
  return out;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double a, SpectralField f) { return f *= a; }

FieldPair::FieldPair(SpectralField u, SpectralField v) : position(std::move(u)), velocity(std::move(v)) {
  if (!(position.lattice() == velocity.lattice()))
    throw std::invalid_argument("position and velocity must share a lattice");
}

double innerProduct(const SpectralField& f, const SpectralField& g) {
  if (!(f.lattice() == g.lattice())) throw std::invalid_argument("lattice mismatch in inner product");
  double s = 0.0;
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  return s;
}

}  // namespace wickwave
