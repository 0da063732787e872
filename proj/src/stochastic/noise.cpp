#include "wickwave/stochastic/noise.hpp"

#include <cmath>
#include <numbers>

#include "wickwave/stochastic/philox.hpp"

namespace wickwave {

namespace {
double toUnit(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t x = ((std::uint64_t(hi) << 32) | lo) >> 11;
  return (double(x) + 0.5) * 0x1.0p-53;
}
}  // namespace

std::array<std::uint32_t, 4> NoiseStream::bits(std::uint32_t step, std::uint32_t mode, std::uint16_t block) const {
  const PhiloxCounter ctr{step, mode, member, (std::uint32_t(purpose) << 16) | block};
  const PhiloxKey key{std::uint32_t(seed), std::uint32_t(seed >> 32)};
  return philox4x32(ctr, key);
}

std::array<double, 2> NoiseStream::uniforms(std::uint32_t step, std::uint32_t mode, std::uint16_t block) const {
  const auto b = bits(step, mode, block);
  return {toUnit(b[0], b[1]), toUnit(b[2], b[3])};
}

std::array<double, 2> NoiseStream::normals(std::uint32_t step, std::uint32_t mode, std::uint16_t block) const {
  const auto u = uniforms(step, mode, block);
  const double r = std::sqrt(-2.0 * std::log(u[0]));
  const double th = 2.0 * std::numbers::pi * u[1];
  return {r * std::cos(th), r * std::sin(th)};
}

std::array<double, 4> NoiseStream::normals4(std::uint32_t step, Frequency n, std::uint16_t b) const {
  if (!enabled) return {0.0, 0.0, 0.0, 0.0};
  const std::uint32_t id = modeId(n);
  const auto a = normals(step, id, std::uint16_t(2 * b));
  const auto c = normals(step, id, std::uint16_t(2 * b + 1));
  return {a[0], a[1], c[0], c[1]};
}

}  // namespace wickwave
