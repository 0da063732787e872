#pragma once

#include <array>
#include <cstdint>
#include <tuple>

#include "wickwave/spectral/lattice.hpp"

namespace wickwave {

// Purpose tags keep draws for different roles in disjoint counter ranges.
enum class Purpose : std::uint16_t {
  Generic = 0,
  PsiIncrement = 1,
  PhiIncrement = 2,
  Mu1Initial = 3,
  GibbsAccept = 4,
  OuFirstHalf = 5,
  OuSecondHalf = 6,
  HighModes = 7,
  FieldInit = 8,
  BoundSearch = 9,
};

struct SubstreamId {
  std::uint64_t seed;
  std::uint16_t purpose;
  std::uint32_t member;
  auto operator<=>(const SubstreamId&) const = default;
};

// A substream of the Philox generator: key = seed, counter = (step, mode id,
// member, purpose << 16 | block). Draws are pure functions of these indices, so
// paths do not depend on evaluation order or thread count.
struct NoiseStream {
  std::uint64_t seed = 0;
  std::uint32_t member = 0;
  Purpose purpose = Purpose::Generic;
  bool enabled = true;

  NoiseStream() = default;
  NoiseStream(std::uint64_t s, std::uint32_t m = 0) : seed(s), member(m) {}

  NoiseStream withPurpose(Purpose p) const {
    NoiseStream n = *this;
    n.purpose = p;
    return n;
  }
  NoiseStream forMember(std::uint32_t m) const {
    NoiseStream n = *this;
    n.member = m;
    return n;
  }
  static NoiseStream off() {
    NoiseStream n;
    n.enabled = false;
    return n;
  }
  SubstreamId id() const { return {seed, std::uint16_t(purpose), member}; }

  std::array<std::uint32_t, 4> bits(std::uint32_t step, std::uint32_t modeId, std::uint16_t block) const;
  // Two uniforms in (0,1) with 53-bit resolution.
  std::array<double, 2> uniforms(std::uint32_t step, std::uint32_t modeId, std::uint16_t block) const;
  // Two independent standard normals (Box-Muller on one Philox block).
  std::array<double, 2> normals(std::uint32_t step, std::uint32_t modeId, std::uint16_t block) const;
  // Four standard normals from blocks 2b, 2b+1; zeros when disabled.
  std::array<double, 4> normals4(std::uint32_t step, Frequency n, std::uint16_t b = 0) const;
};

// Lattice-independent id of a frequency, so that runs at different K or N
// share the noise of every common mode.
inline std::uint32_t modeId(Frequency n) {
  return (std::uint32_t(n.n1 + 32768) << 16) | std::uint32_t(n.n2 + 32768);
}

}  // namespace wickwave
