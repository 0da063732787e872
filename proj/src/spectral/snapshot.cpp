#include "wickwave/spectral/snapshot.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace wickwave {

namespace {

void putU32(std::ostream& os, std::uint32_t v) {
  std::array<char, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = char((v >> (8 * i)) & 0xffu);
  os.write(b.data(), 4);
}

std::uint32_t getU32(std::istream& is) {
  std::array<unsigned char, 4> b{};
  if (!is.read(reinterpret_cast<char*>(b.data()), 4)) throw std::runtime_error("truncated snapshot header");
  return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) | (std::uint32_t(b[3]) << 24);
}

void putF32(std::ostream& os, double x) { putU32(os, std::bit_cast<std::uint32_t>(static_cast<float>(x))); }

float getF32(std::istream& is) { return std::bit_cast<float>(getU32(is)); }

}  // namespace

void writeSnapshot(std::ostream& os, const Lattice& lattice, const std::vector<SpectralField>& fields) {
  os.write("WWF1", 4);
  putU32(os, std::uint32_t(lattice.K()));
  putU32(os, std::uint32_t(lattice.gridSize()));
  putU32(os, std::uint32_t(fields.size()));
  for (const auto& f : fields) {
    if (!(f.lattice() == lattice)) throw std::invalid_argument("snapshot fields must share the lattice");
    for (const auto& c : f.coeffs()) {
      putF32(os, c.real());
      putF32(os, c.imag());
    }
  }
}

bool readSnapshot(std::istream& is, Snapshot& out) {
  char magic[4];
  is.read(magic, 4);
  if (is.gcount() == 0 && is.eof()) return false;
  if (is.gcount() != 4 || std::memcmp(magic, "WWF1", 4) != 0) throw std::runtime_error("bad snapshot magic");
  const int K = int(getU32(is));
  const int grid = int(getU32(is));
  const std::uint32_t count = getU32(is);
  out.lattice = Lattice(K, grid);
  out.fields.assign(count, SpectralField(out.lattice));
  for (auto& f : out.fields)
    for (auto& c : f.coeffs()) {
      const float re = getF32(is);
      const float im = getF32(is);
      c = cplx(re, im);
    }
  return true;
}

void writeSnapshotFile(const std::string& path, const std::vector<Snapshot>& records) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& r : records) writeSnapshot(os, r.lattice, r.fields);
}

std::vector<Snapshot> readSnapshotFile(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::vector<Snapshot> out;
  Snapshot s;
  while (readSnapshot(is, s)) out.push_back(s);
  return out;
}

}  // namespace wickwave
