#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wickwave/spectral/lattice.hpp"

namespace wickwave {

// Binary record: "WWF1", uint32 K, uint32 gridSize, uint32 fieldCount, then
// fieldCount arrays of (2K+1)^2 little-endian complex64 (float32 re, float32 im),
// frequency order row-major with n1 outer from -K to K.
struct Snapshot {
  Lattice lattice;
  std::vector<SpectralField> fields;
};

void writeSnapshot(std::ostream& os, const Lattice& lattice, const std::vector<SpectralField>& fields);
// Returns false at clean end of stream; throws on a malformed record.
bool readSnapshot(std::istream& is, Snapshot& out);

void writeSnapshotFile(const std::string& path, const std::vector<Snapshot>& records);
std::vector<Snapshot> readSnapshotFile(const std::string& path);

}  // namespace wickwave
