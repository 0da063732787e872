#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wickwave {

class MissingArtifact : public std::runtime_error {
 public:
  MissingArtifact(const std::string& msg, std::vector<std::string> files)
      : std::runtime_error(msg), missing(std::move(files)) {}
  std::vector<std::string> missing;
};

// Markdown report from the artifacts of one or more experiment directories
// (a directory holding result.json + manifest.json, or a parent of such
// directories). Throws MissingArtifact if nothing usable is found or a
// manifest lists files that are absent.
std::string emitSummary(const std::string& directory);

}  // namespace wickwave
