#include "wickwave/harness/parallel.hpp"

#include <algorithm>

namespace wickwave {

void SubstreamRegistry::add(std::uint64_t seed, Purpose purpose, std::uint32_t begin, std::uint32_t end) {
  for (auto& r : ranges_)
    if (r.seed == seed && r.purpose == purpose && begin <= r.memberEnd && r.memberBegin <= end) {
      r.memberBegin = std::min(r.memberBegin, begin);
      r.memberEnd = std::max(r.memberEnd, end);
      return;
    }
  ranges_.push_back({seed, purpose, begin, end});
}

bool SubstreamRegistry::overlaps(const SubstreamRegistry& other) const {
  for (const auto& a : ranges_)
    for (const auto& b : other.ranges_)
      if (a.seed == b.seed && a.purpose == b.purpose && a.memberBegin < b.memberEnd && b.memberBegin < a.memberEnd)
        return true;
  return false;
}

nlohmann::json SubstreamRegistry::toJson() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : ranges_)
    j.push_back({{"seed", r.seed}, {"purpose", int(r.purpose)}, {"members", {r.memberBegin, r.memberEnd}}});
  return j;
}

SubstreamRegistry SubstreamRegistry::fromJson(const nlohmann::json& j) {
  SubstreamRegistry r;
  for (const auto& e : j)
    r.ranges_.push_back({e.at("seed").get<std::uint64_t>(), Purpose(e.at("purpose").get<int>()),
                         e.at("members").at(0).get<std::uint32_t>(), e.at("members").at(1).get<std::uint32_t>()});
  return r;
}

}  // namespace wickwave
