#include "wickwave/gibbs/convergence.hpp"

#include <algorithm>
#include <cmath>

#include "wickwave/gibbs/density.hpp"
#include "wickwave/gibbs/sampler.hpp"
#include "wickwave/harness/parallel.hpp"
#include "wickwave/stochastic/convolution.hpp"

namespace wickwave {

nlohmann::json RnConvergence::toJson() const {
  nlohmann::json j;
  for (const auto& l : levels) j["levels"].push_back({{"N", l.N}, {"meanR", l.meanR}, {"seR", l.seR}, {"minR", l.minR}});
  for (const auto& d : differences)
    j["differences"].push_back({{"N", d.N}, {"Nnext", d.Nnext}, {"l1", d.l1}, {"l1Se", d.l1Se}, {"l2", d.l2},
                                {"l2Se", d.l2Se}});
  j["cauchyTrend"] = cauchyTrend;
  return j;
}

RnConvergence mcConvergenceRN(int k, const std::vector<double>& Nlist, std::size_t M, const NoiseStream& noise,
                              unsigned threads) {
  if (Nlist.empty()) throw std::invalid_argument("N list is empty");
  for (std::size_t i = 1; i < Nlist.size(); ++i)
    if (!(Nlist[i] >= Nlist[i - 1])) throw std::invalid_argument("N list must be increasing");
  std::vector<GibbsSpec> specs;
  for (double N : Nlist) specs.emplace_back(N, k);
  const Lattice big = specs.back().lattice();

  // R[i][member]
  std::vector<std::vector<double>> R(Nlist.size(), std::vector<double>(M));
  parallelFor(M, threads, [&](std::size_t m) {
    const FieldPair u = sampleMu1Pair(big, noise.forMember(std::uint32_t(m)), 2.0 * big.K());
    for (std::size_t i = 0; i < specs.size(); ++i) R[i][m] = std::exp(gibbsLogDensity(u.position, specs[i]));
  });

  RnConvergence out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto s = meanAndSe(R[i]);
    out.levels.push_back({Nlist[i], s.mean, s.se, *std::min_element(R[i].begin(), R[i].end())});
  }
  for (std::size_t i = 0; i + 1 < specs.size(); ++i) {
    std::vector<double> d1(M), d2(M);
    for (std::size_t m = 0; m < M; ++m) {
      const double d = std::abs(R[i + 1][m] - R[i][m]);
      d1[m] = d;
      d2[m] = d * d;
    }
    const auto a = meanAndSe(d1), b = meanAndSe(d2);
    out.differences.push_back({Nlist[i], Nlist[i + 1], a.mean, a.se, b.mean, b.se});
  }
  for (std::size_t i = 1; i < out.differences.size(); ++i) {
    const auto& p = out.differences[i - 1];
    const auto& c = out.differences[i];
    if (c.l2 > p.l2 + 2.0 * std::hypot(p.l2Se, c.l2Se)) out.cauchyTrend = false;
  }
  return out;
}

}  // namespace wickwave
