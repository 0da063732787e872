#include "wickwave/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "wickwave/imethod/schedule.hpp"

namespace wickwave {

namespace {

const std::vector<std::pair<ExperimentKind, std::string>>& names() {
  static const std::vector<std::pair<ExperimentKind, std::string>> n{
      {ExperimentKind::VarianceCheck, "variance-check"},
      {ExperimentKind::WickOrthogonality, "wick-orthogonality"},
      {ExperimentKind::LocalSolve, "local-solve"},
      {ExperimentKind::GlobalImethodRun, "global-imethod-run"},
      {ExperimentKind::CommutatorScaling, "commutator-scaling"},
      {ExperimentKind::GibbsInvariance, "gibbs-invariance"},
      {ExperimentKind::RnConvergence, "rn-convergence"},
  };
  return n;
}

using nlohmann::json;

void checkKeys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(path.empty() ? "config" : path, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!ok.count(it.key())) throw ConfigError(path.empty() ? it.key() : path + "." + it.key(), "unknown key");
}

template <class T>
void read(const json& obj, const char* key, const std::string& path, T& out) {
  if (!obj.contains(key)) return;
  const std::string field = path.empty() ? key : path + "." + key;
  try {
    const json& v = obj.at(key);
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw ConfigError(field, "expected a boolean");
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw ConfigError(field, "expected an integer");
      if constexpr (std::is_unsigned_v<T>)
        if (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)
          throw ConfigError(field, "expected a non-negative integer");
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) throw ConfigError(field, "expected a number");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) throw ConfigError(field, "expected a string");
    } else {
      if (!v.is_array()) throw ConfigError(field, "expected an array");
    }
    out = v.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(field, std::string("invalid value (") + e.what() + ")");
  }
}

bool increasingPositive(const std::vector<double>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0) || !std::isfinite(v[i])) return false;
    if (i > 0 && !(v[i] > v[i - 1])) return false;
  }
  return true;
}

}  // namespace

std::string experimentName(ExperimentKind kind) {
  for (const auto& [k, n] : names())
    if (k == kind) return n;
  return "unknown";
}

ExperimentKind experimentFromName(const std::string& name) {
  for (const auto& [k, n] : names())
    if (n == name) return k;
  throw ConfigError("experiment", "unknown experiment '" + name + "'");
}

const std::vector<ExperimentKind>& allExperiments() {
  static const std::vector<ExperimentKind> all = [] {
    std::vector<ExperimentKind> v;
    for (const auto& p : names()) v.push_back(p.first);
    return v;
  }();
  return all;
}

ExperimentConfig defaultConfig(ExperimentKind kind) {
  ExperimentConfig c;
  c.experiment = kind;
  auto& p = c.physics;
  auto& r = c.run;
  switch (kind) {
    case ExperimentKind::VarianceCheck:
      p.N = {4, 16, 64};
      p.times = {0.5, 1, 2};
      p.phiTimes = {0, 1, 5};
      r.M = 10000;
      break;
    case ExperimentKind::WickOrthogonality:
      p.N = {8};
      p.times = {1};
      r.M = 100000;
      break;
    case ExperimentKind::LocalSolve:
      c.lattice.K = 32;
      p.damped = true;
      p.times = {0.05, 0.1, 0.2};
      r.dt = 0.0025;
      r.M = 1;
      break;
    case ExperimentKind::GlobalImethodRun:
      c.lattice.K = 32;
      r.T = 5.0;
      r.dt = 0.01;
      r.M = 1;
      break;
    case ExperimentKind::CommutatorScaling:
      p.N = {16, 32, 64, 128};
      p.kList = {2, 3};
      p.s = 0.85;
      r.M = 50;
      p.fields = 50;
      break;
    case ExperimentKind::GibbsInvariance:
      p.N = {1};
      r.M = 10000;
      r.T = 5.0;
      r.dt = 0.05;
      break;
    case ExperimentKind::RnConvergence:
      p.N = {2, 4, 8, 16};
      r.M = 2000;
      break;
  }
  return c;
}

nlohmann::json toJson(const ExperimentConfig& c) {
  const auto& p = c.physics;
  const auto& s = p.schedule;
  return {
      {"experiment", experimentName(c.experiment)},
      {"lattice", {{"K", c.lattice.K}, {"gridSize", c.lattice.gridSize}}},
      {"physics",
       {{"k", p.k},
        {"damped", p.damped},
        {"s", p.s},
        {"epsilon", p.epsilon},
        {"N", p.N},
        {"times", p.times},
        {"phiTimes", p.phiTimes},
        {"kList", p.kList},
        {"fields", p.fields},
        {"decay", p.decay},
        {"bandRatio", p.bandRatio},
        {"amplitude", p.amplitude},
        {"schedule",
         {{"alpha", s.alpha}, {"beta", s.beta}, {"sigma", s.sigma}, {"ctau", s.ctau}, {"N0", s.N0}}}}},
      {"run", {{"T", c.run.T}, {"dt", c.run.dt}, {"M", c.run.M}, {"seed", c.run.seed}, {"threads", c.run.threads}}},
      {"output", {{"directory", c.output.directory}, {"formats", c.output.formats}}},
  };
}

ExperimentConfig parseConfig(const nlohmann::json& j) {
  checkKeys(j, "", {"experiment", "lattice", "physics", "run", "output"});
  if (!j.contains("experiment") || !j["experiment"].is_string())
    throw ConfigError("experiment", "missing or not a string");
  ExperimentConfig c = defaultConfig(experimentFromName(j["experiment"].get<std::string>()));
  if (j.contains("lattice")) {
    const auto& l = j["lattice"];
    checkKeys(l, "lattice", {"K", "gridSize"});
    read(l, "K", "lattice", c.lattice.K);
    read(l, "gridSize", "lattice", c.lattice.gridSize);
  }
  if (j.contains("physics")) {
    const auto& p = j["physics"];
    checkKeys(p, "physics", {"k", "damped", "s", "epsilon", "N", "times", "phiTimes", "kList", "fields", "decay",
                             "bandRatio", "amplitude", "schedule"});
    auto& q = c.physics;
    read(p, "k", "physics", q.k);
    read(p, "damped", "physics", q.damped);
    read(p, "s", "physics", q.s);
    read(p, "epsilon", "physics", q.epsilon);
    read(p, "N", "physics", q.N);
    read(p, "times", "physics", q.times);
    read(p, "phiTimes", "physics", q.phiTimes);
    read(p, "kList", "physics", q.kList);
    read(p, "fields", "physics", q.fields);
    read(p, "decay", "physics", q.decay);
    read(p, "bandRatio", "physics", q.bandRatio);
    read(p, "amplitude", "physics", q.amplitude);
    if (p.contains("schedule")) {
      const auto& s = p["schedule"];
      checkKeys(s, "physics.schedule", {"alpha", "beta", "sigma", "ctau", "N0"});
      read(s, "alpha", "physics.schedule", q.schedule.alpha);
      read(s, "beta", "physics.schedule", q.schedule.beta);
      read(s, "sigma", "physics.schedule", q.schedule.sigma);
      read(s, "ctau", "physics.schedule", q.schedule.ctau);
      read(s, "N0", "physics.schedule", q.schedule.N0);
    }
  }
  if (j.contains("run")) {
    const auto& r = j["run"];
    checkKeys(r, "run", {"T", "dt", "M", "seed", "threads"});
    read(r, "T", "run", c.run.T);
    read(r, "dt", "run", c.run.dt);
    read(r, "M", "run", c.run.M);
    read(r, "seed", "run", c.run.seed);
    read(r, "threads", "run", c.run.threads);
  }
  if (j.contains("output")) {
    const auto& o = j["output"];
    checkKeys(o, "output", {"directory", "formats"});
    read(o, "directory", "output", c.output.directory);
    read(o, "formats", "output", c.output.formats);
  }
  validate(c);
  return c;
}

ExperimentConfig loadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config", std::string("malformed JSON: ") + e.what());
  }
  return parseConfig(j);
}

void validate(const ExperimentConfig& c) {
  const auto& p = c.physics;
  const auto& r = c.run;
  const ExperimentKind e = c.experiment;
  if (r.M <= 0) throw ConfigError("run.M", "M must be positive");
  if (!(r.dt > 0.0)) throw ConfigError("run.dt", "dt must be positive");
  if (e == ExperimentKind::GibbsInvariance ? !(r.T >= 0.0) : !(r.T > 0.0))
    throw ConfigError("run.T", "T must be positive");
  if (c.lattice.K < 1) throw ConfigError("lattice.K", "K must be at least 1");
  if (c.lattice.gridSize != 0 && (c.lattice.gridSize % 2 != 0 || c.lattice.gridSize < 2 * c.lattice.K + 2))
    throw ConfigError("lattice.gridSize", "gridSize must be 0 (automatic) or even and >= 2K+2");
  if (p.k < 1) throw ConfigError("physics.k", "k must be at least 1");
  if (p.k >= 2 && !(p.epsilon >= 0.0 && p.epsilon < 1.0 / (2.0 * (p.k - 1))))
    throw ConfigError("physics.epsilon", "epsilon must satisfy 0 <= epsilon < 1/(2(k-1))");
  if (!(p.s > 0.0 && p.s <= 1.0)) throw ConfigError("physics.s", "s must lie in (0, 1]");
  if (!increasingPositive(p.N)) throw ConfigError("physics.N", "cutoffs must be positive and increasing");
  if (!increasingPositive(p.times)) throw ConfigError("physics.times", "times must be positive and increasing");
  for (std::size_t i = 0; i < p.phiTimes.size(); ++i)
    if (!(p.phiTimes[i] >= 0.0) || (i > 0 && !(p.phiTimes[i] > p.phiTimes[i - 1])))
      throw ConfigError("physics.phiTimes", "times must be non-negative and increasing");
  if (p.fields < 1) throw ConfigError("physics.fields", "fields must be positive");
  if (!(p.bandRatio >= 1.0)) throw ConfigError("physics.bandRatio", "bandRatio must be >= 1");
  if (!(p.amplitude >= 0.0)) throw ConfigError("physics.amplitude", "amplitude must be non-negative");
  if (c.output.formats.empty()) throw ConfigError("output.formats", "at least one format is required");
  for (const auto& f : c.output.formats)
    if (f != "csv" && f != "json") throw ConfigError("output.formats", "unknown format '" + f + "' (csv, json)");

  auto needN = [&] {
    if (p.N.empty()) throw ConfigError("physics.N", "at least one cutoff is required");
  };
  switch (e) {
    case ExperimentKind::VarianceCheck:
      needN();
      if (p.times.empty() && p.phiTimes.empty()) throw ConfigError("physics.times", "no sample times given");
      break;
    case ExperimentKind::WickOrthogonality:
      needN();
      if (p.times.empty()) throw ConfigError("physics.times", "a sample time is required");
      break;
    case ExperimentKind::LocalSolve:
      if (p.times.empty()) throw ConfigError("physics.times", "at least one local time T is required");
      for (double T : p.times) {
        const double q = T / r.dt;
        if (std::abs(q - std::round(q)) > 1e-9 * q) throw ConfigError("physics.times", "each T must be a multiple of dt");
      }
      break;
    case ExperimentKind::GlobalImethodRun: {
      if (!(p.s > 0.8)) throw ConfigError("physics.s", "global-imethod-run requires s > 4/5");
      if (p.k != 3) throw ConfigError("physics.k", "global-imethod-run is implemented for k = 3");
      ScheduleParams sp{p.s, p.schedule.alpha, p.schedule.beta, p.schedule.sigma, p.schedule.ctau};
      try {
        validateScheduleParams(sp);
      } catch (const std::invalid_argument& ex) {
        throw ConfigError("physics.schedule", ex.what());
      }
      if (p.schedule.N0 != 0.0 && !(p.schedule.N0 >= 1.0))
        throw ConfigError("physics.schedule.N0", "N0 must be 0 (search) or >= 1");
      break;
    }
    case ExperimentKind::CommutatorScaling:
      needN();
      if (!(p.s >= 2.0 / 3.0 && p.s < 1.0)) throw ConfigError("physics.s", "commutator scaling needs 2/3 <= s < 1");
      if (p.kList.empty()) throw ConfigError("physics.kList", "at least one degree is required");
      for (int k : p.kList)
        if (k < 1 || k > 3) throw ConfigError("physics.kList", "degrees must lie in {1, 2, 3}");
      break;
    case ExperimentKind::GibbsInvariance:
    case ExperimentKind::RnConvergence:
      needN();
      if (p.k < 3 || p.k % 2 == 0) throw ConfigError("physics.k", "k must be odd and >= 3");
      break;
  }
}

}  // namespace wickwave
