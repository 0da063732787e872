#include "wickwave/harness/summary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wickwave {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string num(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string cell(const json& v) {
  if (v.is_number_float()) return num(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

json readJson(const fs::path& p) {
  std::ifstream in(p);
  json j;
  in >> j;
  return j;
}

void table(std::ostringstream& os, const json& t, std::size_t maxRows = 60) {
  const auto& cols = t["columns"];
  os << "|";
  for (const auto& c : cols) os << " " << c.get<std::string>() << " |";
  os << "\n|";
  for (std::size_t i = 0; i < cols.size(); ++i) os << "---|";
  os << "\n";
  std::size_t n = 0;
  for (const auto& row : t["rows"]) {
    if (n++ == maxRows) {
      os << "\n(" << t["rows"].size() - maxRows << " more rows in results.csv)\n";
      break;
    }
    os << "|";
    for (const auto& v : row) os << " " << cell(v) << " |";
    os << "\n";
  }
  os << "\n";
}

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

void section(std::ostringstream& os, const json& res) {
  const std::string name = res["experiment"];
  const json& r = res["result"];
  os << "## " << name << "\n\n";
  if (name == "variance-check") {
    os << "- criteria 1-2 (variance, stationarity): " << verdict(res["statisticalPass"]) << ", max |z| = "
       << num(r["maxAbsZ"]) << ", stationary covariance relative error " << num(r["stationaryCovarianceRelError"])
       << "\n\n";
    table(os, res["table"]);
  } else if (name == "wick-orthogonality") {
    os << "- criterion 4 (Wick orthogonality): " << verdict(res["statisticalPass"]) << ", alpha_N = "
       << num(r["alphaN"]) << ", max |z| = " << num(r["maxAbsZ"]) << "\n\n";
    table(os, res["table"]);
  } else if (name == "local-solve") {
    auto slopeLine = [&](const char* key, const char* label) {
      if (!r.contains(key)) return;
      const double s = r[key], se = r[std::string(key) + "Se"];
      os << "- " << label << ": fitted slope " << num(s) << " (95% CI " << num(s - 1.96 * se) << " .. "
         << num(s + 1.96 * se) << ") against 0.5 +- 0.2: " << verdict(std::abs(s - 0.5) <= 0.2) << "\n";
    };
    slopeLine("asymptoticSlope", "criterion 5 (contraction ~ T^{1/2}, asymptotic Picard ratio)");
    slopeLine("contractionSlope", "first-iterate ratio (reported)");
    os << "\n";
    table(os, res["table"]);
  } else if (name == "commutator-scaling") {
    os << "- exact zero defect for fields on |n| <= N/3: " << verdict(r["zeroDefectExact"]) << "\n";
    for (const auto& e : r["slopes"]) {
      const double s = e.value("slope", NAN), th = e["theory"];
      os << "- k = " << e["k"] << ": slope of the mean defect " << num(s) << ", reference -1+k(1-s) = " << num(th);
      if (e.contains("ci95")) os << ", pooled 95% CI " << num(e["ci95"][0]) << " .. " << num(e["ci95"][1]);
      os << ": " << verdict(std::abs(s - th) <= 0.3) << "\n";
    }
    os << "\n";
  } else if (name == "global-imethod-run") {
    os << "- N0 = " << num(r["N0"]) << ", stage length tau = " << num(r["tau"]) << ", stages = " << r["stages"]
       << ", schedule violation: " << (r["scheduleViolation"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& s : r["stageChecks"])
      os << "- stage " << s["stage"] << ": E " << num(s["Estart"]) << " -> " << num(s["Eend"])
         << ", sum A = " << num(s["sumA"]) << ", identity defect " << num(s["identityDefect"]) << "\n";
    const json& g = r["growth"];
    if (g.contains("C"))
      os << "- growth envelope: C = " << num(g["C"]) << ", c = " << num(g["c"]) << ", C(omega) = " << num(g["Comega"])
         << (g["exceeded"].get<bool>() ? " (exceeded)" : "") << "\n";
    const json& d = r["diagnostics"];
    if (d.is_object()) os << "- truncated diagnostics: V = " << num(d["V"]) << ", R = " << num(d["R"]) << "\n";
    os << "\n";
  } else if (name == "gibbs-invariance") {
    os << "- criterion 8 (invariance with controls): " << verdict(res["statisticalPass"]) << "\n";
    for (auto it = r["verdicts"].begin(); it != r["verdicts"].end(); ++it)
      os << "  - " << it.key() << ": " << it.value().dump() << "\n";
    os << "- criterion 9 (rejection vs importance): " << verdict(r["samplersAgree"]) << "\n";
    for (const auto& a : r["samplerAgreement"])
      os << "  - " << a["observable"].get<std::string>() << ": " << num(a["rejection"]) << " vs "
         << num(a["importance"]) << " (z = " << num(a["z"], 3) << ")\n";
    os << "- acceptance rate " << num(r["acceptanceRate"]) << " over " << r["proposals"] << " proposals\n\n";
    table(os, res["table"]);
  } else if (name == "rn-convergence") {
    os << "- successive L2 differences non-increasing within MC error: "
       << (r["cauchyTrend"].get<bool>() ? "yes" : "no") << " (reported, not asserted)\n\n";
    table(os, res["table"]);
  } else {
    os << "```\n" << r.dump(2) << "\n```\n\n";
  }
}

}  // namespace

std::string emitSummary(const std::string& directory) {
  const fs::path root(directory);
  if (!fs::is_directory(root)) throw MissingArtifact("artifact directory does not exist: " + directory, {directory});
  std::vector<fs::path> dirs;
  if (fs::exists(root / "manifest.json")) {
    dirs.push_back(root);
  } else {
    for (const auto& e : fs::directory_iterator(root))
      if (e.is_directory() && fs::exists(e.path() / "manifest.json")) dirs.push_back(e.path());
    std::sort(dirs.begin(), dirs.end());
  }
  if (dirs.empty()) throw MissingArtifact("no experiment artifacts under " + directory, {"manifest.json"});

  std::vector<std::string> missing;
  for (const auto& d : dirs) {
    const json m = readJson(d / "manifest.json");
    for (const auto& f : m["files"])
      if (!fs::exists(d / f.get<std::string>())) missing.push_back((d / f.get<std::string>()).string());
    if (!fs::exists(d / "result.json")) missing.push_back((d / "result.json").string());
  }
  if (!missing.empty()) {
    std::string msg = "missing artifacts:";
    for (const auto& f : missing) msg += " " + f;
    throw MissingArtifact(msg, missing);
  }

  std::ostringstream os;
  os << "# wickwave summary\n\n";
  for (const auto& d : dirs) {
    const json m = readJson(d / "manifest.json");
    os << "<!-- " << d.string() << ", code " << m["codeVersion"].get<std::string>() << ", wall time "
       << num(m["wallTimeSeconds"], 4) << " s -->\n";
    section(os, readJson(d / "result.json"));
  }
  return os.str();
}

}  // namespace wickwave
