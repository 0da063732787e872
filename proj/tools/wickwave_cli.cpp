// wickwave: run one experiment, print a default config, or summarize artifacts.
//
//   wickwave <experiment> [--config PATH] [--seed U64] [--out DIR] [--threads N] [--format csv|json]
//   wickwave print-config <experiment>
//   wickwave summary DIR
//
// Environment: WICKWAVE_OUT_DIR and WICKWAVE_THREADS override the config file;
// command-line flags override both. Exit codes: 0 pass, 2 statistical test
// failure, 1 error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "wickwave/harness/config.hpp"
#include "wickwave/harness/run.hpp"
#include "wickwave/harness/summary.hpp"

using namespace wickwave;

namespace {

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<unsigned> threads;
  std::optional<std::string> format;
};

ExperimentConfig resolve(ExperimentKind kind, const Flags& f) {
  ExperimentConfig cfg = defaultConfig(kind);
  if (!f.config.empty()) {
    cfg = loadConfigFile(f.config);
    if (cfg.experiment != kind)
      throw ConfigError("experiment", "config file is for '" + experimentName(cfg.experiment) + "', not '" +
                                          experimentName(kind) + "'");
  }
  if (const char* e = std::getenv("WICKWAVE_OUT_DIR"); e && *e) cfg.output.directory = e;
  if (const char* e = std::getenv("WICKWAVE_THREADS"); e && *e) {
    try {
      cfg.run.threads = unsigned(std::stoul(e));
    } catch (const std::exception&) {
      throw ConfigError("WICKWAVE_THREADS", "not a non-negative integer");
    }
  }
  if (f.seed) cfg.run.seed = *f.seed;
  if (f.out) cfg.output.directory = *f.out;
  if (f.threads) cfg.run.threads = *f.threads;
  if (f.format) cfg.output.formats = {*f.format};
  validate(cfg);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wickwave: stochastic wave equation experiments on the 2-torus"};
  app.require_subcommand(1);

  Flags flags;
  std::optional<ExperimentKind> chosen;
  for (ExperimentKind kind : allExperiments()) {
    auto* sub = app.add_subcommand(experimentName(kind), "run the " + experimentName(kind) + " experiment");
    sub->add_option("--config", flags.config, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--seed", flags.seed, "root seed");
    sub->add_option("--out", flags.out, "output directory");
    sub->add_option("--threads", flags.threads, "worker threads (0 = all cores)");
    sub->add_option("--format", flags.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->callback([&chosen, kind] { chosen = kind; });
  }
  std::string printName;
  auto* print = app.add_subcommand("print-config", "print the default config of an experiment");
  print->add_option("experiment", printName, "experiment name")->required();
  std::string summaryDir;
  auto* summary = app.add_subcommand("summary", "Markdown summary of experiment artifacts");
  summary->add_option("dir", summaryDir, "artifact directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (print->parsed()) {
      std::cout << toJson(defaultConfig(experimentFromName(printName))).dump(2) << "\n";
      return kExitPass;
    }
    if (summary->parsed()) {
      std::cout << emitSummary(summaryDir);
      return kExitPass;
    }
    const ExperimentConfig cfg = resolve(*chosen, flags);
    const int status = runExperiment(cfg);
    std::cerr << experimentName(cfg.experiment) << ": "
              << (status == kExitPass ? "pass" : "statistical test failed") << " (artifacts in "
              << cfg.output.directory << ")\n";
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
