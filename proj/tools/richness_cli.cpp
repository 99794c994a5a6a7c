// richness: estimate category richness from abundance data, or evaluate the
// estimators on simulated fields.
//
// Exit codes: 0 success, 1 selftest failure, 2 usage, 3 input/parse, 4 compute.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "richness/error.hpp"
#include "richness/estimate.hpp"
#include "richness/fieldsim.hpp"
#include "richness/io.hpp"
#include "richness/selftest.hpp"
#include "richness/version.hpp"

namespace {

constexpr int kExitSelftest = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitCompute = 4;
constexpr std::uint32_t kMaxDefaultOrder = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw richness::ParseError(0, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

struct EstimateArgs {
  std::string input;
  std::string input_format;
  std::vector<std::string> methods;
  std::vector<std::uint32_t> orders{1, 2, 3};
  bool allow_high_order = false;
  double risk = 0.05;
  std::string sided = "two_sided";
  std::uint32_t replicates = richness::bootstrap::kDefaultReplicates;
  std::uint64_t seed = richness::bootstrap::kDefaultSeed;
  std::string format = "table";
  int threads = 0;
};

std::vector<richness::MethodSpec> resolve_methods(const EstimateArgs& args) {
  using richness::MethodKind;
  using richness::MethodSpec;
  std::vector<std::string> tags = args.methods;
  if (tags.empty()) tags = {"fisher", "bootstrap", "bootstrap-exact", "jackknife"};
  std::vector<MethodSpec> out;
  for (const auto& tag : tags) {
    if (tag == "jackknife") {
      for (auto k : args.orders) out.push_back({MethodKind::jackknife, k});
      continue;
    }
    try {
      out.push_back(MethodSpec::parse(tag));
    } catch (const richness::InvalidInput& e) {
      throw UsageError(e.what());
    }
  }
  for (const auto& m : out) {
    if (m.kind == MethodKind::jackknife && m.order == 0) {
      throw UsageError("jackknife order must be at least 1");
    }
    if (m.kind == MethodKind::jackknife && m.order > kMaxDefaultOrder && !args.allow_high_order) {
      throw UsageError("jackknife order " + std::to_string(m.order) +
                       " needs --allow-high-order");
    }
  }
  return out;
}

int cmd_estimate(const EstimateArgs& args) {
  set_threads(args.threads);
  const auto format = richness::io::parse_output_format(args.format);
  richness::io::ReportRequest request;
  request.methods = resolve_methods(args);
  request.risk = args.risk;
  request.sidedness = richness::inference::parse_sidedness(args.sided);
  request.options.bootstrap = {args.replicates, args.seed};

  auto input_format = richness::io::input_format_for(args.input);
  if (args.input_format == "tsv") input_format = richness::io::InputFormat::tsv;
  if (args.input_format == "csv") input_format = richness::io::InputFormat::csv;
  const auto sample = richness::io::parse_abundance(read_input(args.input), input_format);
  const auto doc = richness::io::build_report(sample, request);
  std::cout << richness::io::render_report(doc, format);
  return 0;
}

struct SimulateArgs {
  std::string scenario;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> replicates;
  std::string format = "table";
  int threads = 0;
};

int cmd_simulate(const SimulateArgs& args) {
  set_threads(args.threads);
  const auto format = richness::io::parse_output_format(args.format);
  auto scenario = richness::io::parse_scenario(read_input(args.scenario));
  if (args.trials) scenario.trials = *args.trials;
  if (args.seed) scenario.seed = *args.seed;
  if (args.replicates) scenario.replicates = *args.replicates;

  richness::fieldsim::ExperimentOptions options;
  options.replicates = scenario.replicates;
  options.sidedness = scenario.sidedness;
  const auto report =
      richness::fieldsim::run_experiment(scenario.model, scenario.sample_size, scenario.trials,
                                         scenario.methods, scenario.risk, scenario.seed, options);
  std::cout << richness::io::render_coverage(scenario, report, format);
  return 0;
}

int cmd_selftest(const std::string& fixture_path, bool verbose) {
  const std::string text =
      fixture_path.empty() ? std::string(richness::bundled_fixture_csv()) : read_input(fixture_path);
  const auto fixture = richness::io::parse_abundance(text, richness::io::input_format_for(fixture_path));
  const auto checks = richness::run_selftest(fixture);
  int failed = 0;
  for (const auto& c : checks) {
    if (!c.passed) ++failed;
    if (verbose || !c.passed) {
      char line[256];
      std::snprintf(line, sizeof line, "%s %-36s expected %.6f actual %.6f tol %.1e\n",
                    c.passed ? "ok  " : "FAIL", c.name.c_str(), c.expected, c.actual,
                    c.tolerance);
      std::cout << line;
    }
  }
  std::cout << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? 0 : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Category richness estimation (Fisher log-series, bootstrap, delete-k jackknife)"};
  app.set_version_flag("--version", std::string(richness::kVersion));
  app.require_subcommand(1);

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "Estimate richness from an abundance file");
  estimate->add_option("-i,--input", est.input, "label,count file ('-' for stdin)")->required();
  estimate->add_option("--input-format", est.input_format, "csv or tsv (default: by extension)")
      ->check(CLI::IsMember({"csv", "tsv"}));
  estimate
      ->add_option("-m,--methods", est.methods,
                   "fisher, bootstrap, bootstrap-exact, jackknife, jackknife:k")
      ->delimiter(',');
  estimate->add_option("--orders", est.orders, "jackknife orders for bare 'jackknife'")
      ->delimiter(',');
  estimate->add_flag("--allow-high-order", est.allow_high_order, "permit jackknife orders above 3");
  estimate->add_option("--risk", est.risk, "risk level for the upper bound")
      ->check(CLI::Range(0.0, 1.0));
  estimate->add_option("--sided", est.sided, "two_sided or one_sided")
      ->check(CLI::IsMember({"two_sided", "one_sided", "two", "one"}));
  estimate->add_option("--replicates", est.replicates, "bootstrap replicates")
      ->check(CLI::Range(2u, 100'000'000u));
  estimate->add_option("--seed", est.seed, "bootstrap seed");
  estimate->add_option("-f,--format", est.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  estimate->add_option("--threads", est.threads, "OpenMP threads (0 = runtime default)");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Evaluate estimators on a simulated field");
  simulate->add_option("-s,--scenario", sim.scenario, "scenario JSON file")->required();
  simulate->add_option("--trials", sim.trials, "override scenario trials");
  simulate->add_option("--seed", sim.seed, "override scenario seed");
  simulate->add_option("--replicates", sim.replicates, "override bootstrap replicates");
  simulate->add_option("-f,--format", sim.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  simulate->add_option("--threads", sim.threads, "OpenMP threads (0 = runtime default)");

  std::string fixture;
  bool verbose = false;
  auto* selftest = app.add_subcommand("selftest", "Check the bundled fixture against stored values");
  selftest->add_option("--fixture", fixture, "alternative fixture file");
  selftest->add_flag("-v,--verbose", verbose, "list every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*estimate) return cmd_estimate(est);
    if (*simulate) return cmd_simulate(sim);
    if (*selftest) return cmd_selftest(fixture, verbose);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const richness::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitParse;
  } catch (const richness::ComputeError& e) {
    std::cerr << "compute error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitUsage;
}
