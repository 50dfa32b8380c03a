// curio: run, verify and validate curious-player detection scenarios.
//
// Exit codes: 0 success, 1 property violation (verify), 2 invalid input.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "curio/engine.hpp"
#include "curio/error.hpp"
#include "curio/report.hpp"
#include "curio/scenario.hpp"
#include "curio/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInvalid = 2;

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("CURIO_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used, 10);
    if (used != std::string(raw).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw curio::Error(curio::ErrorCode::kInvalidScenario, "CURIO_SEED is not an unsigned integer", "CURIO_SEED");
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw curio::Error(curio::ErrorCode::kParseError, "cannot write " + path);
  out << text;
  if (!out) throw curio::Error(curio::ErrorCode::kParseError, "failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curious-player detection simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  auto* run_cmd = app.add_subcommand("run", "Simulate a scenario and write its report");
  run_cmd->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  run_cmd->add_option("--seed", seed, "Seed; overrides CURIO_SEED and the scenario's seed");
  run_cmd->add_option("--out", out_path, "Report output path (line-delimited JSON)")->required();

  std::string template_path;
  std::uint32_t max_players = 10;
  std::uint32_t max_curious = 2;
  bool include_traitors = false;
  unsigned jobs = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Run every role assignment of a template scenario");
  verify_cmd->add_option("--template", template_path, "Template scenario JSON file")->required();
  verify_cmd->add_option("--max-players", max_players, "Players kept from the template (<= 10)")
      ->check(CLI::Range(2, 10));
  verify_cmd->add_option("--max-curious", max_curious, "Largest number of curious players");
  verify_cmd->add_option("--out", out_path, "Property report output path")->required();
  verify_cmd->add_flag("--include-traitors", include_traitors, "Also enumerate colluding traitor pairs");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 64));

  auto* validate_cmd = app.add_subcommand("validate", "Check a scenario file");
  validate_cmd->add_option("--scenario", scenario_path, "Scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kInvalid;
  }

  try {
    if (*run_cmd) {
      curio::Scenario scenario = curio::load_scenario(scenario_path);
      if (seed) {
        scenario.seed = *seed;
      } else if (auto from_env = env_seed()) {
        scenario.seed = *from_env;
      }
      const curio::Report report = curio::run(scenario);
      write_file(out_path, curio::write_report(report));
      const auto& m = *report.metrics;
      std::cout << "checks=" << report.checks.size() << " tp=" << m.true_positives
                << " fp=" << m.false_positives << " fn=" << m.false_negatives << "\n";
      return kOk;
    }
    if (*verify_cmd) {
      const curio::Scenario base = curio::load_scenario(template_path);
      const curio::PropertyReport report =
          curio::exhaustive_verify(base, max_players, max_curious, {include_traitors, jobs});
      write_file(out_path, curio::property_report_to_json(report).dump(2) + "\n");
      std::cout << "runs=" << report.runs << " violations=" << report.violations.size() << "\n";
      for (const auto& v : report.violations) {
        std::cout << "  " << v.property << " [" << v.assignment << "] player " << v.player.value << " round "
                  << v.round << ": " << v.detail << "\n";
      }
      return report.ok() ? kOk : kViolation;
    }
    if (*validate_cmd) {
      curio::load_scenario(scenario_path);
      std::cout << "OK\n";
      return kOk;
    }
  } catch (const curio::Error& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
