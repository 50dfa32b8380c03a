#pragma once

// Exhaustive role assignment over a template scenario. Every assignment of up
// to max_curious curious players (overt or concealing) to player positions is
// run, keeping only assignments where loyal players remain a strict majority,
// and each run is checked for soundness, completeness and agreement.

#include <cstdint>
#include <string>
#include <vector>

#include "curio/json_codec.hpp"
#include "curio/report.hpp"
#include "curio/scenario.hpp"

namespace curio {

struct VerifyOptions {
  // Also enumerate every pair of positions turned into colluding traitors.
  bool include_traitor_pairs = false;
  unsigned jobs = 1;
};

struct Assignment {
  std::vector<std::pair<PlayerId, BehaviorTag>> roles;  // positions not listed stay as in the template

  std::string str() const;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Violation {
  std::string assignment;
  std::string property;  // "soundness" | "completeness" | "agreement"
  PlayerId player;
  std::uint32_t round = 0;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct PropertyReport {
  std::uint32_t players = 0;
  std::uint32_t max_curious = 0;
  std::uint64_t runs = 0;
  std::uint64_t evaluated_adversaries = 0;
  std::uint64_t flagged_adversaries = 0;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Template trimmed to its first `count` players; schedule entries, need-to-know
// members and topology edges that refer to dropped players are removed.
Scenario truncate_scenario(const Scenario& base, std::uint32_t count);

std::vector<Assignment> enumerate_assignments(std::uint32_t players, std::uint32_t max_curious,
                                              bool include_traitor_pairs);

Scenario apply_assignment(const Scenario& base, const Assignment& assignment);

// Violations of the detection properties for one finished run.
std::vector<Violation> check_properties(const Report& report, const std::string& label);

// max_players is capped at 10.
PropertyReport exhaustive_verify(const Scenario& base, std::uint32_t max_players, std::uint32_t max_curious,
                                 const VerifyOptions& options = {});

Json property_report_to_json(const PropertyReport& report);

}  // namespace curio
