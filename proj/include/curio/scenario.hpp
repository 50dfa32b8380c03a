#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curio/behavior.hpp"
#include "curio/json_codec.hpp"
#include "curio/model.hpp"

namespace curio {

struct PlayerSpec {
  ClearanceLevel clearance = ClearanceLevel::kConfidential;
  BehaviorKind behavior;
  TrustPolicy trust;

  friend bool operator==(const PlayerSpec&, const PlayerSpec&) = default;
};

using Adjacency = std::vector<std::vector<PlayerId>>;

struct Scenario {
  std::vector<PlayerSpec> players;
  // Undirected adjacency list; absent means default_topology(players).
  std::optional<Adjacency> topology;
  std::uint32_t rounds = 10;
  std::uint32_t check_every = 5;
  std::uint64_t seed = 0;
  std::uint32_t assumed_m = 0;
  std::vector<AuthoringEntry> authoring_schedule;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Complete graph inside each clearance level, plus one liaison edge between
// the lowest-id members of consecutive non-empty levels.
Adjacency default_topology(const std::vector<PlayerSpec>& players);

// Explicit topology if given, else the default; symmetrized.
Adjacency effective_topology(const Scenario& scenario);

// Throws Error(kInvalidScenario) with the offending field path.
void validate(const Scenario& scenario);

Json scenario_to_json(const Scenario& scenario);
// Unknown fields and type mismatches are kInvalidScenario; malformed JSON is
// kParseError with line and column.
Scenario scenario_from_json(const Json& json);
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace curio
