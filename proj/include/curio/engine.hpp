#pragma once

// Round-synchronous simulation. Rounds run 1..rounds; inside a round players
// move in id order and their actions execute immediately. A loyalty check
// (disclose, check, ratify) closes every round divisible by check_every.

#include <cstdint>
#include <vector>

#include "curio/protocols.hpp"
#include "curio/report.hpp"
#include "curio/scenario.hpp"

namespace curio {

struct RunOptions {
  // Run each loyalty check against a copy of the world in which every
  // document that crossed a clearance boundary has all-zero content. Stored
  // signatures are kept as they were.
  bool zero_inter_contents = false;
};

// Throws Error(kInvalidScenario) if the scenario fails validation.
Report run(const Scenario& scenario, const RunOptions& options = {});

// tp/fn over adversarial players that acquired something outside their
// need-to-know no later than some check; fp over Loyal players.
Metrics metrics_from(const std::vector<CheckRecord>& checks, const GroundTruth& truth);

// Builds the initial world (keys derived from the seed, empty holdings).
World make_world(const Scenario& scenario);

}  // namespace curio
