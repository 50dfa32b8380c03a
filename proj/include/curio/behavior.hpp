#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curio/model.hpp"

namespace curio {

enum class BehaviorTag : std::uint8_t {
  kLoyal,
  kCuriousOvert,       // over-collects, then discloses everything
  kCuriousConcealing,  // over-collects, hides it at disclosure time
  kTraitorColluding,   // swaps holdings with partners off the record
};

std::string_view to_string(BehaviorTag tag);
std::optional<BehaviorTag> parse_behavior_tag(std::string_view name);

enum class ConcealPolicy : std::uint8_t {
  kOutOfNeedToKnow,  // hide only what the player should not have
  kAllTransferred,   // hide the whole second information set
};

std::string_view to_string(ConcealPolicy policy);
std::optional<ConcealPolicy> parse_conceal_policy(std::string_view name);

struct BehaviorKind {
  BehaviorTag tag = BehaviorTag::kLoyal;
  // Out-of-need-to-know requests issued per round by curious players and traitors.
  std::uint32_t request_rate = 1;
  ConcealPolicy conceal = ConcealPolicy::kOutOfNeedToKnow;
  std::vector<PlayerId> partners;

  bool adversarial() const noexcept { return tag != BehaviorTag::kLoyal; }
  bool curious() const noexcept {
    return tag == BehaviorTag::kCuriousOvert || tag == BehaviorTag::kCuriousConcealing;
  }

  friend bool operator==(const BehaviorKind&, const BehaviorKind&) = default;
};

// How a player answers requests for documents it holds.
struct TrustPolicy {
  double grant_probability = 0.5;
  bool verify_need_to_know = false;

  friend bool operator==(const TrustPolicy&, const TrustPolicy&) = default;
};

// One scheduled authoring: `player` writes a document at `level` in `round`.
// Without explicit content the engine synthesizes seed-derived bytes.
struct AuthoringEntry {
  std::uint32_t round = 0;
  PlayerId player;
  ClearanceLevel level = ClearanceLevel::kConfidential;
  PlayerSet need_to_know;
  std::optional<std::string> content;

  friend bool operator==(const AuthoringEntry&, const AuthoringEntry&) = default;
};

}  // namespace curio
