#pragma once

// Recursive oral-messages agreement, OM(m). A commander sends a value to every
// lieutenant; for m > 0 each lieutenant relays what it got to the others via
// OM(m-1) and decides by majority. With n >= 3m + 1 participants and at most m
// traitors, all loyal participants decide the same value, and that value is
// the commander's whenever the commander is loyal.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "curio/model.hpp"
#include "curio/player.hpp"
#include "curio/verdict.hpp"

namespace curio {

using BAValue = std::string;

// Participants are ids 0..n-1.
struct BAConfig {
  std::uint32_t n = 1;
  std::uint32_t m = 0;
  PlayerId commander;
};

struct BAMessage {
  std::vector<PlayerId> path;  // relay chain so far, commander first
  BAValue value;
};

// Given the message a traitor is forwarding and its destination, returns the
// value the traitor actually sends.
using TraitorStrategy = std::function<BAValue(const BAMessage& incoming, PlayerId destination)>;
using TraitorStrategies = std::map<PlayerId, TraitorStrategy>;

struct BAResult {
  std::map<PlayerId, BAValue> decisions;  // every participant, commander included
  std::uint64_t messages = 0;
};

// Strict majority, or `fallback` when no value has one. Throws
// Error(kEmptyInput) for an empty input.
BAValue majority(std::span<const BAValue> values, const BAValue& fallback);

BAResult om_broadcast(const BAConfig& config, const BAValue& value,
                      const TraitorStrategies& traitors, const BAValue& fallback);

// True if every non-traitor participant decided the same value.
bool loyal_agree(const BAResult& result, const TraitorStrategies& traitors);

struct RatifiedVerdicts {
  VerdictVector agreed;
  bool agreement = true;
  std::uint64_t messages = 0;
  std::uint32_t traitors = 0;
  bool bound_exceeded = false;  // actual traitors > assumed m
};

// The grand designer (participant id == players.size()) commands; players are
// the lieutenants. TraitorColluding players push the all-Loyal vector unless
// `strategies` overrides them.
RatifiedVerdicts ratify_verdicts(const VerdictVector& verdicts, const std::vector<Player>& players,
                                 std::uint32_t assumed_m, const TraitorStrategies& strategies = {});

}  // namespace curio
