#pragma once

// Run reports. On disk a report is line-delimited JSON: one "header" line,
// then per round the "document", "event" and "registry" lines it produced,
// a "check" line on every loyalty-check round, and a closing "metrics" line.
// Cutting the file after any check line leaves a readable prefix.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curio/behavior.hpp"
#include "curio/byzantine.hpp"
#include "curio/player.hpp"
#include "curio/registry.hpp"
#include "curio/scenario.hpp"
#include "curio/verdict.hpp"

namespace curio {

inline constexpr std::string_view kToolVersion = "curio 0.1.0";

struct CatalogueRecord {
  std::uint32_t round = 0;
  DocumentMeta meta;

  friend bool operator==(const CatalogueRecord&, const CatalogueRecord&) = default;
};

enum class EventKind : std::uint8_t {
  kAuthor,    // new document
  kTransfer,  // registered protocol run
  kExchange,  // off-record collusion hand-over
  kRequest,   // request granted
  kDenied,    // request refused
};

std::string_view to_string(EventKind kind);
std::optional<EventKind> parse_event_kind(std::string_view name);

// Ground-truth history of what moved where, registered or not.
struct Event {
  std::uint32_t round = 0;
  EventKind kind = EventKind::kAuthor;
  PlayerId from;
  PlayerId to;
  DocumentId doc;
  std::optional<Signature> sig;

  friend bool operator==(const Event&, const Event&) = default;
};

struct Holding {
  Signature sig;
  Channel channel = Channel::kInter;
  bool full = false;
  PlayerId from;
  std::uint32_t round = 0;

  friend bool operator==(const Holding&, const Holding&) = default;
};

// True state of one player at a check, independent of what it disclosed.
struct PlayerTruth {
  PlayerId player;
  BehaviorTag tag = BehaviorTag::kLoyal;
  std::vector<DocumentId> created;
  std::vector<Holding> transferred;
  std::vector<DocumentId> out_of_need_to_know;

  friend bool operator==(const PlayerTruth&, const PlayerTruth&) = default;
};

struct BASummary {
  bool agreement = true;
  std::uint64_t messages = 0;
  std::uint32_t traitors = 0;
  bool bound_exceeded = false;

  friend bool operator==(const BASummary&, const BASummary&) = default;
};

struct CheckRecord {
  std::uint32_t round = 0;
  std::vector<Disclosure> disclosures;
  VerdictVector verdicts;                 // grand designer's computation
  std::optional<VerdictVector> ratified;  // present only if agreement changed it
  BASummary ba;
  bool loyal_majority = true;
  std::vector<PlayerTruth> truth;

  // What loyal players hold after ratification.
  const VerdictVector& agreed() const { return ratified ? *ratified : verdicts; }
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct GroundTruth {
  struct Entry {
    PlayerId player;
    BehaviorTag tag = BehaviorTag::kLoyal;
    std::optional<std::uint32_t> first_out_of_need_to_know;
    std::uint32_t out_of_need_to_know_held = 0;  // final count, the exfiltration exposure

    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> players;

  friend bool operator==(const GroundTruth&, const GroundTruth&) = default;
};

struct Metrics {
  std::uint32_t true_positives = 0;
  std::uint32_t false_positives = 0;
  std::uint32_t false_negatives = 0;
  std::vector<PlayerId> evaluated;
  std::map<PlayerId, std::uint32_t> rounds_to_detection;
  std::uint64_t ba_messages = 0;
  std::uint32_t transfers = 0;
  std::uint32_t exchanges = 0;
  std::uint32_t denied_requests = 0;
  bool traitor_bound_exceeded = false;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

struct Report {
  std::string tool_version{kToolVersion};
  std::uint64_t seed = 0;
  Scenario scenario;
  std::vector<CatalogueRecord> catalogue;
  std::vector<Event> events;
  std::vector<RegistryEntry> registry;
  std::vector<CheckRecord> checks;
  GroundTruth ground_truth;
  std::optional<Metrics> metrics;  // absent in a truncated report

  friend bool operator==(const Report&, const Report&) = default;
};

std::string write_report(const Report& report);
// Accepts any prefix that ends on a line boundary.
Report read_report(std::string_view text);

// Just the verdict parts of every check line, for bit-level comparisons.
std::string verdict_section(const Report& report);

Json metrics_to_json(const Metrics& metrics);

}  // namespace curio
