#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "curio/crypto.hpp"
#include "curio/model.hpp"

namespace curio {

// What a player hands the grand designer at a loyalty check: signatures of
// both information sets, assembled at the same round for every player.
struct Disclosure {
  PlayerId player;
  std::uint32_t round = 0;
  std::set<Signature> created_sigs;
  std::set<Signature> transferred_sigs;

  friend bool operator==(const Disclosure&, const Disclosure&) = default;
};

enum class Outcome : std::uint8_t { kLoyal, kCurious };

enum class EvidenceKind : std::uint8_t {
  kUndisclosedHolding,   // registry knows it, disclosure omits it
  kUnregisteredHolding,  // disclosed but never registered
  kNeedToKnowViolation,  // held outside the document's need-to-know
  kMissingDisclosure,    // no disclosure at all; carries no signature
};

std::string_view to_string(Outcome outcome);
std::string_view to_string(EvidenceKind kind);
std::optional<Outcome> parse_outcome(std::string_view name);
std::optional<EvidenceKind> parse_evidence_kind(std::string_view name);

struct Evidence {
  EvidenceKind kind = EvidenceKind::kUndisclosedHolding;
  std::optional<Signature> sig;
  std::string detail;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

// outcome == kCurious exactly when evidence is non-empty.
struct Verdict {
  PlayerId player;
  Outcome outcome = Outcome::kLoyal;
  std::vector<Evidence> evidence;
  std::uint32_t round = 0;

  bool curious() const noexcept { return outcome == Outcome::kCurious; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

using VerdictVector = std::vector<Verdict>;

VerdictVector all_loyal_vector(std::uint32_t player_count, std::uint32_t round);

// Canonical compact encoding; identical vectors encode to identical bytes.
std::string encode_verdicts(const VerdictVector& verdicts);
VerdictVector decode_verdicts(std::string_view encoded);

}  // namespace curio
