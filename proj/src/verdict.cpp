#include "curio/verdict.hpp"

#include "curio/error.hpp"
#include "curio/json_codec.hpp"

namespace curio {

std::string_view to_string(Outcome outcome) {
  return outcome == Outcome::kLoyal ? "Loyal" : "Curious";
}

std::string_view to_string(EvidenceKind kind) {
  switch (kind) {
    case EvidenceKind::kUndisclosedHolding:  return "UndisclosedHolding";
    case EvidenceKind::kUnregisteredHolding: return "UnregisteredHolding";
    case EvidenceKind::kNeedToKnowViolation: return "NeedToKnowViolation";
    case EvidenceKind::kMissingDisclosure:   return "MissingDisclosure";
  }
  return "Unknown";
}

std::optional<Outcome> parse_outcome(std::string_view name) {
  if (name == "Loyal") return Outcome::kLoyal;
  if (name == "Curious") return Outcome::kCurious;
  return std::nullopt;
}

std::optional<EvidenceKind> parse_evidence_kind(std::string_view name) {
  for (auto kind : {EvidenceKind::kUndisclosedHolding, EvidenceKind::kUnregisteredHolding,
                    EvidenceKind::kNeedToKnowViolation, EvidenceKind::kMissingDisclosure}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

VerdictVector all_loyal_vector(std::uint32_t player_count, std::uint32_t round) {
  VerdictVector out;
  out.reserve(player_count);
  for (std::uint32_t i = 0; i < player_count; ++i) {
    out.push_back(Verdict{PlayerId{i}, Outcome::kLoyal, {}, round});
  }
  return out;
}

std::string encode_verdicts(const VerdictVector& verdicts) {
  return Json(verdicts).dump();
}

VerdictVector decode_verdicts(std::string_view encoded) {
  try {
    return Json::parse(encoded).get<VerdictVector>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kDecodeError, std::string("verdict vector: ") + e.what());
  }
}

}  // namespace curio
