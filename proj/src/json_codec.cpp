#include "curio/json_codec.hpp"

#include <algorithm>

#include "curio/error.hpp"

namespace curio {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

template <typename T, typename Parse>
T parse_enum(const Json& j, Parse parse, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  auto v = parse(j.get<std::string>());
  if (!v) bad(std::string("unknown ") + what + " '" + j.get<std::string>() + "'");
  return *v;
}

}  // namespace

void to_json(Json& j, const PlayerId& id) { j = id.value; }

void from_json(const Json& j, PlayerId& id) {
  if (!j.is_number_unsigned()) bad("player id must be a non-negative integer");
  id.value = j.get<std::uint32_t>();
}

void to_json(Json& j, const DocumentId& id) { j = id.str(); }

void from_json(const Json& j, DocumentId& id) {
  if (!j.is_string()) bad("document id must be a string");
  auto parsed = DocumentId::parse(j.get<std::string>());
  if (!parsed) bad("malformed document id '" + j.get<std::string>() + "'");
  id = *parsed;
}

void to_json(Json& j, const ClearanceLevel& level) { j = std::string(to_string(level)); }

void from_json(const Json& j, ClearanceLevel& level) {
  level = parse_enum<ClearanceLevel>(j, parse_clearance, "clearance level");
}

void to_json(Json& j, const Signature& sig) {
  j = Json{{"digest", to_hex(sig.digest)}, {"signer", sig.signer}, {"doc_id", sig.doc_id}};
}

void from_json(const Json& j, Signature& sig) {
  auto digest = digest_from_hex(j.at("digest").get<std::string>());
  if (!digest) bad("digest must be 64 lowercase hex characters");
  sig.digest = *digest;
  sig.signer = j.at("signer").get<PlayerId>();
  sig.doc_id = j.at("doc_id").get<DocumentId>();
}

void to_json(Json& j, const DocumentMeta& meta) {
  j = Json{{"id", meta.id}, {"level", meta.level}, {"need_to_know", meta.need_to_know}};
}

void from_json(const Json& j, DocumentMeta& meta) {
  meta.id = j.at("id").get<DocumentId>();
  meta.level = j.at("level").get<ClearanceLevel>();
  meta.need_to_know = j.at("need_to_know").get<PlayerSet>();
}

void to_json(Json& j, const RegistryEntry& e) {
  j = Json{{"kind", std::string(to_string(e.kind))},
           {"actor", e.actor},
           {"counterparty", e.counterparty},
           {"sig", e.sig},
           {"pretext", e.pretext},
           {"round", e.round},
           {"protocol", std::string(to_string(e.protocol))}};
}

void from_json(const Json& j, RegistryEntry& e) {
  e.kind = parse_enum<EntryKind>(j.at("kind"), parse_entry_kind, "entry kind");
  e.actor = j.at("actor").get<PlayerId>();
  e.counterparty = j.at("counterparty").get<PlayerId>();
  e.sig = j.at("sig").get<Signature>();
  e.pretext = j.at("pretext").get<std::string>();
  e.round = j.at("round").get<std::uint32_t>();
  e.protocol = parse_enum<Protocol>(j.at("protocol"), parse_protocol, "protocol");
}

void to_json(Json& j, const Evidence& ev) {
  j = Json{{"kind", std::string(to_string(ev.kind))}, {"detail", ev.detail}};
  j["sig"] = ev.sig ? Json(*ev.sig) : Json(nullptr);
}

void from_json(const Json& j, Evidence& ev) {
  ev.kind = parse_enum<EvidenceKind>(j.at("kind"), parse_evidence_kind, "evidence kind");
  ev.detail = j.at("detail").get<std::string>();
  const Json& sig = j.at("sig");
  ev.sig = sig.is_null() ? std::nullopt : std::optional<Signature>(sig.get<Signature>());
}

void to_json(Json& j, const Disclosure& d) {
  j = Json{{"player", d.player},
           {"round", d.round},
           {"created_sigs", d.created_sigs},
           {"transferred_sigs", d.transferred_sigs}};
}

void from_json(const Json& j, Disclosure& d) {
  d.player = j.at("player").get<PlayerId>();
  d.round = j.at("round").get<std::uint32_t>();
  d.created_sigs = j.at("created_sigs").get<std::set<Signature>>();
  d.transferred_sigs = j.at("transferred_sigs").get<std::set<Signature>>();
}

void to_json(Json& j, const Verdict& v) {
  j = Json{{"player", v.player},
           {"outcome", std::string(to_string(v.outcome))},
           {"evidence", v.evidence},
           {"round", v.round}};
}

void from_json(const Json& j, Verdict& v) {
  v.player = j.at("player").get<PlayerId>();
  v.outcome = parse_enum<Outcome>(j.at("outcome"), parse_outcome, "outcome");
  v.evidence = j.at("evidence").get<std::vector<Evidence>>();
  v.round = j.at("round").get<std::uint32_t>();
}

void reject_unknown_fields(const Json& object, std::initializer_list<std::string_view> allowed,
                           std::string_view where) {
  if (!object.is_object()) {
    throw Error(ErrorCode::kInvalidScenario, std::string(where) + " must be an object", std::string(where));
  }
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      const std::string field = where.empty() ? key : std::string(where) + "." + key;
      throw Error(ErrorCode::kInvalidScenario, "unknown field '" + field + "'", field);
    }
  }
}

}  // namespace curio
