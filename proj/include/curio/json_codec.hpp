#pragma once

// JSON forms of the shared domain types. Field names follow the type
// definitions in snake_case; digests are 64-char lowercase hex; player ids are
// bare integers; document ids are "d<origin>.<counter>".

#include "json.hpp"

#include "curio/crypto.hpp"
#include "curio/model.hpp"
#include "curio/registry.hpp"
#include "curio/verdict.hpp"

namespace curio {

using Json = nlohmann::json;

void to_json(Json& j, const PlayerId& id);
void from_json(const Json& j, PlayerId& id);
void to_json(Json& j, const DocumentId& id);
void from_json(const Json& j, DocumentId& id);
void to_json(Json& j, const ClearanceLevel& level);
void from_json(const Json& j, ClearanceLevel& level);
void to_json(Json& j, const Signature& sig);
void from_json(const Json& j, Signature& sig);
void to_json(Json& j, const DocumentMeta& meta);
void from_json(const Json& j, DocumentMeta& meta);
void to_json(Json& j, const RegistryEntry& entry);
void from_json(const Json& j, RegistryEntry& entry);
void to_json(Json& j, const Evidence& evidence);
void from_json(const Json& j, Evidence& evidence);
void to_json(Json& j, const Disclosure& disclosure);
void from_json(const Json& j, Disclosure& disclosure);
void to_json(Json& j, const Verdict& verdict);
void from_json(const Json& j, Verdict& verdict);

// Rejects keys outside `allowed`; throws Error(kInvalidScenario) naming the
// first unknown field prefixed by `where`.
void reject_unknown_fields(const Json& object, std::initializer_list<std::string_view> allowed,
                           std::string_view where);

}  // namespace curio
