#pragma once

// Per-round behavior of each player kind. Step functions are pure: they read
// an Observation and the player's own state and return actions for the engine
// to execute. None of them mutates anything.

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "curio/behavior.hpp"
#include "curio/crypto.hpp"
#include "curio/player.hpp"
#include "curio/registry.hpp"
#include "curio/verdict.hpp"

namespace curio {

struct AuthorAction {
  ClearanceLevel level = ClearanceLevel::kConfidential;
  PlayerSet need_to_know;
  Bytes content;
};

// Hand one of the player's own documents to a need-to-know member.
struct ShareAction {
  PlayerId to;
  DocumentId doc;
};

// Ask `target` for a document through the registered protocols.
struct RequestAction {
  PlayerId target;
  DocumentId doc;
  std::string pretext;
};

// Off-record hand-over to a colluding partner.
struct ExchangeAction {
  PlayerId partner;
  DocumentId doc;
};

struct StoreAction {
  SealedEnvelope envelope;
};

using Action = std::variant<AuthorAction, ShareAction, RequestAction, ExchangeAction, StoreAction>;

// What a player can see when it moves.
struct Observation {
  std::uint32_t round = 0;
  std::uint64_t seed = 0;
  const DocumentCatalog* catalogue = nullptr;  // public metadata of every document
  std::span<const ClearanceLevel> clearances;  // indexed by player id
  std::vector<AuthoringEntry> scheduled;       // this player's authoring for this round
  std::vector<SealedEnvelope> observed;        // envelopes seen on adjacent links
  // Partners' holdings, visible only to a colluding traitor.
  std::vector<std::pair<PlayerId, std::vector<DocumentId>>> partner_holdings;
};

std::vector<Action> loyal_step(const Player& p, const Observation& obs);
std::vector<Action> curious_step(const Player& p, const Observation& obs);
std::vector<Action> traitor_collude_step(const Player& p, const Observation& obs);

// Dispatches on p.behavior.tag.
std::vector<Action> step(const Player& p, const Observation& obs);

// The holder's answer to a request, per its TrustPolicy. Requests for
// documents the holder lacks in full, or that the requester's clearance
// cannot take, are always denied.
bool answer_request(const Player& holder, PlayerId requester, ClearanceLevel requester_clearance,
                    const DocumentMeta& doc, std::uint32_t round, std::uint64_t seed);

// Deterministic document body for authorings without explicit content.
Bytes synthesize_content(std::uint64_t seed, PlayerId author, std::uint32_t round, std::uint32_t index);

// The disclosure this player hands over at a loyalty check.
Disclosure disclose(const Player& p, const DocumentCatalog& catalogue, std::uint32_t round);

}  // namespace curio
