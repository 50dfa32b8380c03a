#pragma once

// The two registered transfer protocols and the grand designer's loyalty
// check.
//
// Inter-clearance (sender and receiver at different levels):
//   I catalogue, II sign (blinding), III seal, IV transmit and register the
//   send with its pretext, V receiver opens, compares and registers receipt.
//   The receiver ends up with the signature only.
// Intra-clearance (same level):
//   I sign and seal the full document, II transmit and register the send,
//   III receiver opens, compares and registers receipt. The receiver ends up
//   with the signature and the full document.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curio/byzantine.hpp"
#include "curio/crypto.hpp"
#include "curio/player.hpp"
#include "curio/registry.hpp"
#include "curio/verdict.hpp"

namespace curio {

// Mutable state shared by the protocols: the players and the grand
// designer's records.
struct World {
  std::uint64_t seed = 0;
  std::vector<Player> players;
  Registry registry;
  DocumentCatalog catalogue;
  std::set<DocumentId> inter_documents;  // documents that crossed a clearance boundary

  Player& player(PlayerId id) { return players.at(id.value); }
  const Player& player(PlayerId id) const { return players.at(id.value); }
};

struct TransferRequest {
  PlayerId from;
  PlayerId to;
  DocumentId doc;
  std::string pretext;
  Protocol protocol = Protocol::kInter;
};

// Builds a request with the protocol implied by the two clearances.
TransferRequest make_request(const World& world, PlayerId from, PlayerId to, const DocumentId& doc,
                             std::string pretext);

// Which registration steps the sender and receiver actually perform; honest
// runs do both.
struct Registration {
  bool send = true;
  bool receive = true;
};

struct Delivery {
  Signature sig;
  SealedEnvelope envelope;
  Protocol protocol = Protocol::kInter;
  std::optional<std::size_t> send_entry;
  std::optional<std::size_t> receive_entry;
  // Receiver's step: the opened signature equals the one registered by the
  // sender. False when no send was registered.
  bool matches_registered_send = false;
};

// Errors: kNotHolder, kClearanceViolation, kLevelMismatch.
Delivery inter_clearance_transfer(World& world, const TransferRequest& req, std::uint32_t round,
                                  Registration registration = {});
Delivery intra_clearance_transfer(World& world, const TransferRequest& req, std::uint32_t round,
                                  Registration registration = {});
// Dispatches on req.protocol.
Delivery transfer(World& world, const TransferRequest& req, std::uint32_t round,
                  Registration registration = {});

// One disclosure per player, in id order, filtered by each player's strategy.
std::vector<Disclosure> collect_disclosures(const World& world, std::uint32_t round);

// Grand designer's search. Needs no document content: it compares registry
// signatures against disclosed signatures and resolves signatures to
// catalogue metadata through registered pretexts. A player with no
// disclosure is judged Curious with kMissingDisclosure evidence.
VerdictVector loyalty_check(const std::vector<Disclosure>& disclosures, const Registry& registry,
                            const DocumentCatalog& catalogue, std::uint32_t player_count,
                            std::uint32_t round);

struct SweepResult {
  std::uint32_t round = 0;
  std::vector<Disclosure> disclosures;
  VerdictVector computed;   // the grand designer's own verdicts
  RatifiedVerdicts ratified;
  bool loyal_majority = true;  // loyal players strictly outnumber the rest
};

// disclose, check, then ratify by agreement across all players.
SweepResult theorem1_sweep(const World& world, std::uint32_t round, std::uint32_t assumed_m);

}  // namespace curio
