#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "curio/behavior.hpp"
#include "curio/crypto.hpp"
#include "curio/model.hpp"

namespace curio {

// How an item in the second information set arrived.
enum class Channel : std::uint8_t {
  kInter,      // blinded: signature only
  kIntra,      // signature plus full document
  kCollusion,  // off-record exchange between traitors
};

std::string_view to_string(Channel channel);

struct CreatedItem {
  Document doc;
  Signature self_signature;  // computed once at authoring time
};

struct TransferredItem {
  Signature signature;
  std::optional<Document> document;
  Channel channel = Channel::kInter;
  PlayerId from;
  std::uint32_t round = 0;
};

// First set: what the player authored. Second set: what others handed over.
// A player's own documents never appear in the second set.
class InformationSet {
 public:
  const std::map<DocumentId, CreatedItem>& created() const noexcept { return created_; }
  const std::map<Signature, TransferredItem>& transferred() const noexcept { return transferred_; }

  void add_created(CreatedItem item);
  // Returns false (and stores nothing) for duplicates or own documents.
  bool add_transferred(PlayerId owner, TransferredItem item);

  // Full document if held in either set.
  const Document* full_document(const DocumentId& id) const;
  // True if any form of the document (full or blinded) is held.
  bool holds(const DocumentId& id) const;

  // Replaces the content of every stored copy of `id`; signatures untouched.
  void replace_content(const DocumentId& id, const Bytes& content);

 private:
  std::map<DocumentId, CreatedItem> created_;
  std::map<Signature, TransferredItem> transferred_;
};

// Adversary bookkeeping carried between rounds.
struct AdversaryMemory {
  std::map<DocumentId, std::uint32_t> attempts;  // requests issued per wanted document
  std::map<DocumentId, std::uint32_t> denials;
  std::set<std::pair<DocumentId, PlayerId>> shared;     // own documents already distributed
  std::set<std::pair<DocumentId, PlayerId>> exchanged;  // handed to a partner off the record
};

struct Player {
  PlayerId id;
  ClearanceLevel clearance = ClearanceLevel::kConfidential;
  BehaviorKind behavior;
  TrustPolicy trust;
  SigningKey key;
  InformationSet info;
  std::vector<SealedEnvelope> message_store;  // append-only
  AdversaryMemory memory;
  std::uint32_t next_document = 0;
};

// Access needs both clearance dominance and need-to-know membership.
bool may_receive(const Player& p, const DocumentMeta& meta);
bool may_receive(const Player& p, const Document& d);

// Authors a document at `level`; the origin is always added to the
// need-to-know set. Throws Error(kClearanceViolation) if the author's
// clearance does not dominate `level`.
Document new_document(Player& origin, Bytes content, ClearanceLevel level, PlayerSet need_to_know);

}  // namespace curio
