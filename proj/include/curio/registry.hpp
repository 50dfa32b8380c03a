#pragma once

// The grand designer's records: an append-only log of registered sends and
// receipts, plus a catalogue of document metadata (never content).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "curio/crypto.hpp"
#include "curio/model.hpp"

namespace curio {

enum class EntryKind : std::uint8_t { kSend, kReceive };
enum class Protocol : std::uint8_t { kInter, kIntra };

std::string_view to_string(EntryKind kind);
std::string_view to_string(Protocol protocol);
std::optional<EntryKind> parse_entry_kind(std::string_view name);
std::optional<Protocol> parse_protocol(std::string_view name);

// Pretext text is "<document id>|<justification>".
std::string make_pretext(const DocumentId& doc, std::string_view justification);
std::optional<DocumentId> pretext_document(std::string_view pretext);

struct RegistryEntry {
  EntryKind kind = EntryKind::kSend;
  PlayerId actor;
  PlayerId counterparty;
  Signature sig;
  std::string pretext;  // empty for receipts
  std::uint32_t round = 0;
  Protocol protocol = Protocol::kInter;

  friend bool operator==(const RegistryEntry&, const RegistryEntry&) = default;
};

struct UnmatchedEntry {
  std::size_t index = 0;
  RegistryEntry entry;
};

class Registry {
 public:
  // Both throw Error(kSelfTransfer) when actor == counterparty.
  std::size_t register_send(PlayerId actor, PlayerId counterparty, const Signature& sig,
                            std::string pretext, std::uint32_t round, Protocol protocol);
  std::size_t register_receive(PlayerId actor, PlayerId counterparty, const Signature& sig,
                               std::uint32_t round, Protocol protocol);

  const std::vector<RegistryEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  // Signatures the log attributes to `p` by round `up_to_round`: receipts p
  // registered plus sends addressed to p.
  std::set<Signature> expected_transferred_set(PlayerId p, std::uint32_t up_to_round) const;

  // Sends with no receipt (same signature, roles swapped) and vice versa.
  // Matching is one-to-one in log order.
  std::vector<UnmatchedEntry> unmatched_entries(std::uint32_t up_to_round) const;

  // Document named by the pretext of the first registered send of `sig`.
  std::optional<DocumentId> pretext_document_for(const Signature& sig) const;

  // Rebuilds a registry from serialized entries, replaying every append.
  static Registry from_entries(const std::vector<RegistryEntry>& entries);

 private:
  std::size_t append(RegistryEntry entry);

  std::vector<RegistryEntry> entries_;
  // Incremental index: holder -> signature -> earliest round the log knew it.
  std::map<PlayerId, std::map<Signature, std::uint32_t>> expected_;
  std::map<Digest, DocumentId> pretext_docs_;
};

class DocumentCatalog {
 public:
  void add(const DocumentMeta& meta) { docs_.insert_or_assign(meta.id, meta); }
  const DocumentMeta* find(const DocumentId& id) const {
    auto it = docs_.find(id);
    return it == docs_.end() ? nullptr : &it->second;
  }
  const std::map<DocumentId, DocumentMeta>& all() const noexcept { return docs_; }

 private:
  std::map<DocumentId, DocumentMeta> docs_;
};

}  // namespace curio
