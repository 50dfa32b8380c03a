#include "curio/registry.hpp"

#include <deque>
#include <tuple>

#include "curio/error.hpp"

namespace curio {

std::string_view to_string(EntryKind kind) {
  return kind == EntryKind::kSend ? "Send" : "Receive";
}

std::string_view to_string(Protocol protocol) {
  return protocol == Protocol::kInter ? "Inter" : "Intra";
}

std::optional<EntryKind> parse_entry_kind(std::string_view name) {
  if (name == "Send") return EntryKind::kSend;
  if (name == "Receive") return EntryKind::kReceive;
  return std::nullopt;
}

std::optional<Protocol> parse_protocol(std::string_view name) {
  if (name == "Inter") return Protocol::kInter;
  if (name == "Intra") return Protocol::kIntra;
  return std::nullopt;
}

std::string make_pretext(const DocumentId& doc, std::string_view justification) {
  std::string out = doc.str();
  out.push_back('|');
  out.append(justification);
  return out;
}

std::optional<DocumentId> pretext_document(std::string_view pretext) {
  return DocumentId::parse(pretext.substr(0, pretext.find('|')));
}

std::size_t Registry::register_send(PlayerId actor, PlayerId counterparty, const Signature& sig,
                                    std::string pretext, std::uint32_t round, Protocol protocol) {
  return append(RegistryEntry{EntryKind::kSend, actor, counterparty, sig, std::move(pretext), round, protocol});
}

std::size_t Registry::register_receive(PlayerId actor, PlayerId counterparty, const Signature& sig,
                                       std::uint32_t round, Protocol protocol) {
  return append(RegistryEntry{EntryKind::kReceive, actor, counterparty, sig, {}, round, protocol});
}

std::size_t Registry::append(RegistryEntry entry) {
  if (entry.actor == entry.counterparty) {
    throw Error(ErrorCode::kSelfTransfer,
                "player " + std::to_string(entry.actor.value) + " registered a transfer to itself");
  }
  const PlayerId holder = entry.kind == EntryKind::kReceive ? entry.actor : entry.counterparty;
  auto [it, inserted] = expected_[holder].emplace(entry.sig, entry.round);
  if (!inserted && entry.round < it->second) it->second = entry.round;

  if (entry.kind == EntryKind::kSend && !pretext_docs_.contains(entry.sig.digest)) {
    if (auto doc = pretext_document(entry.pretext)) pretext_docs_.emplace(entry.sig.digest, *doc);
  }
  entries_.push_back(std::move(entry));
  return entries_.size() - 1;
}

std::set<Signature> Registry::expected_transferred_set(PlayerId p, std::uint32_t up_to_round) const {
  std::set<Signature> out;
  auto it = expected_.find(p);
  if (it == expected_.end()) return out;
  for (const auto& [sig, round] : it->second) {
    if (round <= up_to_round) out.insert(sig);
  }
  return out;
}

std::vector<UnmatchedEntry> Registry::unmatched_entries(std::uint32_t up_to_round) const {
  // Key: (digest, sender, receiver). Each side queues its indices; pairs cancel.
  using Key = std::tuple<Digest, PlayerId, PlayerId>;
  std::map<Key, std::deque<std::size_t>> pending_sends;
  std::map<Key, std::deque<std::size_t>> pending_receives;

  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const RegistryEntry& e = entries_[i];
    if (e.round > up_to_round) continue;
    if (e.kind == EntryKind::kSend) {
      Key key{e.sig.digest, e.actor, e.counterparty};
      auto& waiting = pending_receives[key];
      if (!waiting.empty()) {
        waiting.pop_front();
      } else {
        pending_sends[key].push_back(i);
      }
    } else {
      Key key{e.sig.digest, e.counterparty, e.actor};
      auto& waiting = pending_sends[key];
      if (!waiting.empty()) {
        waiting.pop_front();
      } else {
        pending_receives[key].push_back(i);
      }
    }
  }

  std::set<std::size_t> orphans;
  for (const auto& [key, q] : pending_sends) orphans.insert(q.begin(), q.end());
  for (const auto& [key, q] : pending_receives) orphans.insert(q.begin(), q.end());

  std::vector<UnmatchedEntry> out;
  out.reserve(orphans.size());
  for (std::size_t i : orphans) out.push_back(UnmatchedEntry{i, entries_[i]});
  return out;
}

std::optional<DocumentId> Registry::pretext_document_for(const Signature& sig) const {
  auto it = pretext_docs_.find(sig.digest);
  if (it == pretext_docs_.end()) return std::nullopt;
  return it->second;
}

Registry Registry::from_entries(const std::vector<RegistryEntry>& entries) {
  Registry out;
  for (const auto& e : entries) out.append(e);
  return out;
}

}  // namespace curio
