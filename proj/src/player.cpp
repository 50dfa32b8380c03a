#include "curio/player.hpp"

#include "curio/error.hpp"

namespace curio {

std::string_view to_string(Channel channel) {
  switch (channel) {
    case Channel::kInter:     return "inter";
    case Channel::kIntra:     return "intra";
    case Channel::kCollusion: return "collusion";
  }
  return "unknown";
}

void InformationSet::add_created(CreatedItem item) {
  const DocumentId id = item.doc.id();
  created_.emplace(id, std::move(item));
}

bool InformationSet::add_transferred(PlayerId owner, TransferredItem item) {
  if (item.signature.doc_id.origin == owner) return false;
  return transferred_.emplace(item.signature, std::move(item)).second;
}

const Document* InformationSet::full_document(const DocumentId& id) const {
  if (auto it = created_.find(id); it != created_.end()) return &it->second.doc;
  for (const auto& [sig, item] : transferred_) {
    if (sig.doc_id == id && item.document) return &*item.document;
  }
  return nullptr;
}

bool InformationSet::holds(const DocumentId& id) const {
  if (created_.contains(id)) return true;
  for (const auto& [sig, item] : transferred_) {
    if (sig.doc_id == id) return true;
  }
  return false;
}

void InformationSet::replace_content(const DocumentId& id, const Bytes& content) {
  if (auto it = created_.find(id); it != created_.end()) {
    it->second.doc = it->second.doc.with_content(content);
  }
  for (auto& [sig, item] : transferred_) {
    if (sig.doc_id == id && item.document) item.document = item.document->with_content(content);
  }
}

bool may_receive(const Player& p, const DocumentMeta& meta) {
  return dominates(p.clearance, meta.level) && meta.need_to_know.contains(p.id);
}

bool may_receive(const Player& p, const Document& d) {
  return dominates(p.clearance, d.level()) && d.needs_to_know(p.id);
}

Document new_document(Player& origin, Bytes content, ClearanceLevel level, PlayerSet need_to_know) {
  if (!dominates(origin.clearance, level)) {
    throw Error(ErrorCode::kClearanceViolation,
                "player " + std::to_string(origin.id.value) + " (" +
                    std::string(to_string(origin.clearance)) + ") cannot author at " +
                    std::string(to_string(level)));
  }
  Document doc(DocumentId{origin.id, origin.next_document++}, std::move(content), level,
               std::move(need_to_know));
  origin.info.add_created(CreatedItem{doc, sign(doc, origin.key)});
  return doc;
}

}  // namespace curio
