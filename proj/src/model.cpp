#include "curio/model.hpp"

#include <charconv>

namespace curio {

std::string_view to_string(ClearanceLevel level) {
  switch (level) {
    case ClearanceLevel::kConfidential: return "Confidential";
    case ClearanceLevel::kSecret:       return "Secret";
    case ClearanceLevel::kTopSecret:    return "TopSecret";
  }
  return "Unknown";
}

std::optional<ClearanceLevel> parse_clearance(std::string_view name) {
  for (auto level : kAllLevels) {
    if (to_string(level) == name) return level;
  }
  return std::nullopt;
}

std::string DocumentId::str() const {
  return "d" + std::to_string(origin.value) + "." + std::to_string(counter);
}

std::optional<DocumentId> DocumentId::parse(std::string_view text) {
  if (text.size() < 4 || text.front() != 'd') return std::nullopt;
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  DocumentId id;
  const char* first = text.data() + 1;
  const char* mid = text.data() + dot;
  const char* last = text.data() + text.size();
  auto r1 = std::from_chars(first, mid, id.origin.value);
  if (r1.ec != std::errc{} || r1.ptr != mid || first == mid) return std::nullopt;
  auto r2 = std::from_chars(mid + 1, last, id.counter);
  if (r2.ec != std::errc{} || r2.ptr != last || mid + 1 == last) return std::nullopt;
  return id;
}

Document::Document(DocumentId id, Bytes content, ClearanceLevel level, PlayerSet need_to_know)
    : id_(id), content_(std::move(content)), level_(level), need_to_know_(std::move(need_to_know)) {
  need_to_know_.insert(id_.origin);
}

Document Document::with_content(Bytes content) const {
  return Document(id_, std::move(content), level_, need_to_know_);
}

DocumentMeta meta_of(const Document& doc) {
  return DocumentMeta{doc.id(), doc.level(), doc.need_to_know()};
}

}  // namespace curio
