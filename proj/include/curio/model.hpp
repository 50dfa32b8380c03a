#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace curio {

using Bytes = std::vector<std::uint8_t>;

// Confidential < Secret < TopSecret. Information flows only toward
// equal-or-higher levels.
enum class ClearanceLevel : std::uint8_t {
  kConfidential = 0,
  kSecret = 1,
  kTopSecret = 2,
};

inline constexpr std::array<ClearanceLevel, 3> kAllLevels = {
    ClearanceLevel::kConfidential, ClearanceLevel::kSecret, ClearanceLevel::kTopSecret};

constexpr bool dominates(ClearanceLevel a, ClearanceLevel b) noexcept {
  return static_cast<std::uint8_t>(a) >= static_cast<std::uint8_t>(b);
}

std::string_view to_string(ClearanceLevel level);
std::optional<ClearanceLevel> parse_clearance(std::string_view name);

struct PlayerId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(PlayerId, PlayerId) = default;
};

using PlayerSet = std::set<PlayerId>;

// Unique within a run: the authoring player plus that player's running counter.
struct DocumentId {
  PlayerId origin;
  std::uint32_t counter = 0;

  friend constexpr auto operator<=>(const DocumentId&, const DocumentId&) = default;

  // "d<origin>.<counter>"
  std::string str() const;
  static std::optional<DocumentId> parse(std::string_view text);
};

// Immutable once built. Replacing content yields a new value.
class Document {
 public:
  Document(DocumentId id, Bytes content, ClearanceLevel level, PlayerSet need_to_know);

  const DocumentId& id() const noexcept { return id_; }
  const Bytes& content() const noexcept { return content_; }
  ClearanceLevel level() const noexcept { return level_; }
  PlayerId origin() const noexcept { return id_.origin; }
  const PlayerSet& need_to_know() const noexcept { return need_to_know_; }

  bool needs_to_know(PlayerId p) const { return need_to_know_.contains(p); }

  Document with_content(Bytes content) const;

  friend bool operator==(const Document&, const Document&) = default;

 private:
  DocumentId id_;
  Bytes content_;
  ClearanceLevel level_;
  PlayerSet need_to_know_;
};

// What the grand designer knows about a document without ever seeing its
// content.
struct DocumentMeta {
  DocumentId id;
  ClearanceLevel level = ClearanceLevel::kConfidential;
  PlayerSet need_to_know;

  PlayerId origin() const noexcept { return id.origin; }
  friend bool operator==(const DocumentMeta&, const DocumentMeta&) = default;
};

DocumentMeta meta_of(const Document& doc);

}  // namespace curio
