#include "curio/behavior.hpp"

#include <array>
#include <utility>

namespace curio {

namespace {

constexpr std::array<std::pair<BehaviorTag, std::string_view>, 4> kTags = {{
    {BehaviorTag::kLoyal, "Loyal"},
    {BehaviorTag::kCuriousOvert, "CuriousOvert"},
    {BehaviorTag::kCuriousConcealing, "CuriousConcealing"},
    {BehaviorTag::kTraitorColluding, "TraitorColluding"},
}};

constexpr std::array<std::pair<ConcealPolicy, std::string_view>, 2> kPolicies = {{
    {ConcealPolicy::kOutOfNeedToKnow, "out_of_need_to_know"},
    {ConcealPolicy::kAllTransferred, "all_transferred"},
}};

}  // namespace

std::string_view to_string(BehaviorTag tag) {
  for (const auto& [t, name] : kTags) {
    if (t == tag) return name;
  }
  return "Unknown";
}

std::optional<BehaviorTag> parse_behavior_tag(std::string_view name) {
  for (const auto& [t, n] : kTags) {
    if (n == name) return t;
  }
  return std::nullopt;
}

std::string_view to_string(ConcealPolicy policy) {
  for (const auto& [p, name] : kPolicies) {
    if (p == policy) return name;
  }
  return "unknown";
}

std::optional<ConcealPolicy> parse_conceal_policy(std::string_view name) {
  for (const auto& [p, n] : kPolicies) {
    if (n == name) return p;
  }
  return std::nullopt;
}

}  // namespace curio
