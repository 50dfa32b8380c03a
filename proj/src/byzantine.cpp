#include "curio/byzantine.hpp"

#include <algorithm>

#include "curio/error.hpp"

namespace curio {

namespace {

class OralMessages {
 public:
  OralMessages(const TraitorStrategies& traitors, const BAValue& fallback)
      : traitors_(traitors), fallback_(fallback) {}

  // Returns each lieutenant's decision for this (sub)instance.
  std::map<PlayerId, BAValue> run(std::uint32_t m, PlayerId commander,
                                  const std::vector<PlayerId>& lieutenants, const BAValue& value,
                                  const std::vector<PlayerId>& path) {
    const BAMessage incoming{path, value};
    const auto traitor = traitors_.find(commander);

    std::map<PlayerId, BAValue> received;
    for (PlayerId l : lieutenants) {
      received[l] = traitor == traitors_.end() ? value : traitor->second(incoming, l);
      ++messages_;
    }
    if (m == 0) return received;

    std::vector<PlayerId> relay_path = path;
    relay_path.push_back(commander);

    // votes[j]: the commander's value as j received it, then what j concluded
    // each other lieutenant l had received, via OM(m-1) led by l.
    std::map<PlayerId, std::vector<BAValue>> votes;
    for (PlayerId l : lieutenants) votes[l].push_back(received[l]);
    for (PlayerId l : lieutenants) {
      std::vector<PlayerId> others;
      others.reserve(lieutenants.size() - 1);
      for (PlayerId j : lieutenants) {
        if (j != l) others.push_back(j);
      }
      auto sub = run(m - 1, l, others, received[l], relay_path);
      for (auto& [j, v] : sub) votes[j].push_back(std::move(v));
    }

    std::map<PlayerId, BAValue> decided;
    for (PlayerId l : lieutenants) decided[l] = majority(votes[l], fallback_);
    return decided;
  }

  std::uint64_t messages() const { return messages_; }

 private:
  const TraitorStrategies& traitors_;
  const BAValue& fallback_;
  std::uint64_t messages_ = 0;
};

}  // namespace

BAValue majority(std::span<const BAValue> values, const BAValue& fallback) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "majority of an empty multiset");
  // Boyer-Moore candidate, then confirm.
  const BAValue* candidate = nullptr;
  std::size_t count = 0;
  for (const auto& v : values) {
    if (count == 0) {
      candidate = &v;
      count = 1;
    } else if (v == *candidate) {
      ++count;
    } else {
      --count;
    }
  }
  const auto support = static_cast<std::size_t>(std::count(values.begin(), values.end(), *candidate));
  return 2 * support > values.size() ? *candidate : fallback;
}

BAResult om_broadcast(const BAConfig& config, const BAValue& value,
                      const TraitorStrategies& traitors, const BAValue& fallback) {
  std::vector<PlayerId> lieutenants;
  for (std::uint32_t i = 0; i < config.n; ++i) {
    if (PlayerId{i} != config.commander) lieutenants.push_back(PlayerId{i});
  }
  OralMessages om(traitors, fallback);
  BAResult result;
  if (!lieutenants.empty()) {
    result.decisions = om.run(config.m, config.commander, lieutenants, value, {});
  }
  result.decisions[config.commander] = value;
  result.messages = om.messages();
  return result;
}

bool loyal_agree(const BAResult& result, const TraitorStrategies& traitors) {
  const BAValue* first = nullptr;
  for (const auto& [id, v] : result.decisions) {
    if (traitors.contains(id)) continue;
    if (first == nullptr) {
      first = &v;
    } else if (v != *first) {
      return false;
    }
  }
  return true;
}

RatifiedVerdicts ratify_verdicts(const VerdictVector& verdicts, const std::vector<Player>& players,
                                 std::uint32_t assumed_m, const TraitorStrategies& strategies) {
  const auto count = static_cast<std::uint32_t>(players.size());
  const std::uint32_t round = verdicts.empty() ? 0 : verdicts.front().round;
  const BAValue fallback = encode_verdicts(all_loyal_vector(count, round));

  TraitorStrategies traitors = strategies;
  for (const auto& p : players) {
    if (p.behavior.tag == BehaviorTag::kTraitorColluding && !traitors.contains(p.id)) {
      traitors.emplace(p.id, [fallback](const BAMessage&, PlayerId) { return fallback; });
    }
  }

  const BAConfig config{count + 1, assumed_m, PlayerId{count}};
  const BAResult result = om_broadcast(config, encode_verdicts(verdicts), traitors, fallback);

  RatifiedVerdicts out;
  out.messages = result.messages;
  out.traitors = static_cast<std::uint32_t>(traitors.size());
  out.bound_exceeded = out.traitors > assumed_m;
  out.agreement = loyal_agree(result, traitors);
  for (const auto& [id, v] : result.decisions) {
    if (id != config.commander && !traitors.contains(id)) {
      try {
        out.agreed = decode_verdicts(v);
      } catch (const Error&) {
        out.agreement = false;
        out.agreed = decode_verdicts(fallback);
      }
      return out;
    }
  }
  // No loyal lieutenant: only the grand designer's own copy remains.
  out.agreed = verdicts;
  return out;
}

}  // namespace curio
