#include "curio/verify.hpp"

#include <algorithm>
#include <thread>

#include "curio/engine.hpp"

namespace curio {

std::string Assignment::str() const {
  if (roles.empty()) return "all-loyal";
  std::string out;
  for (const auto& [id, tag] : roles) {
    if (!out.empty()) out += ",";
    out += "p" + std::to_string(id.value) + "=" + std::string(to_string(tag));
  }
  return out;
}

Scenario truncate_scenario(const Scenario& base, std::uint32_t count) {
  if (count >= base.players.size()) return base;
  Scenario s = base;
  s.players.resize(count);
  auto kept = [count](PlayerId p) { return p.value < count; };
  for (auto& p : s.players) std::erase_if(p.behavior.partners, [&](PlayerId q) { return !kept(q); });
  if (s.topology) {
    s.topology->resize(count);
    for (auto& row : *s.topology) std::erase_if(row, [&](PlayerId q) { return !kept(q); });
  }
  std::erase_if(s.authoring_schedule, [&](const AuthoringEntry& e) { return !kept(e.player); });
  for (auto& e : s.authoring_schedule) std::erase_if(e.need_to_know, [&](PlayerId q) { return !kept(q); });
  return s;
}

std::vector<Assignment> enumerate_assignments(std::uint32_t players, std::uint32_t max_curious,
                                              bool include_traitor_pairs) {
  std::vector<Assignment> out;
  const std::uint32_t limit = std::min(max_curious, players);
  for (std::uint32_t k = 0; k <= limit; ++k) {
    if (players - k <= k) break;  // loyal players must outnumber the rest
    // Lexicographic k-subsets of positions via a selection mask.
    std::vector<bool> mask(players, false);
    std::fill(mask.begin(), mask.begin() + k, true);
    do {
      std::vector<PlayerId> chosen;
      for (std::uint32_t i = 0; i < players; ++i) {
        if (mask[i]) chosen.push_back(PlayerId{i});
      }
      for (std::uint32_t kinds = 0; kinds < (1u << k); ++kinds) {
        Assignment a;
        for (std::uint32_t j = 0; j < k; ++j) {
          a.roles.emplace_back(chosen[j], (kinds >> j) & 1 ? BehaviorTag::kCuriousConcealing
                                                           : BehaviorTag::kCuriousOvert);
        }
        out.push_back(std::move(a));
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  if (include_traitor_pairs && players > 4) {
    for (std::uint32_t i = 0; i < players; ++i) {
      for (std::uint32_t j = i + 1; j < players; ++j) {
        out.push_back(Assignment{{{PlayerId{i}, BehaviorTag::kTraitorColluding},
                                  {PlayerId{j}, BehaviorTag::kTraitorColluding}}});
      }
    }
  }
  return out;
}

Scenario apply_assignment(const Scenario& base, const Assignment& assignment) {
  Scenario s = base;
  std::vector<PlayerId> traitors;
  for (const auto& [id, tag] : assignment.roles) {
    if (tag == BehaviorTag::kTraitorColluding) traitors.push_back(id);
  }
  for (const auto& [id, tag] : assignment.roles) {
    BehaviorKind& b = s.players.at(id.value).behavior;
    b.tag = tag;
    b.partners.clear();
    if (tag == BehaviorTag::kTraitorColluding) {
      for (PlayerId t : traitors) {
        if (t != id) b.partners.push_back(t);
      }
    }
  }
  return s;
}

std::vector<Violation> check_properties(const Report& report, const std::string& label) {
  std::vector<Violation> out;
  for (const auto& c : report.checks) {
    if (!c.ba.agreement && !c.ba.bound_exceeded) {
      out.push_back(Violation{label, "agreement", PlayerId{}, c.round, "loyal players hold different verdicts"});
    }
  }
  for (const auto& entry : report.ground_truth.players) {
    if (entry.tag == BehaviorTag::kLoyal) {
      for (const auto& c : report.checks) {
        const Verdict& v = c.agreed().at(entry.player.value);
        if (v.curious()) {
          const std::string why = v.evidence.empty() ? "no evidence given" : v.evidence.front().detail;
          out.push_back(Violation{label, "soundness", entry.player, c.round, "loyal player flagged: " + why});
        }
      }
      continue;
    }
    if (!entry.first_out_of_need_to_know) continue;
    const std::uint32_t acquired = *entry.first_out_of_need_to_know;
    auto first = std::find_if(report.checks.begin(), report.checks.end(),
                              [&](const CheckRecord& c) { return c.round >= acquired; });
    if (first == report.checks.end()) continue;
    if (!first->agreed().at(entry.player.value).curious()) {
      out.push_back(Violation{label, "completeness", entry.player, first->round,
                              std::string(to_string(entry.tag)) + " acquired outside need-to-know at round " +
                                  std::to_string(acquired) + " and was not flagged"});
    }
  }
  return out;
}

PropertyReport exhaustive_verify(const Scenario& base, std::uint32_t max_players, std::uint32_t max_curious,
                                 const VerifyOptions& options) {
  const Scenario trimmed = truncate_scenario(base, std::min<std::uint32_t>(max_players, 10));
  validate(trimmed);
  const auto players = static_cast<std::uint32_t>(trimmed.players.size());
  const std::vector<Assignment> assignments =
      enumerate_assignments(players, max_curious, options.include_traitor_pairs);

  struct Outcome {
    std::vector<Violation> violations;
    std::uint64_t evaluated = 0;
    std::uint64_t flagged = 0;
  };
  std::vector<Outcome> outcomes(assignments.size());

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < assignments.size(); i += stride) {
      const Report report = run(apply_assignment(trimmed, assignments[i]));
      outcomes[i].violations = check_properties(report, assignments[i].str());
      outcomes[i].evaluated = report.metrics->evaluated.size();
      outcomes[i].flagged = report.metrics->true_positives;
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
  }

  PropertyReport out;
  out.players = players;
  out.max_curious = max_curious;
  out.runs = assignments.size();
  for (auto& o : outcomes) {
    out.evaluated_adversaries += o.evaluated;
    out.flagged_adversaries += o.flagged;
    for (auto& v : o.violations) out.violations.push_back(std::move(v));
  }
  return out;
}

Json property_report_to_json(const PropertyReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(Json{{"assignment", v.assignment},
                              {"property", v.property},
                              {"player", v.player},
                              {"round", v.round},
                              {"detail", v.detail}});
  }
  return Json{{"players", r.players},
              {"max_curious", r.max_curious},
              {"runs", r.runs},
              {"evaluated_adversaries", r.evaluated_adversaries},
              {"flagged_adversaries", r.flagged_adversaries},
              {"violations", std::move(violations)}};
}

}  // namespace curio
