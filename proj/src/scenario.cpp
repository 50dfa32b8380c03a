#include "curio/scenario.hpp"

#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "curio/error.hpp"

namespace curio {

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::kInvalidScenario, field + ": " + why, field);
}

std::string at(std::string_view base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

std::string dot(std::string_view base, std::string_view key) {
  return base.empty() ? std::string(key) : std::string(base) + "." + std::string(key);
}

const Json* find(const Json& obj, std::string_view key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::uint64_t as_u64(const Json& j, const std::string& field) {
  if (!j.is_number_unsigned()) invalid(field, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::uint32_t as_u32(const Json& j, const std::string& field) {
  const std::uint64_t v = as_u64(j, field);
  if (v > 0xffffffffULL) invalid(field, "out of range");
  return static_cast<std::uint32_t>(v);
}

std::string as_string(const Json& j, const std::string& field) {
  if (!j.is_string()) invalid(field, "expected a string");
  return j.get<std::string>();
}

ClearanceLevel as_level(const Json& j, const std::string& field) {
  auto level = parse_clearance(as_string(j, field));
  if (!level) invalid(field, "unknown clearance level");
  return *level;
}

const Json& as_array(const Json& j, const std::string& field) {
  if (!j.is_array()) invalid(field, "expected an array");
  return j;
}

std::vector<PlayerId> as_ids(const Json& j, const std::string& field) {
  std::vector<PlayerId> out;
  const Json& arr = as_array(j, field);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(PlayerId{as_u32(arr[i], at(field, i))});
  return out;
}

const Json& required(const Json& obj, std::string_view key, std::string_view base) {
  const Json* v = find(obj, key);
  if (v == nullptr) invalid(dot(base, key), "missing required field");
  return *v;
}

BehaviorKind parse_behavior(const Json& j, const std::string& base) {
  reject_unknown_fields(j, {"tag", "request_rate", "conceal", "partners"}, base);
  BehaviorKind b;
  const std::string tag_field = dot(base, "tag");
  auto tag = parse_behavior_tag(as_string(required(j, "tag", base), tag_field));
  if (!tag) invalid(tag_field, "unknown behavior tag");
  b.tag = *tag;
  if (const Json* v = find(j, "request_rate")) b.request_rate = as_u32(*v, dot(base, "request_rate"));
  if (const Json* v = find(j, "conceal")) {
    auto policy = parse_conceal_policy(as_string(*v, dot(base, "conceal")));
    if (!policy) invalid(dot(base, "conceal"), "unknown concealment policy");
    b.conceal = *policy;
  }
  if (const Json* v = find(j, "partners")) b.partners = as_ids(*v, dot(base, "partners"));
  return b;
}

TrustPolicy parse_trust(const Json& j, const std::string& base) {
  reject_unknown_fields(j, {"grant_probability", "verify_need_to_know"}, base);
  TrustPolicy t;
  if (const Json* v = find(j, "grant_probability")) {
    if (!v->is_number()) invalid(dot(base, "grant_probability"), "expected a number");
    t.grant_probability = v->get<double>();
  }
  if (const Json* v = find(j, "verify_need_to_know")) {
    if (!v->is_boolean()) invalid(dot(base, "verify_need_to_know"), "expected a boolean");
    t.verify_need_to_know = v->get<bool>();
  }
  return t;
}

}  // namespace

Adjacency default_topology(const std::vector<PlayerSpec>& players) {
  Adjacency adj(players.size());
  std::map<ClearanceLevel, std::vector<PlayerId>> by_level;
  for (std::uint32_t i = 0; i < players.size(); ++i) by_level[players[i].clearance].push_back(PlayerId{i});

  auto link = [&](PlayerId a, PlayerId b) {
    adj[a.value].push_back(b);
    adj[b.value].push_back(a);
  };
  const std::vector<PlayerId>* previous = nullptr;
  for (const auto& [level, members] : by_level) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) link(members[i], members[j]);
    }
    if (previous != nullptr) link(previous->front(), members.front());
    previous = &members;
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

Adjacency effective_topology(const Scenario& scenario) {
  if (!scenario.topology) return default_topology(scenario.players);
  const std::size_t n = scenario.players.size();
  std::vector<std::set<PlayerId>> sets(n);
  for (std::size_t i = 0; i < scenario.topology->size() && i < n; ++i) {
    for (PlayerId q : (*scenario.topology)[i]) {
      if (q.value >= n || q.value == i) continue;
      sets[i].insert(q);
      sets[q.value].insert(PlayerId{static_cast<std::uint32_t>(i)});
    }
  }
  Adjacency adj(n);
  for (std::size_t i = 0; i < n; ++i) adj[i].assign(sets[i].begin(), sets[i].end());
  return adj;
}

void validate(const Scenario& s) {
  const std::size_t n = s.players.size();
  if (n < 2) invalid("players", "at least two players are required");
  if (s.check_every < 1) invalid("check_every", "must be at least 1");
  if (s.rounds < 1) invalid("rounds", "must be at least 1");

  for (std::size_t i = 0; i < n; ++i) {
    const PlayerSpec& p = s.players[i];
    const std::string base = at("players", i);
    if (!(p.trust.grant_probability >= 0.0 && p.trust.grant_probability <= 1.0)) {
      invalid(base + ".trust.grant_probability", "must lie in [0, 1]");
    }
    for (std::size_t k = 0; k < p.behavior.partners.size(); ++k) {
      const PlayerId q = p.behavior.partners[k];
      const std::string field = at(base + ".behavior.partners", k);
      if (q.value >= n) invalid(field, "unknown player " + std::to_string(q.value));
      if (q.value == i) invalid(field, "a player cannot partner with itself");
    }
    if (!p.behavior.partners.empty() && p.behavior.tag != BehaviorTag::kTraitorColluding) {
      invalid(base + ".behavior.partners", "only TraitorColluding players take partners");
    }
  }

  if (s.topology) {
    if (s.topology->size() != n) invalid("topology", "needs one adjacency row per player");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < (*s.topology)[i].size(); ++k) {
        const PlayerId q = (*s.topology)[i][k];
        if (q.value >= n) invalid(at(at("topology", i), k), "unknown player " + std::to_string(q.value));
        if (q.value == i) invalid(at(at("topology", i), k), "self loop");
      }
    }
  }
  const Adjacency adj = effective_topology(s);
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (PlayerId v : adj[u]) {
      if (!seen[v.value]) {
        seen[v.value] = true;
        ++reached;
        frontier.push(v.value);
      }
    }
  }
  if (reached != n) invalid("topology", "graph is not connected");

  for (std::size_t i = 0; i < s.authoring_schedule.size(); ++i) {
    const AuthoringEntry& e = s.authoring_schedule[i];
    const std::string base = at("authoring_schedule", i);
    if (e.round < 1 || e.round > s.rounds) invalid(base + ".round", "must lie in [1, rounds]");
    if (e.player.value >= n) invalid(base + ".player", "unknown player");
    if (!dominates(s.players[e.player.value].clearance, e.level)) {
      invalid(base + ".level", "author clearance does not dominate the document level");
    }
    for (PlayerId q : e.need_to_know) {
      if (q.value >= n) invalid(base + ".need_to_know", "unknown player " + std::to_string(q.value));
    }
  }
}

Json scenario_to_json(const Scenario& s) {
  Json players = Json::array();
  for (const auto& p : s.players) {
    players.push_back(Json{
        {"clearance", p.clearance},
        {"behavior",
         Json{{"tag", std::string(to_string(p.behavior.tag))},
              {"request_rate", p.behavior.request_rate},
              {"conceal", std::string(to_string(p.behavior.conceal))},
              {"partners", p.behavior.partners}}},
        {"trust", Json{{"grant_probability", p.trust.grant_probability},
                       {"verify_need_to_know", p.trust.verify_need_to_know}}},
    });
  }
  Json schedule = Json::array();
  for (const auto& e : s.authoring_schedule) {
    Json entry{{"round", e.round}, {"player", e.player}, {"level", e.level}, {"need_to_know", e.need_to_know}};
    if (e.content) entry["content"] = *e.content;
    schedule.push_back(std::move(entry));
  }
  Json out{{"players", std::move(players)},
           {"rounds", s.rounds},
           {"check_every", s.check_every},
           {"seed", s.seed},
           {"assumed_m", s.assumed_m},
           {"authoring_schedule", std::move(schedule)}};
  if (s.topology) out["topology"] = *s.topology;
  return out;
}

Scenario scenario_from_json(const Json& j) {
  reject_unknown_fields(j, {"players", "topology", "rounds", "check_every", "seed", "assumed_m",
                            "authoring_schedule"},
                        "");
  Scenario s;
  const Json& players = as_array(required(j, "players", ""), "players");
  for (std::size_t i = 0; i < players.size(); ++i) {
    const std::string base = at("players", i);
    reject_unknown_fields(players[i], {"clearance", "behavior", "trust"}, base);
    PlayerSpec p;
    p.clearance = as_level(required(players[i], "clearance", base), base + ".clearance");
    if (const Json* b = find(players[i], "behavior")) p.behavior = parse_behavior(*b, base + ".behavior");
    if (const Json* t = find(players[i], "trust")) p.trust = parse_trust(*t, base + ".trust");
    s.players.push_back(std::move(p));
  }
  if (const Json* t = find(j, "topology")) {
    const Json& rows = as_array(*t, "topology");
    Adjacency adj;
    for (std::size_t i = 0; i < rows.size(); ++i) adj.push_back(as_ids(rows[i], at("topology", i)));
    s.topology = std::move(adj);
  }
  if (const Json* v = find(j, "rounds")) s.rounds = as_u32(*v, "rounds");
  if (const Json* v = find(j, "check_every")) s.check_every = as_u32(*v, "check_every");
  if (const Json* v = find(j, "seed")) s.seed = as_u64(*v, "seed");
  if (const Json* v = find(j, "assumed_m")) s.assumed_m = as_u32(*v, "assumed_m");
  if (const Json* sched = find(j, "authoring_schedule")) {
    const Json& rows = as_array(*sched, "authoring_schedule");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string base = at("authoring_schedule", i);
      reject_unknown_fields(rows[i], {"round", "player", "level", "need_to_know", "content"}, base);
      AuthoringEntry e;
      e.round = as_u32(required(rows[i], "round", base), base + ".round");
      e.player = PlayerId{as_u32(required(rows[i], "player", base), base + ".player")};
      e.level = as_level(required(rows[i], "level", base), base + ".level");
      if (const Json* ntk = find(rows[i], "need_to_know")) {
        for (PlayerId q : as_ids(*ntk, base + ".need_to_know")) e.need_to_know.insert(q);
      }
      if (const Json* c = find(rows[i], "content")) e.content = as_string(*c, base + ".content");
      s.authoring_schedule.push_back(std::move(e));
    }
  }
  validate(s);
  return s;
}

Scenario parse_scenario(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what(),
                "line " + std::to_string(line));
  }
  return scenario_from_json(j);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace curio
