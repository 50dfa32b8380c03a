#include "curio/report.hpp"

#include <array>
#include <utility>

#include "curio/error.hpp"
#include "curio/json_codec.hpp"

namespace curio {

namespace {

constexpr std::array<std::pair<EventKind, std::string_view>, 5> kEventKinds = {{
    {EventKind::kAuthor, "Author"},
    {EventKind::kTransfer, "Transfer"},
    {EventKind::kExchange, "Exchange"},
    {EventKind::kRequest, "Request"},
    {EventKind::kDenied, "Denied"},
}};

std::optional<Channel> parse_channel(std::string_view name) {
  for (auto c : {Channel::kInter, Channel::kIntra, Channel::kCollusion}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

template <typename T, typename Parse>
T enum_at(const Json& j, const char* key, Parse parse) {
  const std::string name = j.at(key).get<std::string>();
  auto v = parse(name);
  if (!v) throw Error(ErrorCode::kParseError, std::string("unknown ") + key + " '" + name + "'");
  return *v;
}

Json sig_or_null(const std::optional<Signature>& sig) { return sig ? Json(*sig) : Json(nullptr); }

Json holding_json(const Holding& h) {
  return Json{{"sig", h.sig},
              {"channel", std::string(to_string(h.channel))},
              {"full", h.full},
              {"from", h.from},
              {"round", h.round}};
}

Holding holding_from(const Json& j) {
  Holding h;
  h.sig = j.at("sig").get<Signature>();
  h.channel = enum_at<Channel>(j, "channel", parse_channel);
  h.full = j.at("full").get<bool>();
  h.from = j.at("from").get<PlayerId>();
  h.round = j.at("round").get<std::uint32_t>();
  return h;
}

Json truth_json(const PlayerTruth& t) {
  Json transferred = Json::array();
  for (const auto& h : t.transferred) transferred.push_back(holding_json(h));
  return Json{{"player", t.player},
              {"tag", std::string(to_string(t.tag))},
              {"created", t.created},
              {"transferred", std::move(transferred)},
              {"out_of_need_to_know", t.out_of_need_to_know}};
}

PlayerTruth truth_from(const Json& j) {
  PlayerTruth t;
  t.player = j.at("player").get<PlayerId>();
  t.tag = enum_at<BehaviorTag>(j, "tag", parse_behavior_tag);
  t.created = j.at("created").get<std::vector<DocumentId>>();
  for (const auto& h : j.at("transferred")) t.transferred.push_back(holding_from(h));
  t.out_of_need_to_know = j.at("out_of_need_to_know").get<std::vector<DocumentId>>();
  return t;
}

Json check_json(const CheckRecord& c) {
  Json truth = Json::array();
  for (const auto& t : c.truth) truth.push_back(truth_json(t));
  return Json{{"type", "check"},
              {"round", c.round},
              {"disclosures", c.disclosures},
              {"verdicts", c.verdicts},
              {"ratified", c.ratified ? Json(*c.ratified) : Json(nullptr)},
              {"ba", Json{{"agreement", c.ba.agreement},
                          {"messages", c.ba.messages},
                          {"traitors", c.ba.traitors},
                          {"bound_exceeded", c.ba.bound_exceeded}}},
              {"loyal_majority", c.loyal_majority},
              {"truth", std::move(truth)}};
}

CheckRecord check_from(const Json& j) {
  CheckRecord c;
  c.round = j.at("round").get<std::uint32_t>();
  c.disclosures = j.at("disclosures").get<std::vector<Disclosure>>();
  c.verdicts = j.at("verdicts").get<VerdictVector>();
  if (!j.at("ratified").is_null()) c.ratified = j.at("ratified").get<VerdictVector>();
  const Json& ba = j.at("ba");
  c.ba.agreement = ba.at("agreement").get<bool>();
  c.ba.messages = ba.at("messages").get<std::uint64_t>();
  c.ba.traitors = ba.at("traitors").get<std::uint32_t>();
  c.ba.bound_exceeded = ba.at("bound_exceeded").get<bool>();
  c.loyal_majority = j.at("loyal_majority").get<bool>();
  for (const auto& t : j.at("truth")) c.truth.push_back(truth_from(t));
  return c;
}

Json ground_truth_json(const GroundTruth& g) {
  Json players = Json::array();
  for (const auto& e : g.players) {
    Json row{{"player", e.player},
             {"tag", std::string(to_string(e.tag))},
             {"out_of_need_to_know_held", e.out_of_need_to_know_held}};
    row["first_out_of_need_to_know"] =
        e.first_out_of_need_to_know ? Json(*e.first_out_of_need_to_know) : Json(nullptr);
    players.push_back(std::move(row));
  }
  return Json{{"type", "ground_truth"}, {"players", std::move(players)}};
}

GroundTruth ground_truth_from(const Json& j) {
  GroundTruth g;
  for (const auto& row : j.at("players")) {
    GroundTruth::Entry e;
    e.player = row.at("player").get<PlayerId>();
    e.tag = enum_at<BehaviorTag>(row, "tag", parse_behavior_tag);
    e.out_of_need_to_know_held = row.at("out_of_need_to_know_held").get<std::uint32_t>();
    if (!row.at("first_out_of_need_to_know").is_null()) {
      e.first_out_of_need_to_know = row.at("first_out_of_need_to_know").get<std::uint32_t>();
    }
    g.players.push_back(e);
  }
  return g;
}

Metrics metrics_from_json(const Json& j) {
  Metrics m;
  m.true_positives = j.at("true_positives").get<std::uint32_t>();
  m.false_positives = j.at("false_positives").get<std::uint32_t>();
  m.false_negatives = j.at("false_negatives").get<std::uint32_t>();
  m.evaluated = j.at("evaluated").get<std::vector<PlayerId>>();
  for (const auto& row : j.at("rounds_to_detection")) {
    m.rounds_to_detection.emplace(row.at("player").get<PlayerId>(), row.at("rounds").get<std::uint32_t>());
  }
  m.ba_messages = j.at("ba_messages").get<std::uint64_t>();
  m.transfers = j.at("transfers").get<std::uint32_t>();
  m.exchanges = j.at("exchanges").get<std::uint32_t>();
  m.denied_requests = j.at("denied_requests").get<std::uint32_t>();
  m.traitor_bound_exceeded = j.at("traitor_bound_exceeded").get<bool>();
  return m;
}

}  // namespace

std::string_view to_string(EventKind kind) {
  for (const auto& [k, name] : kEventKinds) {
    if (k == kind) return name;
  }
  return "Unknown";
}

std::optional<EventKind> parse_event_kind(std::string_view name) {
  for (const auto& [k, n] : kEventKinds) {
    if (n == name) return k;
  }
  return std::nullopt;
}

Json metrics_to_json(const Metrics& m) {
  Json rtd = Json::array();
  for (const auto& [player, rounds] : m.rounds_to_detection) rtd.push_back(Json{{"player", player}, {"rounds", rounds}});
  return Json{{"type", "metrics"},
              {"true_positives", m.true_positives},
              {"false_positives", m.false_positives},
              {"false_negatives", m.false_negatives},
              {"evaluated", m.evaluated},
              {"rounds_to_detection", std::move(rtd)},
              {"ba_messages", m.ba_messages},
              {"transfers", m.transfers},
              {"exchanges", m.exchanges},
              {"denied_requests", m.denied_requests},
              {"traitor_bound_exceeded", m.traitor_bound_exceeded}};
}

std::string write_report(const Report& r) {
  std::string out;
  auto line = [&out](const Json& j) {
    out += j.dump();
    out += '\n';
  };
  line(Json{{"type", "header"}, {"tool_version", r.tool_version}, {"seed", r.seed},
            {"scenario", scenario_to_json(r.scenario)}});

  std::uint32_t last_round = r.scenario.rounds;
  for (const auto& c : r.catalogue) last_round = std::max(last_round, c.round);
  for (const auto& e : r.events) last_round = std::max(last_round, e.round);
  for (const auto& e : r.registry) last_round = std::max(last_round, e.round);

  std::size_t ci = 0, ei = 0, ri = 0, ki = 0;
  for (std::uint32_t round = 0; round <= last_round; ++round) {
    for (; ci < r.catalogue.size() && r.catalogue[ci].round == round; ++ci) {
      line(Json{{"type", "document"}, {"round", round}, {"meta", r.catalogue[ci].meta}});
    }
    for (; ei < r.events.size() && r.events[ei].round == round; ++ei) {
      const Event& e = r.events[ei];
      line(Json{{"type", "event"},
                {"round", e.round},
                {"kind", std::string(to_string(e.kind))},
                {"from", e.from},
                {"to", e.to},
                {"doc", e.doc},
                {"sig", sig_or_null(e.sig)}});
    }
    for (; ri < r.registry.size() && r.registry[ri].round == round; ++ri) {
      line(Json{{"type", "registry"}, {"index", ri}, {"entry", r.registry[ri]}});
    }
    for (; ki < r.checks.size() && r.checks[ki].round == round; ++ki) line(check_json(r.checks[ki]));
  }
  if (ci != r.catalogue.size() || ei != r.events.size() || ri != r.registry.size() || ki != r.checks.size()) {
    throw Error(ErrorCode::kDecodeError, "report records are not ordered by round");
  }
  if (r.metrics) {
    line(ground_truth_json(r.ground_truth));
    line(metrics_to_json(*r.metrics));
  }
  return out;
}

Report read_report(std::string_view text) {
  Report r;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 1;
    ++line_no;
    if (raw.empty()) continue;
    try {
      const Json j = Json::parse(raw);
      const std::string type = j.at("type").get<std::string>();
      if (!have_header && type != "header") {
        throw Error(ErrorCode::kParseError, "first record must be the header");
      }
      if (type == "header") {
        r.tool_version = j.at("tool_version").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.scenario = scenario_from_json(j.at("scenario"));
        have_header = true;
      } else if (type == "document") {
        r.catalogue.push_back(CatalogueRecord{j.at("round").get<std::uint32_t>(), j.at("meta").get<DocumentMeta>()});
      } else if (type == "event") {
        Event e;
        e.round = j.at("round").get<std::uint32_t>();
        e.kind = enum_at<EventKind>(j, "kind", parse_event_kind);
        e.from = j.at("from").get<PlayerId>();
        e.to = j.at("to").get<PlayerId>();
        e.doc = j.at("doc").get<DocumentId>();
        if (!j.at("sig").is_null()) e.sig = j.at("sig").get<Signature>();
        r.events.push_back(std::move(e));
      } else if (type == "registry") {
        if (j.at("index").get<std::size_t>() != r.registry.size()) {
          throw Error(ErrorCode::kParseError, "registry index out of sequence");
        }
        r.registry.push_back(j.at("entry").get<RegistryEntry>());
      } else if (type == "check") {
        r.checks.push_back(check_from(j));
      } else if (type == "ground_truth") {
        r.ground_truth = ground_truth_from(j);
      } else if (type == "metrics") {
        r.metrics = metrics_from_json(j);
      } else {
        throw Error(ErrorCode::kParseError, "unknown record type '" + type + "'");
      }
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParseError, "report line " + std::to_string(line_no) + ": " + e.what(),
                  "line " + std::to_string(line_no));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kParseError && e.field().empty()) {
        throw Error(ErrorCode::kParseError, "report line " + std::to_string(line_no) + ": " + e.what(),
                    "line " + std::to_string(line_no));
      }
      throw;
    }
  }
  if (!have_header) throw Error(ErrorCode::kParseError, "empty report");
  return r;
}

std::string verdict_section(const Report& report) {
  std::string out;
  for (const auto& c : report.checks) {
    out += Json{{"round", c.round}, {"verdicts", c.verdicts},
                {"ratified", c.ratified ? Json(*c.ratified) : Json(nullptr)}}.dump();
    out += '\n';
  }
  return out;
}

}  // namespace curio
