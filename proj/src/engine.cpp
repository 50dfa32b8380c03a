#include "curio/engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <variant>

#include "curio/adversary.hpp"
#include "curio/error.hpp"

namespace curio {

World make_world(const Scenario& scenario) {
  World world;
  world.seed = scenario.seed;
  for (std::uint32_t i = 0; i < scenario.players.size(); ++i) {
    const PlayerSpec& spec = scenario.players[i];
    Player p;
    p.id = PlayerId{i};
    p.clearance = spec.clearance;
    p.behavior = spec.behavior;
    p.trust = spec.trust;
    p.key = derive_key(scenario.seed, p.id);
    world.players.push_back(std::move(p));
  }
  return world;
}

namespace {

class Simulation {
 public:
  Simulation(const Scenario& scenario, const RunOptions& options)
      : scenario_(scenario),
        options_(options),
        world_(make_world(scenario)),
        topology_(effective_topology(scenario)),
        pending_(scenario.players.size()),
        first_illicit_(scenario.players.size()) {
    for (const auto& p : world_.players) clearances_.push_back(p.clearance);
    for (const auto& e : scenario.authoring_schedule) schedule_[{e.round, e.player}].push_back(e);
    report_.seed = scenario.seed;
    report_.scenario = scenario;
  }

  Report run() {
    for (std::uint32_t round = 1; round <= scenario_.rounds; ++round) {
      for (auto& p : world_.players) move(p.id, round);
      if (round % scenario_.check_every == 0) check(round);
    }
    finish();
    return std::move(report_);
  }

 private:
  void move(PlayerId id, std::uint32_t round) {
    const Player& self = world_.player(id);
    Observation obs;
    obs.round = round;
    obs.seed = scenario_.seed;
    obs.catalogue = &world_.catalogue;
    obs.clearances = clearances_;
    if (auto it = schedule_.find({round, id}); it != schedule_.end()) obs.scheduled = it->second;
    obs.observed = std::exchange(pending_[id.value], {});
    if (self.behavior.tag == BehaviorTag::kTraitorColluding) {
      for (PlayerId partner : self.behavior.partners) {
        obs.partner_holdings.emplace_back(partner, holdings_of(world_.player(partner)));
      }
    }

    for (auto& action : step(self, obs)) {
      std::visit([&](auto& a) { execute(id, round, a); }, action);
    }
  }

  static std::vector<DocumentId> holdings_of(const Player& p) {
    std::set<DocumentId> ids;
    for (const auto& [id, item] : p.info.created()) ids.insert(id);
    for (const auto& [sig, item] : p.info.transferred()) ids.insert(sig.doc_id);
    return {ids.begin(), ids.end()};
  }

  void execute(PlayerId id, std::uint32_t round, AuthorAction& a) {
    Player& p = world_.player(id);
    const Document doc = new_document(p, std::move(a.content), a.level, std::move(a.need_to_know));
    world_.catalogue.add(meta_of(doc));
    report_.catalogue.push_back(CatalogueRecord{round, meta_of(doc)});
    report_.events.push_back(Event{round, EventKind::kAuthor, id, id, doc.id(),
                                   p.info.created().at(doc.id()).self_signature});
  }

  void execute(PlayerId id, std::uint32_t round, ShareAction& a) {
    const TransferRequest req = make_request(world_, id, a.to, a.doc, make_pretext(a.doc, "need-to-know"));
    deliver(req, round);
    world_.player(id).memory.shared.insert({a.doc, a.to});
  }

  void execute(PlayerId id, std::uint32_t round, RequestAction& a) {
    Player& requester = world_.player(id);
    const DocumentMeta* meta = world_.catalogue.find(a.doc);
    if (meta == nullptr || a.target == id) return;
    ++requester.memory.attempts[a.doc];
    const bool granted = answer_request(world_.player(a.target), id, requester.clearance, *meta, round,
                                        scenario_.seed);
    if (!granted) {
      ++world_.player(id).memory.denials[a.doc];
      report_.events.push_back(Event{round, EventKind::kDenied, id, a.target, a.doc, std::nullopt});
      return;
    }
    report_.events.push_back(Event{round, EventKind::kRequest, id, a.target, a.doc, std::nullopt});
    deliver(make_request(world_, a.target, id, a.doc, a.pretext), round);
  }

  void execute(PlayerId id, std::uint32_t round, ExchangeAction& a) {
    Player& self = world_.player(id);
    const Document* held = self.info.full_document(a.doc);
    if (held == nullptr || a.partner == id) return;
    const Document doc = *held;
    const Signature sig = sign(doc, self.key);
    Player& partner = world_.player(a.partner);
    partner.info.add_transferred(partner.id, TransferredItem{sig, doc, Channel::kCollusion, id, round});
    self.memory.exchanged.insert({a.doc, a.partner});
    report_.events.push_back(Event{round, EventKind::kExchange, id, a.partner, a.doc, sig});
    note_acquisition(partner.id, a.doc, round);
  }

  void execute(PlayerId id, std::uint32_t, StoreAction& a) {
    world_.player(id).message_store.push_back(std::move(a.envelope));
  }

  void deliver(const TransferRequest& req, std::uint32_t round) {
    const Delivery d = transfer(world_, req, round);
    report_.events.push_back(Event{round, EventKind::kTransfer, req.from, req.to, req.doc, d.sig});
    note_acquisition(req.to, req.doc, round);

    std::set<PlayerId> watchers;
    for (PlayerId end : {req.from, req.to}) {
      for (PlayerId n : topology_[end.value]) {
        if (n != req.from && n != req.to) watchers.insert(n);
      }
    }
    for (PlayerId w : watchers) pending_[w.value].push_back(d.envelope);
  }

  void note_acquisition(PlayerId holder, const DocumentId& doc, std::uint32_t round) {
    const DocumentMeta* meta = world_.catalogue.find(doc);
    if (meta == nullptr || meta->need_to_know.contains(holder)) return;
    auto& first = first_illicit_[holder.value];
    if (!first || round < *first) first = round;
  }

  void check(std::uint32_t round) {
    SweepResult sweep;
    if (options_.zero_inter_contents) {
      World blinded = world_;
      for (const DocumentId& id : world_.inter_documents) {
        for (auto& p : blinded.players) {
          if (const Document* doc = p.info.full_document(id)) {
            p.info.replace_content(id, Bytes(doc->content().size(), 0));
          }
        }
      }
      sweep = theorem1_sweep(blinded, round, scenario_.assumed_m);
    } else {
      sweep = theorem1_sweep(world_, round, scenario_.assumed_m);
    }

    CheckRecord record;
    record.round = round;
    record.disclosures = std::move(sweep.disclosures);
    record.verdicts = std::move(sweep.computed);
    if (sweep.ratified.agreed != record.verdicts) record.ratified = std::move(sweep.ratified.agreed);
    record.ba = BASummary{sweep.ratified.agreement, sweep.ratified.messages, sweep.ratified.traitors,
                          sweep.ratified.bound_exceeded};
    record.loyal_majority = sweep.loyal_majority;
    for (const auto& p : world_.players) record.truth.push_back(truth_of(p));
    report_.checks.push_back(std::move(record));
  }

  PlayerTruth truth_of(const Player& p) const {
    PlayerTruth t;
    t.player = p.id;
    t.tag = p.behavior.tag;
    for (const auto& [id, item] : p.info.created()) t.created.push_back(id);
    std::set<DocumentId> illicit;
    for (const auto& [sig, item] : p.info.transferred()) {
      t.transferred.push_back(Holding{sig, item.channel, item.document.has_value(), item.from, item.round});
      const DocumentMeta* meta = world_.catalogue.find(sig.doc_id);
      if (meta != nullptr && !meta->need_to_know.contains(p.id)) illicit.insert(sig.doc_id);
    }
    t.out_of_need_to_know.assign(illicit.begin(), illicit.end());
    return t;
  }

  void finish() {
    report_.registry = world_.registry.entries();
    for (const auto& p : world_.players) {
      GroundTruth::Entry e;
      e.player = p.id;
      e.tag = p.behavior.tag;
      e.first_out_of_need_to_know = first_illicit_[p.id.value];
      e.out_of_need_to_know_held = static_cast<std::uint32_t>(truth_of(p).out_of_need_to_know.size());
      report_.ground_truth.players.push_back(e);
    }
    Metrics m = metrics_from(report_.checks, report_.ground_truth);
    for (const auto& c : report_.checks) {
      m.ba_messages += c.ba.messages;
      m.traitor_bound_exceeded = m.traitor_bound_exceeded || c.ba.bound_exceeded;
    }
    for (const auto& e : report_.events) {
      if (e.kind == EventKind::kTransfer) ++m.transfers;
      if (e.kind == EventKind::kExchange) ++m.exchanges;
      if (e.kind == EventKind::kDenied) ++m.denied_requests;
    }
    report_.metrics = std::move(m);
  }

  const Scenario& scenario_;
  RunOptions options_;
  World world_;
  Adjacency topology_;
  std::vector<ClearanceLevel> clearances_;
  std::map<std::pair<std::uint32_t, PlayerId>, std::vector<AuthoringEntry>> schedule_;
  std::vector<std::vector<SealedEnvelope>> pending_;
  std::vector<std::optional<std::uint32_t>> first_illicit_;
  Report report_;
};

}  // namespace

Report run(const Scenario& scenario, const RunOptions& options) {
  validate(scenario);
  return Simulation(scenario, options).run();
}

Metrics metrics_from(const std::vector<CheckRecord>& checks, const GroundTruth& truth) {
  Metrics m;
  for (const auto& entry : truth.players) {
    if (entry.tag == BehaviorTag::kLoyal) {
      const bool flagged = std::any_of(checks.begin(), checks.end(), [&](const CheckRecord& c) {
        return entry.player.value < c.agreed().size() && c.agreed()[entry.player.value].curious();
      });
      if (flagged) ++m.false_positives;
      continue;
    }
    if (!entry.first_out_of_need_to_know) continue;
    const std::uint32_t acquired = *entry.first_out_of_need_to_know;
    const bool evaluable = std::any_of(checks.begin(), checks.end(),
                                       [&](const CheckRecord& c) { return c.round >= acquired; });
    if (!evaluable) continue;
    m.evaluated.push_back(entry.player);
    std::optional<std::uint32_t> detected;
    for (const auto& c : checks) {
      if (c.round < acquired || entry.player.value >= c.agreed().size()) continue;
      if (c.agreed()[entry.player.value].curious()) {
        detected = c.round;
        break;
      }
    }
    if (detected) {
      ++m.true_positives;
      m.rounds_to_detection[entry.player] = *detected - acquired;
    } else {
      ++m.false_negatives;
    }
  }
  return m;
}

}  // namespace curio
