#include "curio/adversary.hpp"

#include <algorithm>

#include "curio/rng.hpp"

namespace curio {

namespace {

bool can_hold(std::span<const ClearanceLevel> clearances, PlayerId who, ClearanceLevel level) {
  return who.value < clearances.size() && dominates(clearances[who.value], level);
}

// Authoring from the schedule, then distribution of earlier documents to
// their need-to-know members. Every player does this, loyal or not.
void routine_duties(const Player& p, const Observation& obs, std::vector<Action>& out) {
  std::uint32_t index = 0;
  for (const auto& entry : obs.scheduled) {
    Bytes content = entry.content ? Bytes(entry.content->begin(), entry.content->end())
                                  : synthesize_content(obs.seed, p.id, obs.round, index);
    out.emplace_back(AuthorAction{entry.level, entry.need_to_know, std::move(content)});
    ++index;
  }
  for (const auto& [id, item] : p.info.created()) {
    for (PlayerId q : item.doc.need_to_know()) {
      if (q == p.id || p.memory.shared.contains({id, q})) continue;
      if (!can_hold(obs.clearances, q, item.doc.level())) continue;
      out.emplace_back(ShareAction{q, id});
    }
  }
}

void store_observed(const Observation& obs, std::vector<Action>& out) {
  for (const auto& env : obs.observed) out.emplace_back(StoreAction{env});
}

std::uint32_t lookup(const std::map<DocumentId, std::uint32_t>& m, const DocumentId& id) {
  auto it = m.find(id);
  return it == m.end() ? 0 : it->second;
}

// Requests for documents the player may take by clearance but has no need to
// know. Least-tried documents first; each retry goes to the next presumed
// holder (origin, then need-to-know members).
void over_collect(const Player& p, const Observation& obs, std::vector<Action>& out) {
  if (obs.catalogue == nullptr || p.behavior.request_rate == 0) return;

  std::vector<const DocumentMeta*> wanted;
  for (const auto& [id, meta] : obs.catalogue->all()) {
    if (meta.need_to_know.contains(p.id)) continue;
    if (!dominates(p.clearance, meta.level)) continue;
    if (p.info.holds(id)) continue;
    wanted.push_back(&meta);
  }
  std::stable_sort(wanted.begin(), wanted.end(), [&](const DocumentMeta* a, const DocumentMeta* b) {
    return lookup(p.memory.attempts, a->id) < lookup(p.memory.attempts, b->id);
  });

  std::uint32_t issued = 0;
  for (const DocumentMeta* meta : wanted) {
    if (issued == p.behavior.request_rate) break;
    std::vector<PlayerId> holders{meta->origin()};
    for (PlayerId q : meta->need_to_know) {
      if (q != meta->origin()) holders.push_back(q);
    }
    std::erase_if(holders, [&](PlayerId q) { return q == p.id || !can_hold(obs.clearances, q, meta->level); });
    if (holders.empty()) continue;
    const PlayerId target = holders[lookup(p.memory.attempts, meta->id) % holders.size()];
    out.emplace_back(RequestAction{target, meta->id, make_pretext(meta->id, "loyalty-check")});
    ++issued;
  }
}

void collude(const Player& p, const Observation& obs, std::vector<Action>& out) {
  std::vector<const Document*> full;
  for (const auto& [id, item] : p.info.created()) full.push_back(&item.doc);
  for (const auto& [sig, item] : p.info.transferred()) {
    if (item.document) full.push_back(&*item.document);
  }

  for (PlayerId partner : p.behavior.partners) {
    if (partner == p.id) continue;
    std::vector<DocumentId> theirs;
    for (const auto& [who, docs] : obs.partner_holdings) {
      if (who == partner) theirs = docs;
    }
    std::set<DocumentId> seen;
    for (const Document* doc : full) {
      const DocumentId& id = doc->id();
      if (!seen.insert(id).second) continue;
      if (id.origin == partner) continue;
      if (std::find(theirs.begin(), theirs.end(), id) != theirs.end()) continue;
      if (p.memory.exchanged.contains({id, partner})) continue;
      out.emplace_back(ExchangeAction{partner, id});
    }
  }
}

}  // namespace

std::vector<Action> loyal_step(const Player& p, const Observation& obs) {
  std::vector<Action> out;
  routine_duties(p, obs, out);
  return out;
}

std::vector<Action> curious_step(const Player& p, const Observation& obs) {
  std::vector<Action> out;
  store_observed(obs, out);
  routine_duties(p, obs, out);
  over_collect(p, obs, out);
  return out;
}

std::vector<Action> traitor_collude_step(const Player& p, const Observation& obs) {
  std::vector<Action> out;
  store_observed(obs, out);
  routine_duties(p, obs, out);
  over_collect(p, obs, out);
  collude(p, obs, out);
  return out;
}

std::vector<Action> step(const Player& p, const Observation& obs) {
  switch (p.behavior.tag) {
    case BehaviorTag::kLoyal:
      return loyal_step(p, obs);
    case BehaviorTag::kCuriousOvert:
    case BehaviorTag::kCuriousConcealing:
      return curious_step(p, obs);
    case BehaviorTag::kTraitorColluding:
      return traitor_collude_step(p, obs);
  }
  return {};
}

bool answer_request(const Player& holder, PlayerId requester, ClearanceLevel requester_clearance,
                    const DocumentMeta& doc, std::uint32_t round, std::uint64_t seed) {
  if (holder.info.full_document(doc.id) == nullptr) return false;
  if (!dominates(requester_clearance, doc.level)) return false;
  if (doc.need_to_know.contains(requester)) return true;
  if (holder.trust.verify_need_to_know) return false;
  const std::uint64_t draw = stream_draw(seed, {0x6772616e74ULL, holder.id.value, round, requester.value,
                                                doc.id.origin.value, doc.id.counter});
  return unit_interval(draw) < holder.trust.grant_probability;
}

Bytes synthesize_content(std::uint64_t seed, PlayerId author, std::uint32_t round, std::uint32_t index) {
  Bytes coords;
  for (std::uint64_t v : {seed, std::uint64_t{author.value}, std::uint64_t{round}, std::uint64_t{index}}) {
    for (int i = 0; i < 8; ++i) coords.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  const Digest d = sha256("curio/content", coords);
  return Bytes(d.begin(), d.end());
}

Disclosure disclose(const Player& p, const DocumentCatalog& catalogue, std::uint32_t round) {
  Disclosure out{p.id, round, {}, {}};
  for (const auto& [id, item] : p.info.created()) out.created_sigs.insert(item.self_signature);

  for (const auto& [sig, item] : p.info.transferred()) {
    if (item.round > round) continue;
    bool keep = true;
    switch (p.behavior.tag) {
      case BehaviorTag::kLoyal:
      case BehaviorTag::kCuriousOvert:
        break;
      case BehaviorTag::kCuriousConcealing:
        if (p.behavior.conceal == ConcealPolicy::kAllTransferred) {
          keep = false;
        } else if (const DocumentMeta* meta = catalogue.find(sig.doc_id)) {
          keep = meta->need_to_know.contains(p.id);
        }
        break;
      case BehaviorTag::kTraitorColluding:
        if (item.channel == Channel::kCollusion) {
          keep = false;
        } else {
          for (PlayerId partner : p.behavior.partners) {
            if (p.memory.exchanged.contains({sig.doc_id, partner})) keep = false;
          }
        }
        break;
    }
    if (keep) out.transferred_sigs.insert(sig);
  }
  return out;
}

}  // namespace curio
