#include "curio/protocols.hpp"

#include <algorithm>
#include <map>

#include "curio/adversary.hpp"
#include "curio/error.hpp"

namespace curio {

namespace {

std::string who(PlayerId p) { return "player " + std::to_string(p.value); }

const Document& held_document(const World& world, const TransferRequest& req) {
  const Document* doc = world.player(req.from).info.full_document(req.doc);
  if (doc == nullptr) {
    throw Error(ErrorCode::kNotHolder, who(req.from) + " does not hold " + req.doc.str() + " in full");
  }
  return *doc;
}

void check_receiver_clearance(const Player& receiver, const Document& doc) {
  if (!dominates(receiver.clearance, doc.level())) {
    throw Error(ErrorCode::kClearanceViolation,
                doc.id().str() + " (" + std::string(to_string(doc.level())) + ") cannot flow to " +
                    who(receiver.id) + " (" + std::string(to_string(receiver.clearance)) + ")");
  }
}

Delivery deliver(World& world, const TransferRequest& req, std::uint32_t round, Registration registration,
                 EnvelopeContent content, Protocol protocol) {
  Delivery out;
  out.protocol = protocol;
  out.sig = *content.signature;
  out.envelope = seal(content, req.to);

  if (registration.send) {
    out.send_entry = world.registry.register_send(req.from, req.to, out.sig, req.pretext, round, protocol);
  }

  Player& receiver = world.player(req.to);
  EnvelopeContent opened = open(out.envelope, receiver.id);
  if (out.send_entry) {
    out.matches_registered_send =
        signatures_equal(*opened.signature, world.registry.entries()[*out.send_entry].sig);
  }
  const Channel channel = protocol == Protocol::kInter ? Channel::kInter : Channel::kIntra;
  receiver.info.add_transferred(receiver.id, TransferredItem{*opened.signature, std::move(opened.document),
                                                             channel, req.from, round});
  if (registration.receive) {
    out.receive_entry = world.registry.register_receive(req.to, req.from, out.sig, round, protocol);
  }
  return out;
}

}  // namespace

TransferRequest make_request(const World& world, PlayerId from, PlayerId to, const DocumentId& doc,
                             std::string pretext) {
  const bool same = world.player(from).clearance == world.player(to).clearance;
  return TransferRequest{from, to, doc, std::move(pretext), same ? Protocol::kIntra : Protocol::kInter};
}

Delivery inter_clearance_transfer(World& world, const TransferRequest& req, std::uint32_t round,
                                  Registration registration) {
  const Player& sender = world.player(req.from);
  const Player& receiver = world.player(req.to);
  if (sender.clearance == receiver.clearance) {
    throw Error(ErrorCode::kLevelMismatch, who(req.from) + " and " + who(req.to) +
                                               " share a clearance; use the intra-clearance protocol");
  }
  // I: catalogue
  const Document& doc = held_document(world, req);
  check_receiver_clearance(receiver, doc);
  world.catalogue.add(meta_of(doc));
  world.inter_documents.insert(doc.id());
  // II: blind; III: seal the signature alone
  EnvelopeContent content{sign(doc, sender.key), std::nullopt};
  // IV, V
  return deliver(world, req, round, registration, std::move(content), Protocol::kInter);
}

Delivery intra_clearance_transfer(World& world, const TransferRequest& req, std::uint32_t round,
                                  Registration registration) {
  const Player& sender = world.player(req.from);
  const Player& receiver = world.player(req.to);
  if (sender.clearance != receiver.clearance) {
    throw Error(ErrorCode::kLevelMismatch, who(req.from) + " and " + who(req.to) +
                                               " hold different clearances; use the inter-clearance protocol");
  }
  const Document& doc = held_document(world, req);
  check_receiver_clearance(receiver, doc);
  world.catalogue.add(meta_of(doc));
  // I: bundle the full document with its signature and seal
  EnvelopeContent content{sign(doc, sender.key), doc};
  return deliver(world, req, round, registration, std::move(content), Protocol::kIntra);
}

Delivery transfer(World& world, const TransferRequest& req, std::uint32_t round, Registration registration) {
  return req.protocol == Protocol::kInter ? inter_clearance_transfer(world, req, round, registration)
                                          : intra_clearance_transfer(world, req, round, registration);
}

std::vector<Disclosure> collect_disclosures(const World& world, std::uint32_t round) {
  std::vector<Disclosure> out;
  out.reserve(world.players.size());
  for (const auto& p : world.players) out.push_back(disclose(p, world.catalogue, round));
  return out;
}

namespace {

// The other party of the registered hand-over of `sig` to `holder`.
std::string provenance(const Registry& registry, PlayerId holder, const Signature& sig) {
  for (const auto& e : registry.entries()) {
    if (e.sig.digest != sig.digest) continue;
    if (e.kind == EntryKind::kSend && e.counterparty == holder) return "sent by " + who(e.actor);
    if (e.kind == EntryKind::kReceive && e.actor == holder) return "received from " + who(e.counterparty);
  }
  return "signed by " + who(sig.signer);
}

}  // namespace

VerdictVector loyalty_check(const std::vector<Disclosure>& disclosures, const Registry& registry,
                            const DocumentCatalog& catalogue, std::uint32_t player_count,
                            std::uint32_t round) {
  std::map<PlayerId, const Disclosure*> by_player;
  for (const auto& d : disclosures) by_player.emplace(d.player, &d);

  VerdictVector verdicts;
  verdicts.reserve(player_count);
  for (std::uint32_t i = 0; i < player_count; ++i) {
    const PlayerId p{i};
    Verdict v{p, Outcome::kLoyal, {}, round};
    const std::set<Signature> expected = registry.expected_transferred_set(p, round);

    auto found = by_player.find(p);
    if (found == by_player.end()) {
      v.evidence.push_back(Evidence{EvidenceKind::kMissingDisclosure, std::nullopt,
                                    who(p) + " made no disclosure at round " + std::to_string(round)});
      v.outcome = Outcome::kCurious;
      verdicts.push_back(std::move(v));
      continue;
    }
    const Disclosure& disclosed = *found->second;

    std::set<Digest> expected_digests;
    for (const auto& s : expected) expected_digests.insert(s.digest);
    std::set<Digest> disclosed_digests;
    for (const auto& s : disclosed.transferred_sigs) disclosed_digests.insert(s.digest);

    std::set<Digest> unregistered;
    // (a) the log knows of it, the disclosure leaves it out
    for (const auto& s : expected) {
      if (!disclosed_digests.contains(s.digest)) {
        v.evidence.push_back(Evidence{EvidenceKind::kUndisclosedHolding, s,
                                      s.doc_id.str() + " " + provenance(registry, p, s) + " but not disclosed"});
      }
    }
    // (b) disclosed without any registered transfer
    for (const auto& s : disclosed.transferred_sigs) {
      if (!expected_digests.contains(s.digest)) {
        unregistered.insert(s.digest);
        v.evidence.push_back(Evidence{EvidenceKind::kUnregisteredHolding, s,
                                      s.doc_id.str() + " disclosed without a registered transfer"});
      }
    }
    // (c) held outside the document's need-to-know
    std::map<Digest, Signature> holdings;
    for (const auto& s : expected) holdings.emplace(s.digest, s);
    for (const auto& s : disclosed.transferred_sigs) holdings.emplace(s.digest, s);
    std::vector<Signature> ordered;
    for (const auto& [digest, s] : holdings) ordered.push_back(s);
    std::sort(ordered.begin(), ordered.end());
    for (const auto& s : ordered) {
      const DocumentId doc = registry.pretext_document_for(s).value_or(s.doc_id);
      const DocumentMeta* meta = catalogue.find(doc);
      if (meta == nullptr) {
        if (!unregistered.contains(s.digest)) {
          v.evidence.push_back(Evidence{EvidenceKind::kUnregisteredHolding, s,
                                        doc.str() + " resolves to no catalogued document"});
        }
        continue;
      }
      if (!meta->need_to_know.contains(p)) {
        v.evidence.push_back(Evidence{EvidenceKind::kNeedToKnowViolation, s,
                                      doc.str() + " is outside the need-to-know of " + who(p) + "; " +
                                          provenance(registry, p, s)});
      }
    }

    if (!v.evidence.empty()) v.outcome = Outcome::kCurious;
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

SweepResult theorem1_sweep(const World& world, std::uint32_t round, std::uint32_t assumed_m) {
  SweepResult out;
  out.round = round;
  out.disclosures = collect_disclosures(world, round);
  const auto count = static_cast<std::uint32_t>(world.players.size());
  out.computed = loyalty_check(out.disclosures, world.registry, world.catalogue, count, round);
  out.ratified = ratify_verdicts(out.computed, world.players, assumed_m);

  std::uint32_t loyal = 0;
  for (const auto& p : world.players) loyal += p.behavior.adversarial() ? 0 : 1;
  out.loyal_majority = 2 * loyal > count;
  return out;
}

}  // namespace curio
