#pragma once

#include <set>
#include <string>

#include "curio/engine.hpp"
#include "curio/protocols.hpp"
#include "curio/scenario.hpp"

namespace curio::testing {

inline PlayerId add_player(World& world, ClearanceLevel level, BehaviorTag tag = BehaviorTag::kLoyal) {
  Player p;
  p.id = PlayerId{static_cast<std::uint32_t>(world.players.size())};
  p.clearance = level;
  p.behavior.tag = tag;
  p.key = derive_key(world.seed, p.id);
  world.players.push_back(std::move(p));
  return world.players.back().id;
}

inline Bytes bytes(const std::string& s) { return Bytes(s.begin(), s.end()); }

// Authors a document and records its metadata with the grand designer.
inline Document author(World& world, PlayerId who, ClearanceLevel level, PlayerSet ntk,
                       const std::string& content = "body") {
  Document doc = new_document(world.player(who), bytes(content), level, std::move(ntk));
  world.catalogue.add(meta_of(doc));
  return doc;
}

inline Delivery send(World& world, PlayerId from, PlayerId to, const DocumentId& doc, std::uint32_t round,
                     Registration registration = {}) {
  return transfer(world, make_request(world, from, to, doc, make_pretext(doc, "test")), round, registration);
}

inline std::set<EvidenceKind> kinds(const Verdict& v) {
  std::set<EvidenceKind> out;
  for (const auto& e : v.evidence) out.insert(e.kind);
  return out;
}

inline PlayerSpec spec(ClearanceLevel level, BehaviorTag tag = BehaviorTag::kLoyal, double grant = 0.5,
                       bool verify = false) {
  PlayerSpec p;
  p.clearance = level;
  p.behavior.tag = tag;
  p.trust.grant_probability = grant;
  p.trust.verify_need_to_know = verify;
  return p;
}

}  // namespace curio::testing
