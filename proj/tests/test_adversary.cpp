#include <gtest/gtest.h>

#include "curio/adversary.hpp"

#include "test_support.hpp"

namespace curio {
namespace {

using testing::add_player;
using testing::author;
using testing::kinds;
using testing::send;
constexpr auto C = ClearanceLevel::kConfidential;
constexpr auto S = ClearanceLevel::kSecret;
constexpr auto TS = ClearanceLevel::kTopSecret;

struct Fixture {
  World w;
  std::vector<ClearanceLevel> levels;

  Observation observe(std::uint32_t round) {
    levels.clear();
    for (const auto& p : w.players) levels.push_back(p.clearance);
    Observation o;
    o.round = round;
    o.seed = w.seed;
    o.catalogue = &w.catalogue;
    o.clearances = levels;
    return o;
  }
};

template <class T>
std::vector<T> only(const std::vector<Action>& actions) {
  std::vector<T> out;
  for (const auto& a : actions) {
    if (const T* t = std::get_if<T>(&a)) out.push_back(*t);
  }
  return out;
}

// Stable text form for comparing action lists.
std::string render(const std::vector<Action>& actions) {
  std::string out;
  for (const auto& a : actions) {
    out += std::to_string(a.index()) + ":";
    if (auto* r = std::get_if<RequestAction>(&a)) out += std::to_string(r->target.value) + r->doc.str() + r->pretext;
    if (auto* s = std::get_if<ShareAction>(&a)) out += std::to_string(s->to.value) + s->doc.str();
    if (auto* e = std::get_if<ExchangeAction>(&a)) out += std::to_string(e->partner.value) + e->doc.str();
    if (auto* au = std::get_if<AuthorAction>(&a)) out += std::string(au->content.begin(), au->content.end());
    out += ";";
  }
  return out;
}

TEST(LoyalStep, NothingToDoIsEmpty) {
  Fixture f;
  const PlayerId a = add_player(f.w, S);
  add_player(f.w, S);
  EXPECT_TRUE(loyal_step(f.w.player(a), f.observe(1)).empty());
}

TEST(LoyalStep, AuthorsScheduledDocumentsOnly) {
  Fixture f;
  const PlayerId a = add_player(f.w, S);
  const PlayerId b = add_player(f.w, S);
  Observation o = f.observe(3);
  o.scheduled.push_back(AuthoringEntry{3, a, C, {b}, std::string("memo")});
  o.scheduled.push_back(AuthoringEntry{3, a, S, {}, std::nullopt});
  const auto acts = loyal_step(f.w.player(a), o);
  const auto authored = only<AuthorAction>(acts);
  ASSERT_EQ(authored.size(), 2u);
  EXPECT_EQ(authored[0].content, testing::bytes("memo"));
  EXPECT_EQ(authored[1].content, synthesize_content(f.w.seed, a, 3, 1));
  EXPECT_EQ(acts.size(), 2u);
}

TEST(LoyalStep, SharesWithNeedToKnowMembersWhoCanHold) {
  Fixture f;
  const PlayerId a = add_player(f.w, S);
  const PlayerId b = add_player(f.w, TS);
  const PlayerId c = add_player(f.w, C);
  const PlayerId d = add_player(f.w, S);
  author(f.w, a, S, {b, c});
  f.w.player(a).memory.shared.insert({DocumentId{a, 0}, d});
  const auto shares = only<ShareAction>(loyal_step(f.w.player(a), f.observe(2)));
  ASSERT_EQ(shares.size(), 1u);
  EXPECT_EQ(shares[0].to, b);
  EXPECT_TRUE(only<RequestAction>(loyal_step(f.w.player(a), f.observe(2))).empty());
}

TEST(AnswerRequest, VerifyingHolderDeniesOutsiders) {
  Fixture f;
  const PlayerId a = add_player(f.w, S);
  const PlayerId b = add_player(f.w, S);
  const PlayerId c = add_player(f.w, TS);
  f.w.player(a).trust.verify_need_to_know = true;
  f.w.player(a).trust.grant_probability = 1.0;
  const Document d = author(f.w, a, S, {b});
  const DocumentMeta& meta = *f.w.catalogue.find(d.id());
  EXPECT_TRUE(answer_request(f.w.player(a), b, S, meta, 1, 0));
  for (std::uint32_t r = 1; r < 50; ++r) EXPECT_FALSE(answer_request(f.w.player(a), c, TS, meta, r, r));
}

TEST(AnswerRequest, ClearanceAndPossessionAreHardLimits) {
  Fixture f;
  const PlayerId a = add_player(f.w, S);
  const PlayerId b = add_player(f.w, C);
  const PlayerId c = add_player(f.w, S);
  f.w.player(a).trust.grant_probability = 1.0;
  const Document d = author(f.w, a, S, {b});
  EXPECT_FALSE(answer_request(f.w.player(a), b, C, *f.w.catalogue.find(d.id()), 1, 0));
  EXPECT_FALSE(answer_request(f.w.player(c), b, S, *f.w.catalogue.find(d.id()), 1, 0));
}

TEST(AnswerRequest, GrantRateTracksProbability) {
  Fixture f;
  const PlayerId a = add_player(f.w, S);
  const PlayerId b = add_player(f.w, S);
  f.w.player(a).trust.grant_probability = 0.3;
  const Document d = author(f.w, a, S, {});
  int granted = 0;
  constexpr int kTrials = 20000;
  for (int r = 0; r < kTrials; ++r) {
    granted += answer_request(f.w.player(a), b, S, *f.w.catalogue.find(d.id()), static_cast<std::uint32_t>(r), 11);
  }
  EXPECT_NEAR(static_cast<double>(granted) / kTrials, 0.3, 0.02);
}

TEST(CuriousStep, StoresEveryObservedEnvelope) {
  Fixture f;
  const PlayerId a = add_player(f.w, S);
  const PlayerId b = add_player(f.w, S);
  const PlayerId spy = add_player(f.w, S, BehaviorTag::kCuriousOvert);
  const Document d = author(f.w, a, S, {b});
  Observation o = f.observe(2);
  for (int i = 0; i < 3; ++i) o.observed.push_back(send(f.w, a, b, d.id(), 1).envelope);
  EXPECT_EQ(only<StoreAction>(curious_step(f.w.player(spy), o)).size(), 3u);
  EXPECT_TRUE(only<StoreAction>(loyal_step(f.w.player(a), o)).empty());
}

TEST(CuriousStep, RequestsOnlyOutOfNeedToKnowDocumentsItCanHold) {
  Fixture f;
  const PlayerId a = add_player(f.w, TS);
  const PlayerId spy = add_player(f.w, S, BehaviorTag::kCuriousOvert);
  f.w.player(spy).behavior.request_rate = 10;
  author(f.w, a, TS, {});
  const Document allowed = author(f.w, a, S, {spy});
  const Document target = author(f.w, a, C, {});
  (void)allowed;
  const auto reqs = only<RequestAction>(curious_step(f.w.player(spy), f.observe(2)));
  ASSERT_EQ(reqs.size(), 1u);
  EXPECT_EQ(reqs[0].doc, target.id());
  EXPECT_EQ(reqs[0].target, a);
  EXPECT_EQ(pretext_document(reqs[0].pretext), target.id());
}

TEST(CuriousStep, RequestRateCapsRequests) {
  Fixture f;
  const PlayerId a = add_player(f.w, S);
  const PlayerId spy = add_player(f.w, S, BehaviorTag::kCuriousOvert);
  for (int i = 0; i < 5; ++i) author(f.w, a, S, {});
  EXPECT_EQ(only<RequestAction>(curious_step(f.w.player(spy), f.observe(1))).size(), 1u);
  f.w.player(spy).behavior.request_rate = 3;
  EXPECT_EQ(only<RequestAction>(curious_step(f.w.player(spy), f.observe(1))).size(), 3u);
  f.w.player(spy).behavior.request_rate = 0;
  EXPECT_TRUE(only<RequestAction>(curious_step(f.w.player(spy), f.observe(1))).empty());
}

TEST(CuriousStep, RetryGoesToNextHolder) {
  Fixture f;
  const PlayerId a = add_player(f.w, S);
  const PlayerId b = add_player(f.w, S);
  const PlayerId spy = add_player(f.w, S, BehaviorTag::kCuriousOvert);
  const Document d = author(f.w, a, S, {b});
  EXPECT_EQ(only<RequestAction>(curious_step(f.w.player(spy), f.observe(1)))[0].target, a);
  f.w.player(spy).memory.attempts[d.id()] = 1;
  EXPECT_EQ(only<RequestAction>(curious_step(f.w.player(spy), f.observe(2)))[0].target, b);
}

TEST(CuriousStep, GrantedRequestIsCaughtAsNeedToKnowViolation) {
  Fixture f;
  const PlayerId a = add_player(f.w, S);
  f.w.player(a).trust.grant_probability = 1.0;
  const PlayerId spy = add_player(f.w, S, BehaviorTag::kCuriousOvert);
  author(f.w, a, S, {});
  const auto req = only<RequestAction>(curious_step(f.w.player(spy), f.observe(1))).at(0);
  ASSERT_TRUE(answer_request(f.w.player(a), spy, S, *f.w.catalogue.find(req.doc), 1, f.w.seed));
  transfer(f.w, make_request(f.w, a, spy, req.doc, req.pretext), 1);
  const auto vs = loyalty_check(collect_disclosures(f.w, 1), f.w.registry, f.w.catalogue, 2, 1);
  EXPECT_FALSE(vs[a.value].curious());
  EXPECT_EQ(kinds(vs[spy.value]), std::set<EvidenceKind>{EvidenceKind::kNeedToKnowViolation});
}

TEST(CuriousStep, ConcealingAlsoTripsUndisclosedHolding) {
  Fixture f;
  const PlayerId a = add_player(f.w, C);
  const PlayerId spy = add_player(f.w, TS, BehaviorTag::kCuriousConcealing);
  const Document d = author(f.w, a, C, {});
  transfer(f.w, make_request(f.w, a, spy, d.id(), make_pretext(d.id(), "loyalty-check")), 1);
  const auto vs = loyalty_check(collect_disclosures(f.w, 1), f.w.registry, f.w.catalogue, 2, 1);
  EXPECT_EQ(kinds(vs[spy.value]),
            (std::set<EvidenceKind>{EvidenceKind::kUndisclosedHolding, EvidenceKind::kNeedToKnowViolation}));
  EXPECT_FALSE(vs[a.value].curious());
}

TEST(CuriousStep, ConcealAllPolicyHidesEveryTransfer) {
  Fixture f;
  const PlayerId a = add_player(f.w, S);
  const PlayerId spy = add_player(f.w, S, BehaviorTag::kCuriousConcealing);
  f.w.player(spy).behavior.conceal = ConcealPolicy::kAllTransferred;
  const Document d = author(f.w, a, S, {spy});
  send(f.w, a, spy, d.id(), 1);
  EXPECT_TRUE(disclose(f.w.player(spy), f.w.catalogue, 1).transferred_sigs.empty());
}

TEST(TraitorStep, ExchangesWhatPartnerLacks) {
  Fixture f;
  const PlayerId t1 = add_player(f.w, S, BehaviorTag::kTraitorColluding);
  const PlayerId t2 = add_player(f.w, S, BehaviorTag::kTraitorColluding);
  f.w.player(t1).behavior.partners = {t2};
  f.w.player(t1).behavior.request_rate = 0;
  const Document mine = author(f.w, t1, S, {});
  const Document shared = author(f.w, t1, S, {});
  const Document theirs = author(f.w, t2, S, {t1});
  send(f.w, t2, t1, theirs.id(), 1);
  Observation o = f.observe(2);
  o.partner_holdings.push_back({t2, {theirs.id(), shared.id()}});
  const auto ex = only<ExchangeAction>(traitor_collude_step(f.w.player(t1), o));
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_EQ(ex[0].doc, mine.id());
  EXPECT_EQ(ex[0].partner, t2);
  f.w.player(t1).memory.exchanged.insert({mine.id(), t2});
  EXPECT_TRUE(only<ExchangeAction>(traitor_collude_step(f.w.player(t1), o)).empty());
}

// Five players. Traitor t1 obtains a document through a registered request
// and passes it on off the record; t1 is caught by the registry, t2 is not.
TEST(TraitorStep, RegisteredAcquirerCaughtPartnerEscapes) {
  Fixture f;
  const PlayerId a = add_player(f.w, S);
  f.w.player(a).trust.grant_probability = 1.0;
  add_player(f.w, S);
  add_player(f.w, S);
  const PlayerId t1 = add_player(f.w, S, BehaviorTag::kTraitorColluding);
  const PlayerId t2 = add_player(f.w, S, BehaviorTag::kTraitorColluding);
  f.w.player(t1).behavior.partners = {t2};
  f.w.player(t2).behavior.partners = {t1};
  const Document d = author(f.w, a, S, {});

  Observation o = f.observe(1);
  o.partner_holdings.push_back({t2, {}});
  const auto req = only<RequestAction>(traitor_collude_step(f.w.player(t1), o)).at(0);
  ASSERT_TRUE(answer_request(f.w.player(a), t1, S, *f.w.catalogue.find(req.doc), 1, f.w.seed));
  transfer(f.w, make_request(f.w, a, t1, req.doc, req.pretext), 1);

  const auto ex = only<ExchangeAction>(traitor_collude_step(f.w.player(t1), f.observe(2)));
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_EQ(ex[0].doc, d.id());
  Player& giver = f.w.player(t1);
  const auto& item = giver.info.transferred().begin()->second;
  f.w.player(t2).info.add_transferred(t2, TransferredItem{item.signature, item.document, Channel::kCollusion, t1, 2});
  giver.memory.exchanged.insert({d.id(), t2});

  const auto vs = loyalty_check(collect_disclosures(f.w, 2), f.w.registry, f.w.catalogue, 5, 2);
  EXPECT_TRUE(kinds(vs[t1.value]).contains(EvidenceKind::kUndisclosedHolding));
  EXPECT_FALSE(vs[t2.value].curious());
  EXPECT_TRUE(f.w.player(t2).info.holds(d.id()));
  for (std::uint32_t i = 0; i < 3; ++i) EXPECT_FALSE(vs[i].curious());
}

TEST(TraitorStep, DisclosureOmitsCollusionChannel) {
  Fixture f;
  const PlayerId t1 = add_player(f.w, S, BehaviorTag::kTraitorColluding);
  const PlayerId t2 = add_player(f.w, S, BehaviorTag::kTraitorColluding);
  const Document d = author(f.w, t1, S, {});
  f.w.player(t2).info.add_transferred(t2, TransferredItem{sign(d, f.w.player(t1).key), d, Channel::kCollusion, t1, 1});
  EXPECT_TRUE(disclose(f.w.player(t2), f.w.catalogue, 1).transferred_sigs.empty());
}

TEST(Step, PureAndDeterministic) {
  Fixture f;
  const PlayerId a = add_player(f.w, TS);
  const PlayerId spy = add_player(f.w, S, BehaviorTag::kCuriousOvert);
  const PlayerId t = add_player(f.w, TS, BehaviorTag::kTraitorColluding);
  f.w.player(t).behavior.partners = {spy};
  for (int i = 0; i < 4; ++i) author(f.w, a, kAllLevels[static_cast<std::size_t>(i % 3)], {});
  for (PlayerId p : {a, spy, t}) {
    Observation o = f.observe(3);
    o.scheduled.push_back(AuthoringEntry{3, p, C, {}, std::nullopt});
    const Player before = f.w.player(p);
    const auto first = render(step(f.w.player(p), o));
    EXPECT_EQ(first, render(step(f.w.player(p), o)));
    EXPECT_EQ(f.w.player(p).info.created().size(), before.info.created().size());
    EXPECT_EQ(f.w.player(p).memory.attempts, before.memory.attempts);
  }
}

TEST(Step, DispatchesOnTag) {
  Fixture f;
  const PlayerId a = add_player(f.w, S);
  const PlayerId spy = add_player(f.w, S, BehaviorTag::kCuriousOvert);
  author(f.w, a, S, {});
  EXPECT_TRUE(step(f.w.player(a), f.observe(1)).empty());
  EXPECT_EQ(render(step(f.w.player(spy), f.observe(1))), render(curious_step(f.w.player(spy), f.observe(1))));
}

TEST(SynthesizeContent, DeterministicAndDistinct) {
  EXPECT_EQ(synthesize_content(1, PlayerId{2}, 3, 4), synthesize_content(1, PlayerId{2}, 3, 4));
  EXPECT_NE(synthesize_content(1, PlayerId{2}, 3, 4), synthesize_content(1, PlayerId{2}, 3, 5));
  EXPECT_NE(synthesize_content(1, PlayerId{2}, 3, 4), synthesize_content(2, PlayerId{2}, 3, 4));
}

}  // namespace
}  // namespace curio
