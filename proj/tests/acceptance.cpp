// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "curio/byzantine.hpp"
#include "curio/crypto.hpp"
#include "curio/engine.hpp"
#include "curio/protocols.hpp"
#include "curio/report.hpp"
#include "curio/scenario.hpp"
#include "curio/verify.hpp"

#include "ba_enumeration.hpp"

namespace {

using namespace curio;

// Pinned tolerances. Every criterion is exact.
constexpr std::uint64_t kMaxCompletenessMisses = 0;
constexpr std::uint64_t kMaxFalsePositives = 0;
constexpr std::uint64_t kMinTraitorFalseNegatives = 1;
constexpr std::uint64_t kMaxBAViolations = 0;
constexpr std::uint64_t kMaxBlindingDiffs = 0;
constexpr std::uint64_t kMaxDigestCollisions = 0;
constexpr std::uint64_t kDigestSamples = 10000;
constexpr std::uint64_t kMaxReplayMismatches = 0;
constexpr std::uint32_t kMaxCurious = 2;
constexpr double kSuiteBudgetSeconds = 120.0;
constexpr double kBABudgetSeconds = 60.0;

int failures = 0;

void verdict(int id, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail << std::endl;
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct SuiteRun {
  std::string label;
  Scenario scenario;
  std::string report_text;
  Report report;
  std::vector<Violation> violations;
  bool blinded_same = false;
  bool rerun_same = false;
};

// Independent replay: expected sets by linear scan of the serialized log, verdict
// outcome by the three evidence rules, no Registry index involved.
std::vector<bool> oracle_outcomes(const Report& r, const CheckRecord& c) {
  const auto n = static_cast<std::uint32_t>(r.scenario.players.size());
  std::map<DocumentId, DocumentMeta> catalogue;
  for (const auto& rec : r.catalogue) {
    if (rec.round <= c.round) catalogue.insert_or_assign(rec.meta.id, rec.meta);
  }
  std::vector<bool> out(n, false);
  for (std::uint32_t i = 0; i < n; ++i) {
    const PlayerId p{i};
    const Disclosure* disc = nullptr;
    for (const auto& d : c.disclosures) {
      if (d.player == p) disc = &d;
    }
    if (disc == nullptr) {
      out[i] = true;
      continue;
    }
    std::map<Digest, Signature> expected;
    for (const auto& e : r.registry) {
      if (e.round > c.round) continue;
      const bool mine = (e.kind == EntryKind::kReceive && e.actor == p) ||
                        (e.kind == EntryKind::kSend && e.counterparty == p);
      if (mine) expected.emplace(e.sig.digest, e.sig);
    }
    std::map<Digest, Signature> disclosed;
    for (const auto& s : disc->transferred_sigs) disclosed.emplace(s.digest, s);

    bool curious = false;
    for (const auto& [d, s] : expected) curious = curious || !disclosed.contains(d);
    for (const auto& [d, s] : disclosed) curious = curious || !expected.contains(d);
    std::map<Digest, Signature> all = expected;
    all.insert(disclosed.begin(), disclosed.end());
    for (const auto& [d, s] : all) {
      DocumentId doc = s.doc_id;
      for (const auto& e : r.registry) {
        if (e.kind == EntryKind::kSend && e.sig.digest == d) {
          if (auto named = pretext_document(e.pretext)) doc = *named;
          break;
        }
      }
      auto it = catalogue.find(doc);
      curious = curious || it == catalogue.end() || !it->second.need_to_know.contains(p);
    }
    out[i] = curious;
  }
  return out;
}

// Returns the number of check records whose verdicts the log does not reproduce.
std::uint64_t replay_mismatches(const std::string& text) {
  const Report r = read_report(text);
  std::uint64_t bad = 0;
  const auto n = static_cast<std::uint32_t>(r.scenario.players.size());
  for (const auto& c : r.checks) {
    std::vector<RegistryEntry> prefix;
    for (const auto& e : r.registry) {
      if (e.round <= c.round) prefix.push_back(e);
    }
    const Registry registry = Registry::from_entries(prefix);
    DocumentCatalog catalogue;
    for (const auto& rec : r.catalogue) {
      if (rec.round <= c.round) catalogue.add(rec.meta);
    }
    const VerdictVector again = loyalty_check(c.disclosures, registry, catalogue, n, c.round);
    const std::vector<bool> oracle = oracle_outcomes(r, c);
    bool same = again == c.verdicts && c.verdicts.size() == n;
    for (std::uint32_t i = 0; same && i < n; ++i) same = oracle[i] == c.verdicts[i].curious();
    if (!same) ++bad;
  }
  return bad;
}

std::vector<SuiteRun> build_suite(const std::vector<std::pair<std::string, Scenario>>& templates) {
  std::vector<SuiteRun> runs;
  for (const auto& [name, base] : templates) {
    const auto n = static_cast<std::uint32_t>(base.players.size());
    for (const Assignment& a : enumerate_assignments(n, kMaxCurious, false)) {
      SuiteRun s;
      s.label = name + ":" + a.str();
      s.scenario = apply_assignment(base, a);
      runs.push_back(std::move(s));
    }
  }
  const unsigned jobs = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < runs.size(); i += jobs) {
      SuiteRun& s = runs[i];
      s.report = run(s.scenario);
      s.report_text = write_report(s.report);
      s.violations = check_properties(s.report, s.label);
      s.blinded_same = verdict_section(s.report) == verdict_section(run(s.scenario, RunOptions{true}));
      s.rerun_same = write_report(run(s.scenario)) == s.report_text;
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
  pool.clear();
  return runs;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

int main() {
  const std::filesystem::path dir = CURIO_SCENARIO_DIR;
  const std::vector<std::pair<std::string, Scenario>> templates{
      {"template10", load_scenario(dir / "template10.json")},
      {"upward_flow", load_scenario(dir / "upward_flow.json")},
  };

  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<SuiteRun> suite = build_suite(templates);
  const double suite_seconds = seconds_since(t0);

  std::uint64_t evaluated = 0;
  std::uint64_t misses = 0;
  std::uint64_t false_positives = 0;
  std::uint64_t agreement = 0;
  std::uint64_t blinding_diffs = 0;
  std::uint64_t rerun_diffs = 0;
  std::uint64_t replay_bad = 0;
  std::uint64_t checks = 0;
  std::string first_problem;
  for (const SuiteRun& s : suite) {
    evaluated += s.report.metrics->evaluated.size();
    false_positives += s.report.metrics->false_positives;
    checks += s.report.checks.size();
    for (const auto& v : s.violations) {
      if (v.property == "completeness") ++misses;
      if (v.property == "soundness") ++false_positives;
      if (v.property == "agreement") ++agreement;
      if (first_problem.empty()) first_problem = " first: " + v.assignment + " " + v.property + " " + v.detail;
    }
    blinding_diffs += s.blinded_same ? 0 : 1;
    rerun_diffs += s.rerun_same ? 0 : 1;
    replay_bad += replay_mismatches(s.report_text);
  }

  {
    std::ostringstream d;
    d << suite.size() << " runs, " << evaluated << " adversaries evaluated, " << misses << " missed, "
      << agreement << " agreement failures, " << suite_seconds << " s" << first_problem;
    verdict(1, "completeness", misses <= kMaxCompletenessMisses && agreement == 0 && evaluated > 0 &&
                                   suite_seconds < kSuiteBudgetSeconds,
            d.str());
  }
  {
    std::ostringstream d;
    d << false_positives << " loyal players flagged across " << suite.size() << " runs";
    verdict(2, "soundness", false_positives <= kMaxFalsePositives, d.str());
  }
  {
    const Report r = run(load_scenario(dir / "colluding_pair.json"));
    std::uint64_t exchanges = 0;
    std::uint64_t registered_exchanges = 0;
    for (const auto& e : r.events) {
      if (e.kind != EventKind::kExchange) continue;
      ++exchanges;
      for (const auto& entry : r.registry) {
        if (entry.sig.digest == e.sig->digest) ++registered_exchanges;
      }
    }
    const std::uint64_t fn = r.metrics->false_negatives;
    std::ostringstream d;
    d << exchanges << " off-record exchanges, " << registered_exchanges << " on the log, " << fn
      << " false negatives, " << r.metrics->false_positives << " false positives";
    verdict(3, "collusion boundary",
            fn >= kMinTraitorFalseNegatives && exchanges > 0 && registered_exchanges == 0 &&
                r.metrics->false_positives == 0,
            d.str());
  }
  {
    const auto t1 = std::chrono::steady_clock::now();
    std::uint64_t bad4 = 0;
    std::uint64_t runs4 = 0;
    const BAConfig four{4, 1, PlayerId{0}};
    for (std::uint32_t t = 0; t < 4; ++t) {
      const PlayerSet traitors{PlayerId{t}};
      runs4 += testing::enumerate_strategies(four, traitors, {"0", "1"}, "0",
                                             [&](const BAValue& sent, const BAResult& r) {
                                               if (!testing::interactive_consistency(four, r, traitors, sent)) ++bad4;
                                               return true;
                                             });
    }
    std::uint64_t bad3 = 0;
    std::uint64_t runs3 = 0;
    const BAConfig three{3, 1, PlayerId{0}};
    for (std::uint32_t t = 0; t < 3; ++t) {
      const PlayerSet traitors{PlayerId{t}};
      runs3 += testing::enumerate_strategies(three, traitors, {"0", "1"}, "0",
                                             [&](const BAValue& sent, const BAResult& r) {
                                               if (!testing::interactive_consistency(three, r, traitors, sent)) ++bad3;
                                               return true;
                                             });
    }
    const double secs = seconds_since(t1);
    std::ostringstream d;
    d << "n=4,m=1: " << bad4 << " violations in " << runs4 << " runs; n=3,m=1: " << bad3 << " violations in "
      << runs3 << " runs; " << secs << " s";
    verdict(4, "byzantine agreement", bad4 <= kMaxBAViolations && bad3 > 0 && secs < kBABudgetSeconds, d.str());
  }
  {
    std::ostringstream d;
    d << blinding_diffs << " of " << suite.size() << " runs changed a verdict section";
    verdict(5, "blinding", blinding_diffs <= kMaxBlindingDiffs, d.str());
  }
  {
    const Scenario s = load_scenario(dir / "upward_flow.json");
    const std::filesystem::path tmp = std::filesystem::temp_directory_path();
    const auto a = tmp / "curio_acceptance_a.ndjson";
    const auto b = tmp / "curio_acceptance_b.ndjson";
    write_file(a, write_report(run(s)));
    write_file(b, write_report(run(s)));
    const bool files_same = read_file(a) == read_file(b) && !read_file(a).empty();
    std::filesystem::remove(a);
    std::filesystem::remove(b);

    std::mt19937_64 rng(0xc0ffee);
    std::set<Digest> seen;
    std::uint64_t collisions = 0;
    std::uint64_t unstable = 0;
    for (std::uint64_t i = 0; i < kDigestSamples; ++i) {
      const PlayerId origin{static_cast<std::uint32_t>(rng() % 16)};
      Bytes content(rng() % 64);
      for (auto& byte : content) byte = static_cast<std::uint8_t>(rng());
      const Document doc(DocumentId{origin, static_cast<std::uint32_t>(i)}, content, kAllLevels[rng() % 3], {});
      const SigningKey key = derive_key(rng() % 4, origin);
      const Signature sig = sign(doc, key);
      if (sign(doc, key) != sig) ++unstable;
      if (!seen.insert(sig.digest).second) ++collisions;
    }
    std::ostringstream d;
    d << "report files " << (files_same ? "identical" : "differ") << ", " << rerun_diffs << " of " << suite.size()
      << " suite reruns differ, " << collisions << " collisions and " << unstable << " unstable digests in "
      << kDigestSamples;
    verdict(6, "determinism",
            files_same && rerun_diffs == 0 && collisions <= kMaxDigestCollisions && unstable == 0, d.str());
  }
  {
    std::ostringstream d;
    d << replay_bad << " of " << checks << " checks not reproduced from the serialized log";
    verdict(7, "replay conservation", replay_bad <= kMaxReplayMismatches && checks > 0, d.str());
  }
  return failures == 0 ? 0 : 1;
}
