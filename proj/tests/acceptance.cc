// Copyright 2026 The Parafact Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <unistd.h>

#include "oracles.h"
#include "parafact/acquisition.h"
#include "parafact/evaluation.h"
#include "parafact/extraction.h"
#include "parafact/server.h"
#include "parafact/workbench.h"

using namespace parafact;
using parafact::testing::LoadFixtures;

namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Timer {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string Fmt(const char *format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

Outcome ProximityOracle() {
  std::mt19937_64 rng(20261016);
  Timer timer;
  const int nets = 1000;
  size_t pairs = 0, mismatches = 0;
  for (int trial = 0; trial < nets; ++trial) {
    testing::RandomNet shape = testing::MakeRandomNet(rng, 12, 3);
    SemanticNet net = shape.Build();
    testing::ProximityOracle oracle(shape);
    for (const auto &a : shape.words) {
      for (const auto &b : shape.words) {
        ++pairs;
        if (net.NearestCommonAncestors(a, b) != oracle.Nca(a, b) ||
            net.Distance(a, b) != oracle.Distance(a, b)) {
          ++mismatches;
        }
      }
    }
  }
  const double seconds = timer.Seconds();
  return {mismatches == 0 && seconds < 10.0,
          Fmt("nets=%d pairs=%zu mismatches=%zu seconds=%.2f (limit 10)", nets, pairs, mismatches,
              seconds)};
}

size_t LawViolations(const SemanticNet &net, const std::vector<std::string> &words, size_t *checked) {
  size_t violations = 0;
  for (const auto &a : words) {
    ++*checked;
    if (net.Distance(a, a) != Proximity::Value(0)) ++violations;
    for (const auto &b : words) {
      ++*checked;
      if (net.Distance(a, b) != net.Distance(b, a)) ++violations;
    }
  }
  return violations;
}

Outcome ProximityLaws() {
  const auto &f = LoadFixtures();
  size_t checked = 0, violations = 0;
  violations += LawViolations(f.net, f.net.Words(), &checked);
  violations += LawViolations(f.spurious_net, f.spurious_net.Words(), &checked);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    testing::RandomNet shape = testing::MakeRandomNet(rng, 12, 3);
    violations += LawViolations(shape.Build(), shape.words, &checked);
  }
  return {violations == 0 && checked > 0,
          Fmt("fixture nets=2 random nets=1000 checks=%zu violations=%zu", checked, violations)};
}

using RowKey = std::tuple<std::string, Pos, std::string, Pos>;

std::set<RowKey> Keys(const PatternTable &table) {
  std::set<RowKey> out;
  for (const PatternRow &r : table.rows()) out.insert({r.elt1, r.cat1, r.elt2, r.cat2});
  return out;
}

Outcome S5Reproduction() {
  const auto &f = LoadFixtures();
  Timer timer;
  PatternTable table = AcquireCorpus(testing::S5Seed(), f.s5, f.net, f.lexicon, 2.0);
  PatternTable spurious = AcquireCorpus(testing::S5Seed(), f.s5, f.spurious_net, f.lexicon, 2.0);
  const double seconds = timer.Seconds();
  std::set<RowKey> expected = {
      {"reprise", Pos::kN, "activité", Pos::kN},   {"rachat", Pos::kN, "activité", Pos::kN},
      {"acquérir", Pos::kV, "magasin", Pos::kN},   {"racheter", Pos::kV, "c-company", Pos::kN},
      {"cession", Pos::kN, "c-company", Pos::kN},
  };
  const bool base = Keys(table) == expected;
  expected.insert({"renoncer", Pos::kV, "acquéreur", Pos::kN});
  const bool extra = Keys(spurious) == expected;
  return {base && extra && seconds < 1.0,
          Fmt("rows=%zu (want 5) with spurious link=%zu (want 6, +renoncer/acquéreur) "
              "exact=%s seconds=%.3f (limit 1)",
              table.size(), spurious.size(), base && extra ? "yes" : "no", seconds)};
}

Outcome AlgorithmOracle() {
  const auto &f = LoadFixtures();
  const SeedPattern seeds[] = {testing::S5Seed(), SeedPattern::Parse("rachat/activité/e/$2"),
                               SeedPattern::Parse("racheter/c-company/e/$2")};
  const double thresholds[] = {0, 0.5, 1, 1.5, 2, 3};
  std::mt19937 rng(500);
  size_t sentences = 0, comparisons = 0, mismatches = 0, monotone_violations = 0;
  while (sentences < 500) {
    for (const Sentence &s :
         Analyze("r", testing::RandomFixtureText(rng), f.lexicon, f.gazetteer, f.stopwords)) {
      ++sentences;
      for (const SeedPattern &seed : seeds) {
        std::set<std::string> previous;
        for (double t : thresholds) {
          std::set<std::string> got, want;
          for (const auto &r : AcquireSentence(seed, s, f.spurious_net, f.lexicon, t)) {
            got.insert(testing::RowSignature(r));
          }
          for (const auto &r :
               testing::OracleAcquire(seed, s, f.spurious_net, f.lexicon, f.stopwords, t)) {
            want.insert(testing::RowSignature(r));
          }
          ++comparisons;
          if (got != want) ++mismatches;
          if (!std::includes(got.begin(), got.end(), previous.begin(), previous.end())) {
            ++monotone_violations;
          }
          previous = got;
        }
      }
    }
  }
  return {mismatches == 0 && monotone_violations == 0,
          Fmt("sentences=%zu comparisons=%zu mismatches=%zu monotonicity violations=%zu", sentences,
              comparisons, mismatches, monotone_violations)};
}

Outcome RecognitionSuite() {
  const auto &f = LoadFixtures();
  testing::RecognitionFixture fx = testing::LoadRecognitionFixture();
  testing::NfaOracle oracle(fx.metas, fx.table, f.lexicon);
  int documented = 0;
  for (const auto &seq : testing::DocumentedSequences()) {
    auto p = testing::MakePhrase(seq.phrase, f.lexicon);
    auto sentence = Analyze("r", seq.sentence, f.lexicon, f.gazetteer, f.stopwords).at(0);
    auto records = ExtractSentence(fx.graph, sentence, DefaultSlotMap());
    const PatternRow *row = records.size() == 1 ? fx.table.Find(records[0].pattern_row) : nullptr;
    if (fx.graph.Accepts(p.tokens) && oracle.AcceptsWithRow(p.tokens, seq.head, seq.expansion) &&
        row != nullptr && row->elt1 == seq.head && row->elt2 == seq.expansion) {
      ++documented;
    }
  }
  int passive_ok = 0;
  for (const auto &[phrase, allowed] : testing::PassiveCases()) {
    if (fx.graph.Accepts(testing::MakePhrase(phrase, f.lexicon).tokens) == allowed) ++passive_ok;
  }
  int rejected = 0;
  for (const auto &phrase : testing::NearMisses()) {
    if (!fx.graph.Accepts(testing::MakePhrase(phrase, f.lexicon).tokens)) ++rejected;
  }
  testing::RecognitionFixture again = testing::LoadRecognitionFixture();
  const bool deterministic = fx.graph.Serialize() == again.graph.Serialize();
  const auto golden = testing::GoldenStats("recognition");
  const bool stats = fx.graph.Stats() == golden;
  auto enumeration =
      testing::EnumerateAndCompare(fx.graph, oracle, f.lexicon, testing::EnumerationAlphabet(), 8);
  const size_t passive_total = testing::PassiveCases().size();
  const size_t near_total = testing::NearMisses().size();
  const bool pass = documented == 6 && passive_ok == static_cast<int>(passive_total) &&
                    rejected == static_cast<int>(near_total) && near_total == 20 &&
                    deterministic && stats && enumeration.mismatches == 0;
  return {pass, Fmt("documented=%d/6 passive=%d/%zu near-misses rejected=%d/%zu deterministic=%s "
                    "stats=%zu/%zu golden=%zu/%zu enumeration prefixes=%zu mismatches=%zu",
                    documented, passive_ok, passive_total, rejected, near_total,
                    deterministic ? "yes" : "no", fx.graph.state_count(),
                    fx.graph.transition_count(), golden.first, golden.second, enumeration.prefixes,
                    enumeration.mismatches)};
}

Outcome EvaluationArithmetic() {
  struct Case {
    int tp, fp, fn;
    double p, r, f;
  };
  // Hand-computed; the degenerate ones use the 0 convention.
  const Case cases[] = {
      {3, 1, 2, 0.75, 0.6, 2 * 0.75 * 0.6 / 1.35},
      {0, 0, 0, 0, 0, 0},
      {0, 0, 5, 0, 0, 0},
      {0, 4, 0, 0, 0, 0},
      {6, 0, 0, 1, 1, 1},
  };
  int ok = 0;
  for (const Case &c : cases) {
    SlotScore s = MakeSlotScore("arg2", c.tp, c.fp, c.fn);
    const double harmonic = s.precision + s.recall > 0
                                ? 2 * s.precision * s.recall / (s.precision + s.recall)
                                : 0.0;
    if (std::abs(s.precision - c.p) < 1e-9 && std::abs(s.recall - c.r) < 1e-9 &&
        std::abs(s.f - c.f) < 1e-9 && std::abs(s.f - harmonic) < 1e-9) {
      ++ok;
    }
  }
  return {ok == 5, Fmt("configurations=%d/5 within 1e-9", ok)};
}

Outcome EndToEnd() {
  auto dir = fs::temp_directory_path() / ("parafact-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  testing::CliPipeline p = testing::RunCliPipeline((dir / "e2e").string());
  fs::remove_all(dir);
  if (!p.ok) {
    return {false, "pipeline step failed: " + p.acquire.err + p.decide.err + p.compile.err +
                       p.extract.err + p.eval.err + p.eval_planted.err};
  }
  const bool prf = p.eval.out.find("arg2\t6\t0\t0\t1.0000\t1.0000\t1.0000") != std::string::npos;
  const bool net_gap = p.eval_planted.out.find("d07\t0\targ2\tnet-gap") != std::string::npos;
  const bool transformation =
      p.eval_planted.out.find("d08\t0\targ2\ttransformation-gap") != std::string::npos;
  return {prf && net_gap && transformation && p.seconds < 5.0,
          Fmt("arg2 P=R=F=1: %s; planted net-gap: %s; planted transformation-gap: %s; "
              "seconds=%.2f (limit 5)",
              prf ? "yes" : "no", net_gap ? "yes" : "no", transformation ? "yes" : "no",
              p.seconds)};
}

std::string Dump(const Workbench &wb) {
  nlohmann::json out;
  for (const Round &r : wb.Rounds()) out["rounds"].push_back(RoundToJson(r));
  for (const Candidate &c : wb.Candidates()) out["candidates"].push_back(CandidateToJson(c));
  return out.dump();
}

bool StatsMatchLogs(const Workbench &wb) {
  auto expected = testing::StatsFromLogs(wb.proposals_path(), wb.decisions_path());
  auto rounds = wb.Rounds();
  if (rounds.size() != expected.size()) return false;
  for (const Round &r : rounds) {
    const testing::LogStats &e = expected.at(r.id);
    if (r.stats.proposed != e.proposed || r.stats.accepted != e.accepted ||
        r.stats.rejected != e.rejected ||
        std::abs(r.stats.acceptance_rate - e.acceptance_rate()) > 1e-12 ||
        std::abs(r.stats.new_patterns_per_seed - e.per_seed()) > 1e-12 ||
        r.stats.new_patterns_per_seed_text != e.per_seed_text()) {
      return false;
    }
  }
  return true;
}

Outcome WorkbenchLoop() {
  const auto &f = LoadFixtures();
  WorkbenchResources resources{&f.s5, &f.net, &f.lexicon};
  auto clock = [] { return std::string("2026-01-01T00:00:00Z"); };
  auto dir = fs::temp_directory_path() / ("parafact-acceptance-wb-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  bool replay = false, truncation = false, stats = true;
  std::string format;
  {
    Workbench wb(dir, resources, clock);
    std::vector<SeedPattern> seeds;
    for (const char *s : {"cession/société/entreprise_achetee/$2", "rachat/société/entreprise_achetee/$2",
                          "reprise/activité/entreprise_achetee/$2", "acquérir/magasin/entreprise_achetee/$2",
                          "racheter/société/entreprise_achetee/$2", "cession/activité/entreprise_achetee/$2"}) {
      seeds.push_back(SeedPattern::Parse(s));
    }
    wb.StartRound(seeds, 2.0);
    int n = 0;
    for (const Candidate &c : wb.Candidates()) {
      wb.RecordDecision(c.row.Id(), n++ % 4 == 3 ? Verdict::kReject : Verdict::kAccept, "a");
      stats = stats && StatsMatchLogs(wb);
    }
    wb.RecordDecision(wb.Candidates()[0].row.Id(), Verdict::kReject, "b");
    wb.StartRound({SeedPattern::Parse("rachat/activité/entreprise_achetee/$2")}, 3.0);
    wb.PromoteAccepted(1);
    stats = stats && StatsMatchLogs(wb);
    format = wb.GetRound(1).stats.new_patterns_per_seed_text;
    const std::string before = Dump(wb);
    {
      Workbench reopened(dir, resources, clock);
      replay = Dump(reopened) == before;
    }
    const auto size = fs::file_size(wb.decisions_path());
    std::ofstream(wb.decisions_path(), std::ios::app | std::ios::binary)
        << R"({"type":"decision","candidate_id":"3d2c)";
    Workbench after_crash(dir, resources, clock);
    truncation = Dump(after_crash) == before && fs::file_size(wb.decisions_path()) == size;
    stats = stats && StatsMatchLogs(after_crash);
  }
  fs::remove_all(dir);
  return {replay && truncation && stats,
          Fmt("replay=%s truncated-final-line=%s stats-vs-logs=%s new-patterns-per-seed=%s "
              "(6 seeds, no UI)",
              replay ? "exact" : "differs", truncation ? "recovered" : "failed",
              stats ? "equal" : "differ", format.c_str())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
      {"proximity-oracle", ProximityOracle},
      {"proximity-laws", ProximityLaws},
      {"acquisition-reproduction", S5Reproduction},
      {"acquisition-oracle", AlgorithmOracle},
      {"recognition-suite", RecognitionSuite},
      {"evaluation-arithmetic", EvaluationArithmetic},
      {"end-to-end", EndToEnd},
      {"workbench", WorkbenchLoop},
  };
  int failures = 0;
  for (const auto &[name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
