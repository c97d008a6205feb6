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

#include "parafact/evaluation.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "parafact/error.h"
#include "parafact/text.h"

namespace parafact {

std::vector<GoldAnnotation> ReadGoldTsv(std::istream &in, const std::string &source) {
  std::vector<GoldAnnotation> gold;
  std::set<GoldAnnotation> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line.front() == '#') continue;
    if (lineno == 1 && line.rfind("DOC\tSLOT\tFILLER", 0) == 0) continue;
    auto f = Split(line, '\t');
    if (f.size() != 3) throw ParseError(source, lineno, "expected: DOC SLOT FILLER");
    GoldAnnotation g{std::string(f[0]), std::string(f[1]), std::string(f[2])};
    if (!seen.insert(g).second) throw ParseError(source, lineno, "duplicate gold annotation");
    gold.push_back(std::move(g));
  }
  return gold;
}

std::vector<GoldAnnotation> ReadGoldTsvFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return ReadGoldTsv(in, path.string());
}

SlotScore MakeSlotScore(std::string slot, int tp, int fp, int fn) {
  SlotScore s;
  s.slot = std::move(slot);
  s.tp = tp;
  s.fp = fp;
  s.fn = fn;
  s.precision = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
  s.recall = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
  s.f = s.precision + s.recall > 0
            ? 2 * s.precision * s.recall / (s.precision + s.recall)
            : 0.0;
  return s;
}

namespace {
using Key = std::tuple<std::string, std::string, std::string>;  // slot, doc, filler
}

std::vector<SlotScore> Evaluate(std::span<const ExtractionRecord> records,
                                std::span<const GoldAnnotation> gold) {
  std::set<Key> predicted, expected;
  std::set<std::string> slots;
  for (const auto &r : records) {
    predicted.emplace(r.slot, r.doc_id, r.filler);
    slots.insert(r.slot);
  }
  for (const auto &g : gold) {
    expected.emplace(g.slot, g.doc_id, g.filler);
    slots.insert(g.slot);
  }
  std::map<std::string, std::array<int, 3>> counts;
  for (const auto &s : slots) counts[s] = {0, 0, 0};
  for (const Key &k : predicted) {
    ++counts[std::get<0>(k)][expected.count(k) ? 0 : 1];
  }
  for (const Key &k : expected) {
    if (!predicted.count(k)) ++counts[std::get<0>(k)][2];
  }
  std::vector<SlotScore> scores;
  for (const auto &[slot, c] : counts) scores.push_back(MakeSlotScore(slot, c[0], c[1], c[2]));
  return scores;
}

SlotScore Totals(std::span<const SlotScore> scores) {
  int tp = 0, fp = 0, fn = 0;
  for (const SlotScore &s : scores) {
    tp += s.tp;
    fp += s.fp;
    fn += s.fn;
  }
  return MakeSlotScore("total", tp, fp, fn);
}

void WriteReport(std::ostream &out, std::span<const SlotScore> scores) {
  auto line = [&](const SlotScore &s) {
    out << s.slot << '\t' << s.tp << '\t' << s.fp << '\t' << s.fn << '\t'
        << FormatFixed(s.precision, 4) << '\t' << FormatFixed(s.recall, 4) << '\t'
        << FormatFixed(s.f, 4) << '\n';
  };
  out << "SLOT\tTP\tFP\tFN\tP\tR\tF\n";
  for (const SlotScore &s : scores) line(s);
  line(Totals(scores));
}

std::vector<GoldAnnotation> Misses(std::span<const ExtractionRecord> records,
                                   std::span<const GoldAnnotation> gold) {
  std::set<Key> predicted;
  for (const auto &r : records) predicted.emplace(r.slot, r.doc_id, r.filler);
  std::vector<GoldAnnotation> misses;
  for (const auto &g : gold) {
    if (!predicted.count({g.slot, g.doc_id, g.filler})) misses.push_back(g);
  }
  return misses;
}

std::string_view MissCauseName(MissCause cause) {
  switch (cause) {
    case MissCause::kNetGap: return "net-gap";
    case MissCause::kTransformationGap: return "transformation-gap";
    case MissCause::kOther: return "other";
  }
  return "?";
}

namespace {

// Sentence whose normalized text contains the filler.
const Sentence *FindGoldSentence(std::span<const Sentence> sentences,
                                 const GoldAnnotation &miss) {
  for (const Sentence &s : sentences) {
    if (s.doc_id != miss.doc_id) continue;
    std::string text = NormalizeFiller(s, 0, static_cast<int>(s.tokens.size()));
    if (text.find(miss.filler) != std::string::npos) return &s;
  }
  return nullptr;
}

bool RowReachable(const PatternRow &row, const Sentence &s, const SemanticNet &net,
                  double threshold) {
  std::vector<int> plain = s.PlainWords();
  for (int i : plain) {
    if (!net.Distance(row.elt1, s.tokens[i].key()).Within(threshold)) continue;
    for (int j : plain) {
      if (j != i && net.Distance(row.elt2, s.tokens[j].key()).Within(threshold)) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<MissReport> ClassifyMisses(std::span<const GoldAnnotation> misses,
                                       const MissContext &context) {
  if (!context.table || !context.net || !context.graph) {
    throw ValidationError("miss classification needs a table, a net and a graph");
  }
  PatternTable accepted = context.table->Accepted();
  std::vector<MissReport> reports;
  for (const GoldAnnotation &miss : misses) {
    MissReport report{miss.doc_id, -1, miss.slot, MissCause::kOther};
    const Sentence *s = FindGoldSentence(context.sentences, miss);
    if (s) {
      report.sentence = s->index;
      bool reachable = false;
      for (const PatternRow &row : accepted.rows()) {
        if (SlotFor(context.slots, row.etq) != miss.slot) continue;
        if (RowReachable(row, *s, *context.net, context.threshold)) {
          reachable = true;
          break;
        }
      }
      if (!reachable) {
        report.cause = MissCause::kNetGap;
      } else {
        auto found = ExtractSentence(*context.graph, *s, context.slots);
        bool matched = std::any_of(found.begin(), found.end(), [&](const ExtractionRecord &r) {
          return r.slot == miss.slot;
        });
        report.cause = matched ? MissCause::kOther : MissCause::kTransformationGap;
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

void WriteMissReport(std::ostream &out, std::span<const MissReport> reports) {
  out << "DOC\tSENT\tSLOT\tCAUSE\n";
  for (const MissReport &r : reports) {
    out << r.doc_id << '\t' << r.sentence << '\t' << r.slot << '\t'
        << MissCauseName(r.cause) << '\n';
  }
}

}  // namespace parafact
