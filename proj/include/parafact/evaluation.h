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

#ifndef PARAFACT_EVALUATION_H_
#define PARAFACT_EVALUATION_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parafact/compiled_graph.h"
#include "parafact/corpus.h"
#include "parafact/extraction.h"
#include "parafact/pattern.h"
#include "parafact/semnet.h"

namespace parafact {

struct GoldAnnotation {
  std::string doc_id;
  std::string slot;
  std::string filler;

  friend auto operator<=>(const GoldAnnotation &, const GoldAnnotation &) = default;
};

// TSV: DOC SLOT FILLER (header optional). Duplicates are rejected.
std::vector<GoldAnnotation> ReadGoldTsv(std::istream &in, const std::string &source = "<gold>");
std::vector<GoldAnnotation> ReadGoldTsvFile(const std::filesystem::path &path);

struct SlotScore {
  std::string slot;
  int tp = 0;
  int fp = 0;
  int fn = 0;
  double precision = 0;
  double recall = 0;
  double f = 0;
};

// Precision, recall and their harmonic mean; 0 for empty denominators.
SlotScore MakeSlotScore(std::string slot, int tp, int fp, int fn);

// Exact match on (doc, slot, filler); one score per slot seen in either
// input, sorted by slot name.
std::vector<SlotScore> Evaluate(std::span<const ExtractionRecord> records,
                                std::span<const GoldAnnotation> gold);

// Micro-averaged totals over the per-slot counts.
SlotScore Totals(std::span<const SlotScore> scores);

// TSV report: SLOT TP FP FN P R F, one line per slot, then "total".
void WriteReport(std::ostream &out, std::span<const SlotScore> scores);

// Gold annotations with no matching record.
std::vector<GoldAnnotation> Misses(std::span<const ExtractionRecord> records,
                                   std::span<const GoldAnnotation> gold);

enum class MissCause { kNetGap, kTransformationGap, kOther };
std::string_view MissCauseName(MissCause cause);

struct MissReport {
  std::string doc_id;
  int sentence = -1;  // -1 when the filler is not found in the document
  std::string slot;
  MissCause cause = MissCause::kOther;
};

struct MissContext {
  std::span<const Sentence> sentences;
  const PatternTable *table = nullptr;
  const SemanticNet *net = nullptr;
  double threshold = 0;
  const CompiledGraph *graph = nullptr;
  SlotMap slots = DefaultSlotMap();
};

// For each miss, locates the sentence holding the filler and decides why
// it was not extracted:
//   net-gap: no accepted row for the slot has both of its words within the
//            threshold of two distinct plain words of the sentence;
//   transformation-gap: some row's words are there but the compiled graph
//            produces no match for the slot in that sentence;
//   other: anything else.
std::vector<MissReport> ClassifyMisses(std::span<const GoldAnnotation> misses,
                                       const MissContext &context);

// TSV: DOC SENT SLOT CAUSE.
void WriteMissReport(std::ostream &out, std::span<const MissReport> reports);

}  // namespace parafact

#endif  // PARAFACT_EVALUATION_H_
