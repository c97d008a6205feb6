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

#ifndef PARAFACT_EXTRACTION_H_
#define PARAFACT_EXTRACTION_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "parafact/compiled_graph.h"
#include "parafact/corpus.h"

namespace parafact {

struct ExtractionRecord {
  std::string doc_id;
  int sentence = 0;
  std::string slot;
  std::string filler;
  int filler_start = 0;
  int filler_end = 0;
  std::string pattern_row;
  int match_start = 0;
  int match_end = 0;

  friend bool operator==(const ExtractionRecord &, const ExtractionRecord &) = default;
};

// ETQ label -> slot name (arg1 buyer, arg2 bought, arg3 seller). Labels not
// in the map are used as slot names verbatim.
using SlotMap = std::map<std::string, std::string, std::less<>>;
SlotMap DefaultSlotMap();
std::string SlotFor(const SlotMap &slots, const std::string &etq);

// Lowercased words joined with their original spacing, leading determiners
// dropped; entity tokens keep their original text.
std::string NormalizeFiller(const Sentence &sentence, int start, int end);

// Filler span for a capture on `token`: the entity token itself, otherwise
// from the token to the end of its chunk.
std::pair<int, int> CaptureSpan(const Sentence &sentence, int token);

// Leftmost-longest, non-overlapping matches per slot.
std::vector<ExtractionRecord> ExtractSentence(const CompiledGraph &graph,
                                              const Sentence &sentence,
                                              const SlotMap &slots);

// Sentences fanned out over threads; output ordered by (doc, sentence,
// match start) and identical to serial::Extract.
std::vector<ExtractionRecord> Extract(const CompiledGraph &graph,
                                      std::span<const Sentence> sentences,
                                      const SlotMap &slots = DefaultSlotMap());

namespace serial {
std::vector<ExtractionRecord> Extract(const CompiledGraph &graph,
                                      std::span<const Sentence> sentences,
                                      const SlotMap &slots = DefaultSlotMap());
}  // namespace serial

// One record per (doc, slot, filler), keeping the earliest.
std::vector<ExtractionRecord> DedupePerDocument(std::vector<ExtractionRecord> records);

// TSV: DOC SENT SLOT FILLER PATTERN_ROW MATCH_START MATCH_END.
void WriteRecordsTsv(std::ostream &out, std::span<const ExtractionRecord> records);
std::vector<ExtractionRecord> ReadRecordsTsv(std::istream &in,
                                             const std::string &source = "<records>");
std::vector<ExtractionRecord> ReadRecordsTsvFile(const std::filesystem::path &path);

}  // namespace parafact

#endif  // PARAFACT_EXTRACTION_H_
