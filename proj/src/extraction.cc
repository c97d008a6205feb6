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

#include "parafact/extraction.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <tuple>

#include "parafact/error.h"
#include "parafact/text.h"

namespace parafact {

SlotMap DefaultSlotMap() {
  return {
      {"entreprise_acheteuse", "arg1"},
      {"entreprise_achetee", "arg2"},
      {"entreprise_vendeuse", "arg3"},
  };
}

std::string SlotFor(const SlotMap &slots, const std::string &etq) {
  auto it = slots.find(etq);
  return it == slots.end() ? etq : it->second;
}

std::string NormalizeFiller(const Sentence &sentence, int start, int end) {
  while (start < end && !sentence.tokens[start].entity_class &&
         sentence.tokens[start].pos == Pos::kD) {
    ++start;
  }
  std::string out;
  for (int i = start; i < end; ++i) {
    const Token &t = sentence.tokens[i];
    if (i > start && !t.space_before.empty()) out += ' ';
    out += t.entity_class ? t.raw : ToLower(t.surface);
  }
  return out;
}

std::pair<int, int> CaptureSpan(const Sentence &sentence, int token) {
  if (sentence.tokens[token].entity_class) return {token, token + 1};
  const Chunk *chunk = sentence.ChunkOf(token);
  return {token, chunk ? chunk->end : token + 1};
}

std::vector<ExtractionRecord> ExtractSentence(const CompiledGraph &graph,
                                              const Sentence &sentence,
                                              const SlotMap &slots) {
  std::vector<ExtractionRecord> records;
  if (graph.state_count() == 0) return records;
  const int n = static_cast<int>(sentence.tokens.size());
  std::vector<std::string> lowered;
  lowered.reserve(n);
  for (const Token &t : sentence.tokens) lowered.push_back(ToLower(t.surface));

  std::map<std::string, int> next_free;
  std::vector<int> path;
  for (int start = 0; start < n; ++start) {
    struct Best {
      int end;
      int nfa;
    };
    std::map<std::string, Best> best;
    path.clear();
    int state = graph.start();
    for (int i = start; i < n; ++i) {
      int t = graph.Step(state, {lowered[i], sentence.tokens[i].tags});
      if (t < 0) break;
      path.push_back(t);
      state = graph.transition(t).to;
      std::set<std::string> seen;
      for (int nfa : graph.state(state).accept_nfa) {
        const std::string slot =
            SlotFor(slots, graph.instantiations()[graph.InstantiationOf(nfa)].etq);
        if (seen.insert(slot).second) best[slot] = {i + 1, nfa};
      }
    }
    for (const auto &[slot, match] : best) {
      auto free = next_free.find(slot);
      if (free != next_free.end() && start < free->second) continue;
      std::span<const int> steps(path.data(), match.end - start);
      int capture = graph.CaptureStep(steps, match.nfa);
      if (capture < 0) continue;
      auto [filler_start, filler_end] = CaptureSpan(sentence, start + capture);
      const auto &inst = graph.instantiations()[graph.InstantiationOf(match.nfa)];
      ExtractionRecord r;
      r.doc_id = sentence.doc_id;
      r.sentence = sentence.index;
      r.slot = slot;
      r.filler = NormalizeFiller(sentence, filler_start, filler_end);
      r.filler_start = filler_start;
      r.filler_end = filler_end;
      r.pattern_row = inst.row_id;
      r.match_start = start;
      r.match_end = std::max(match.end, filler_end);
      next_free[slot] = r.match_end;
      records.push_back(std::move(r));
    }
  }
  return records;
}

namespace serial {

std::vector<ExtractionRecord> Extract(const CompiledGraph &graph,
                                      std::span<const Sentence> sentences,
                                      const SlotMap &slots) {
  std::vector<ExtractionRecord> out;
  for (const Sentence &s : sentences) {
    auto found = ExtractSentence(graph, s, slots);
    std::move(found.begin(), found.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace serial

std::vector<ExtractionRecord> Extract(const CompiledGraph &graph,
                                      std::span<const Sentence> sentences,
                                      const SlotMap &slots) {
  const long n = static_cast<long>(sentences.size());
  std::vector<std::vector<ExtractionRecord>> parts(sentences.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    parts[i] = ExtractSentence(graph, sentences[i], slots);
  }
  std::vector<ExtractionRecord> out;
  for (auto &part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

std::vector<ExtractionRecord> DedupePerDocument(std::vector<ExtractionRecord> records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const ExtractionRecord &a, const ExtractionRecord &b) {
                     return std::tie(a.doc_id, a.sentence, a.match_start) <
                            std::tie(b.doc_id, b.sentence, b.match_start);
                   });
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  std::vector<ExtractionRecord> out;
  for (ExtractionRecord &r : records) {
    if (seen.emplace(r.doc_id, r.slot, r.filler).second) out.push_back(std::move(r));
  }
  return out;
}

void WriteRecordsTsv(std::ostream &out, std::span<const ExtractionRecord> records) {
  out << "DOC\tSENT\tSLOT\tFILLER\tPATTERN_ROW\tMATCH_START\tMATCH_END\n";
  for (const ExtractionRecord &r : records) {
    out << r.doc_id << '\t' << r.sentence << '\t' << r.slot << '\t' << r.filler << '\t'
        << r.pattern_row << '\t' << r.match_start << '\t' << r.match_end << '\n';
  }
}

std::vector<ExtractionRecord> ReadRecordsTsv(std::istream &in, const std::string &source) {
  std::vector<ExtractionRecord> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1) {
      if (line.rfind("DOC\tSENT\tSLOT", 0) != 0) throw ParseError(source, 1, "bad records header");
      continue;
    }
    if (Trim(line).empty()) continue;
    auto f = Split(line, '\t');
    if (f.size() != 7) throw ParseError(source, lineno, "expected 7 columns");
    ExtractionRecord r;
    try {
      r.doc_id = std::string(f[0]);
      r.sentence = std::stoi(std::string(f[1]));
      r.slot = std::string(f[2]);
      r.filler = std::string(f[3]);
      r.pattern_row = std::string(f[4]);
      r.match_start = std::stoi(std::string(f[5]));
      r.match_end = std::stoi(std::string(f[6]));
    } catch (const std::exception &) {
      throw ParseError(source, lineno, "bad number");
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<ExtractionRecord> ReadRecordsTsvFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return ReadRecordsTsv(in, path.string());
}

}  // namespace parafact
