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

#include "parafact/acquisition.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "parafact/error.h"

namespace parafact {

bool IsPredicative(std::string_view lemma, Pos pos, const Lexicon &lexicon) {
  if (pos == Pos::kV) return true;
  return pos == Pos::kN && lexicon.IsPredicativeNoun(lemma);
}

std::vector<PatternRow> AcquireSentence(const SeedPattern &seed, const Sentence &sentence,
                                        const SemanticNet &net, const Lexicon &lexicon,
                                        double threshold) {
  if (!(threshold >= 0)) throw ValidationError("threshold must be >= 0");
  std::vector<PatternRow> rows;
  const std::vector<int> plain = sentence.PlainWords();
  for (size_t k = 0; k < plain.size(); ++k) {
    const Token &head = sentence.tokens[plain[k]];
    Proximity prox1 = net.Distance(seed.head, head.key());
    if (!prox1.Within(threshold)) continue;
    if (k + 1 == plain.size()) break;
    const Token &exp = sentence.tokens[plain[k + 1]];
    Proximity prox2 = net.Distance(seed.expansion, exp.key());
    if (!prox2.Within(threshold)) continue;
    const Chunk *chunk = sentence.ChunkOf(plain[k]);
    if (!chunk || !chunk->Contains(plain[k + 1])) continue;
    if (!IsPredicative(head.lemma, head.pos, lexicon)) continue;

    PatternRow row;
    row.elt1 = head.key();
    row.cat1 = head.pos;
    row.elt2 = exp.key();
    row.cat2 = exp.pos;
    row.schema = DefaultSchema(row.cat1);
    row.score = prox1.value() + prox2.value();
    row.etq = seed.etq;
    row.objet = seed.objet;
    row.status = RowStatus::kProposed;
    row.provenance.insert({sentence.doc_id, sentence.index, plain[k], plain[k + 1]});
    rows.push_back(std::move(row));
  }
  return rows;
}

PatternTable MergeRows(std::vector<PatternRow> rows) {
  std::map<std::string, PatternRow> merged;
  for (PatternRow &row : rows) {
    std::string key = row.Key();
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(std::move(key), std::move(row));
      continue;
    }
    PatternRow &kept = it->second;
    kept.score = std::min(kept.score, row.score);
    kept.provenance.insert(row.provenance.begin(), row.provenance.end());
  }
  std::vector<PatternRow> sorted;
  sorted.reserve(merged.size());
  for (auto &[key, row] : merged) sorted.push_back(std::move(row));
  std::stable_sort(sorted.begin(), sorted.end(), [](const PatternRow &a, const PatternRow &b) {
    return std::tie(a.score, a.elt1, a.cat1, a.elt2, a.cat2, a.etq) <
           std::tie(b.score, b.elt1, b.cat1, b.elt2, b.cat2, b.etq);
  });
  PatternTable table;
  for (PatternRow &row : sorted) table.mutable_rows().push_back(std::move(row));
  return table;
}

namespace serial {

PatternTable AcquireCorpus(const SeedPattern &seed, std::span<const Sentence> sentences,
                           const SemanticNet &net, const Lexicon &lexicon,
                           double threshold) {
  std::vector<PatternRow> rows;
  for (const Sentence &s : sentences) {
    auto found = AcquireSentence(seed, s, net, lexicon, threshold);
    std::move(found.begin(), found.end(), std::back_inserter(rows));
  }
  return MergeRows(std::move(rows));
}

}  // namespace serial

PatternTable AcquireCorpus(const SeedPattern &seed, std::span<const Sentence> sentences,
                           const SemanticNet &net, const Lexicon &lexicon,
                           double threshold) {
  if (!(threshold >= 0)) throw ValidationError("threshold must be >= 0");
  const long n = static_cast<long>(sentences.size());
  std::vector<std::vector<PatternRow>> parts(sentences.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    parts[i] = AcquireSentence(seed, sentences[i], net, lexicon, threshold);
  }
  std::vector<PatternRow> rows;
  for (auto &part : parts) std::move(part.begin(), part.end(), std::back_inserter(rows));
  return MergeRows(std::move(rows));
}

}  // namespace parafact
