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

#ifndef PARAFACT_ACQUISITION_H_
#define PARAFACT_ACQUISITION_H_

#include <span>
#include <string_view>
#include <vector>

#include "parafact/corpus.h"
#include "parafact/lexicon.h"
#include "parafact/pattern.h"
#include "parafact/semnet.h"

namespace parafact {

// Verbs are predicates; nouns only when the lexicon flags the lemma.
bool IsPredicative(std::string_view lemma, Pos pos, const Lexicon &lexicon);

// Scans the plain words of one sentence for (head, next plain word) pairs
// that are both within `threshold` of the seed words, share a chunk, and
// whose head is predicative. Score = head distance + expansion distance.
// Throws ValidationError for a negative threshold.
std::vector<PatternRow> AcquireSentence(const SeedPattern &seed, const Sentence &sentence,
                                        const SemanticNet &net, const Lexicon &lexicon,
                                        double threshold);

// Deduplicates on (elt1, cat1, elt2, cat2, etq) keeping the minimum score and
// the union of provenance, then sorts by score, then lexicographically.
PatternTable MergeRows(std::vector<PatternRow> rows);

// Union of AcquireSentence over the corpus, sentences fanned out over
// threads. Output is identical to serial::AcquireCorpus.
PatternTable AcquireCorpus(const SeedPattern &seed, std::span<const Sentence> sentences,
                           const SemanticNet &net, const Lexicon &lexicon,
                           double threshold);

namespace serial {
PatternTable AcquireCorpus(const SeedPattern &seed, std::span<const Sentence> sentences,
                           const SemanticNet &net, const Lexicon &lexicon,
                           double threshold);
}  // namespace serial

}  // namespace parafact

#endif  // PARAFACT_ACQUISITION_H_
