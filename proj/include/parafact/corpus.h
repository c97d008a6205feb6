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

#ifndef PARAFACT_CORPUS_H_
#define PARAFACT_CORPUS_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parafact/lexicon.h"

namespace parafact {

struct Token {
  // Text form used for matching. For normalized entities this is "*<class>*".
  std::string surface;
  std::string lemma;
  Pos pos = Pos::kX;
  // Every POS the lexicon allows for this surface; drives chunking and
  // automaton matching. Empty for punctuation.
  PosSet tags = 0;
  bool plain = false;
  bool punct = false;
  std::optional<std::string> entity_class;
  // Original bytes covered by the token and the whitespace preceding it.
  std::string raw;
  std::string space_before;

  // Word used for semantic-net lookups and pattern rows: the entity class
  // for normalized entities, the lemma otherwise.
  const std::string &key() const { return entity_class ? *entity_class : lemma; }
};

enum class ChunkKind { kNP, kVP };

struct Chunk {
  int start = 0;  // token index, inclusive
  int end = 0;    // exclusive
  ChunkKind kind = ChunkKind::kNP;

  bool Contains(int token) const { return token >= start && token < end; }
  friend bool operator==(const Chunk &, const Chunk &) = default;
};

struct Sentence {
  std::string doc_id;
  int index = 0;
  std::vector<Token> tokens;
  std::vector<Chunk> chunks;
  // Whitespace after the last token (document tail only).
  std::string trailing;

  // Indices of plain words in token order.
  std::vector<int> PlainWords() const;
  // The chunk holding `token`, or nullptr.
  const Chunk *ChunkOf(int token) const;
  // Original text of the sentence including separators.
  std::string Text() const;
};

// Full-name -> entity class table. Names may span several tokens.
class Gazetteer {
 public:
  // <surface><TAB><class> per line.
  static Gazetteer Load(std::istream &in, const std::string &source = "<gazetteer>");
  static Gazetteer LoadFile(const std::filesystem::path &path);

  void Add(std::string_view name, std::string_view entity_class);
  bool empty() const { return by_first_.empty(); }

  // Longest name starting at tokens[start]; returns the number of tokens
  // matched (0 if none) and sets *entity_class.
  int LongestMatch(std::span<const Token> tokens, size_t start,
                   std::string *entity_class) const;

 private:
  struct Name {
    std::vector<std::string> parts;
    std::string entity_class;
  };
  // First token -> candidate names, longest first.
  std::map<std::string, std::vector<Name>, std::less<>> by_first_;
};

// Lowercased words.
using Stopwords = std::set<std::string, std::less<>>;
Stopwords LoadStopwords(std::istream &in);
Stopwords LoadStopwordsFile(const std::filesystem::path &path);

struct Document {
  std::string id;
  std::string text;
};

// One document per regular file, id = file stem, sorted by id.
std::vector<Document> LoadCorpusDir(const std::filesystem::path &dir);

bool IsEntitySurface(std::string_view surface);

// POS tags a token with this surface gets during analysis.
PosSet TokenTags(std::string_view surface, const Lexicon &lexicon);

// Splits on whitespace and punctuation with French elision (l', d', qu'...).
// Tokens carry raw text and leading whitespace only; *trailing receives the
// whitespace after the last token.
std::vector<Token> Tokenize(std::string_view text, std::string *trailing = nullptr);

// Replaces gazetteer hits (longest match) with a single entity token.
std::vector<Token> NormalizeEntities(std::vector<Token> tokens,
                                     const Gazetteer &gazetteer);

// Shallow chunks over token tags: NP = D? (A|N)* N (P D? (A|N)* N)*,
// VP = verb cluster followed by an optional NP.
std::vector<Chunk> ChunkTokens(std::span<const Token> tokens);

// Tokenize, normalize, look up, mark plain words, sentence-split and chunk.
std::vector<Sentence> Analyze(std::string_view doc_id, std::string_view text,
                              const Lexicon &lexicon, const Gazetteer &gazetteer,
                              const Stopwords &stopwords);

// Analyzes documents in parallel; output ordered by (doc id, sentence index).
std::vector<Sentence> AnalyzeCorpus(std::span<const Document> docs,
                                    const Lexicon &lexicon,
                                    const Gazetteer &gazetteer,
                                    const Stopwords &stopwords);

namespace serial {
std::vector<Sentence> AnalyzeCorpus(std::span<const Document> docs,
                                    const Lexicon &lexicon,
                                    const Gazetteer &gazetteer,
                                    const Stopwords &stopwords);
}  // namespace serial

}  // namespace parafact

#endif  // PARAFACT_CORPUS_H_
