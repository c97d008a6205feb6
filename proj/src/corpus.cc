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

#include "parafact/corpus.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "parafact/error.h"
#include "parafact/text.h"

namespace parafact {

namespace {

bool IsSpaceByte(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Length in bytes of a punctuation mark at text[i], or 0.
size_t PunctLength(std::string_view text, size_t i) {
  static constexpr std::string_view kAscii = ".,;:!?()[]\"";
  if (kAscii.find(text[i]) != std::string_view::npos) return 1;
  static constexpr std::string_view kMulti[] = {
      "\xC2\xAB", "\xC2\xBB",              // « »
      "\xE2\x80\xA6",                      // …
      "\xE2\x80\x93", "\xE2\x80\x94",      // en dash, em dash
  };
  for (std::string_view p : kMulti) {
    if (text.substr(i, p.size()) == p) return p.size();
  }
  return 0;
}

// Length of an apostrophe at text[i], or 0.
size_t ApostropheLength(std::string_view text, size_t i) {
  if (text[i] == '\'') return 1;
  if (text.substr(i, 3) == "\xE2\x80\x99") return 3;  // ’
  return 0;
}

bool IsElisionPrefix(std::string_view word) {
  static const std::set<std::string, std::less<>> kPrefixes = {
      "l", "d", "qu", "j", "n", "s", "c", "m", "t", "jusqu", "lorsqu", "puisqu"};
  return kPrefixes.count(ToLower(word)) > 0;
}

bool IsTerminal(std::string_view surface) {
  return surface == "." || surface == "!" || surface == "?" ||
         surface == "\xE2\x80\xA6";
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

// --- Gazetteer --------------------------------------------------------------

Gazetteer Gazetteer::Load(std::istream &in, const std::string &source) {
  Gazetteer gazetteer;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || Trim(line).front() == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 2 || Trim(fields[0]).empty() || Trim(fields[1]).empty()) {
      throw ParseError(source, lineno, "expected: <surface><TAB><class>");
    }
    gazetteer.Add(Trim(fields[0]), Trim(fields[1]));
  }
  return gazetteer;
}

Gazetteer Gazetteer::LoadFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return Load(in, path.string());
}

void Gazetteer::Add(std::string_view name, std::string_view entity_class) {
  Name entry;
  for (const Token &t : Tokenize(name)) entry.parts.push_back(t.raw);
  if (entry.parts.empty()) return;
  entry.entity_class = std::string(entity_class);
  auto &names = by_first_[entry.parts.front()];
  names.push_back(std::move(entry));
  std::stable_sort(names.begin(), names.end(), [](const Name &a, const Name &b) {
    return a.parts.size() > b.parts.size();
  });
}

int Gazetteer::LongestMatch(std::span<const Token> tokens, size_t start,
                            std::string *entity_class) const {
  auto it = by_first_.find(tokens[start].raw);
  if (it == by_first_.end()) return 0;
  for (const Name &name : it->second) {
    if (start + name.parts.size() > tokens.size()) continue;
    bool match = true;
    for (size_t k = 1; k < name.parts.size() && match; ++k) {
      match = tokens[start + k].raw == name.parts[k];
    }
    if (match) {
      *entity_class = name.entity_class;
      return static_cast<int>(name.parts.size());
    }
  }
  return 0;
}

// --- Stopwords and corpus files ---------------------------------------------

Stopwords LoadStopwords(std::istream &in) {
  Stopwords words;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view w = Trim(line);
    if (w.empty() || w.front() == '#') continue;
    words.insert(ToLower(w));
  }
  return words;
}

Stopwords LoadStopwordsFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return LoadStopwords(in);
}

std::vector<Document> LoadCorpusDir(const std::filesystem::path &dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error("not a directory: " + dir.string());
  }
  std::vector<Document> docs;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    docs.push_back({entry.path().stem().string(), text.str()});
  }
  std::sort(docs.begin(), docs.end(),
            [](const Document &a, const Document &b) { return a.id < b.id; });
  return docs;
}

// --- Tokens -----------------------------------------------------------------

bool IsEntitySurface(std::string_view surface) {
  return surface.size() > 2 && surface.front() == '*' && surface.back() == '*' &&
         surface.substr(1, surface.size() - 2).find('*') == std::string_view::npos;
}

static bool IsPunctSurface(std::string_view surface) {
  return !surface.empty() && PunctLength(surface, 0) == surface.size();
}

PosSet TokenTags(std::string_view surface, const Lexicon &lexicon) {
  if (IsEntitySurface(surface)) return PosBit(Pos::kN);
  if (IsPunctSurface(surface)) return 0;
  PosSet tags = lexicon.TagsOf(surface);
  return tags ? tags : PosBit(Pos::kX);
}

std::vector<Token> Tokenize(std::string_view text, std::string *trailing) {
  std::vector<Token> tokens;
  std::string space;
  std::string word;

  auto flush = [&]() {
    if (word.empty()) return;
    Token t;
    t.raw = word;
    t.surface = word;
    for (size_t at; (at = t.surface.find("\xE2\x80\x99")) != std::string::npos;) {
      t.surface.replace(at, 3, "'");
    }
    t.space_before = std::move(space);
    space.clear();
    tokens.push_back(std::move(t));
    word.clear();
  };

  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (IsSpaceByte(c)) {
      flush();
      space += c;
      ++i;
      continue;
    }
    if (size_t n = ApostropheLength(text, i)) {
      word.append(text.substr(i, n));
      i += n;
      if (IsElisionPrefix(std::string_view(word).substr(0, word.size() - n))) flush();
      continue;
    }
    if (size_t n = PunctLength(text, i)) {
      // Decimal point inside a number stays in the word.
      if (c == '.' && !word.empty() && IsDigit(word.back()) && i + 1 < text.size() &&
          IsDigit(text[i + 1])) {
        word += c;
        ++i;
        continue;
      }
      flush();
      Token t;
      t.raw = std::string(text.substr(i, n));
      t.surface = t.raw;
      t.punct = true;
      t.space_before = std::move(space);
      space.clear();
      tokens.push_back(std::move(t));
      i += n;
      continue;
    }
    word += c;
    ++i;
  }
  flush();
  if (trailing) *trailing = space;
  return tokens;
}

std::vector<Token> NormalizeEntities(std::vector<Token> tokens,
                                     const Gazetteer &gazetteer) {
  if (gazetteer.empty()) return tokens;
  std::vector<Token> out;
  out.reserve(tokens.size());
  std::string entity_class;
  for (size_t i = 0; i < tokens.size();) {
    int n = gazetteer.LongestMatch(tokens, i, &entity_class);
    if (n == 0) {
      out.push_back(std::move(tokens[i]));
      ++i;
      continue;
    }
    Token t;
    t.space_before = tokens[i].space_before;
    t.raw = tokens[i].raw;
    for (int k = 1; k < n; ++k) t.raw += tokens[i + k].space_before + tokens[i + k].raw;
    t.surface = "*" + entity_class + "*";
    t.lemma = t.surface;
    t.pos = Pos::kN;
    t.tags = PosBit(Pos::kN);
    t.plain = true;
    t.entity_class = entity_class;
    out.push_back(std::move(t));
    i += n;
  }
  return out;
}

// --- Chunking ---------------------------------------------------------------

namespace {

bool Has(const Token &t, Pos pos) { return (t.tags & PosBit(pos)) != 0; }

// Longest NP starting at `start`; returns end or `start` when none.
//   s0 -D-> s1, s0 -e-> s1
//   s1 -A|N-> s1, s1 -N-> s2 (final)
//   s2 -P-> s3, s3 -D-> s1, s3 -e-> s1
int MatchNP(std::span<const Token> tokens, int start) {
  enum : unsigned { S0 = 1, S1 = 2, S2 = 4, S3 = 8 };
  auto closure = [](unsigned set) {
    if (set & S0) set |= S1;
    if (set & S3) set |= S1;
    return set;
  };
  unsigned set = closure(S0);
  int best = start;
  for (int i = start; i < static_cast<int>(tokens.size()) && set; ++i) {
    const Token &t = tokens[i];
    unsigned next = 0;
    if ((set & S0) && Has(t, Pos::kD)) next |= S1;
    if ((set & S3) && Has(t, Pos::kD)) next |= S1;
    if ((set & S1) && (Has(t, Pos::kA) || Has(t, Pos::kN))) next |= S1;
    if ((set & S1) && Has(t, Pos::kN)) next |= S2;
    if ((set & S2) && Has(t, Pos::kP)) next |= S3;
    set = closure(next);
    if (set & S2) best = i + 1;
  }
  return best;
}

// Verb cluster: V (P? X? V)*, e.g. "a été", "renoncer à se porter".
int MatchVerbCluster(std::span<const Token> tokens, int start) {
  enum : unsigned { C0 = 1, C1 = 2, C2 = 4, C3 = 8 };
  unsigned set = C0;
  int best = start;
  for (int i = start; i < static_cast<int>(tokens.size()) && set; ++i) {
    const Token &t = tokens[i];
    unsigned next = 0;
    bool v = Has(t, Pos::kV);
    if ((set & (C0 | C1 | C2 | C3)) && v) next |= C1;
    if ((set & C1) && Has(t, Pos::kP)) next |= C2;
    if ((set & (C1 | C2)) && Has(t, Pos::kX)) next |= C3;
    set = next;
    if (set & C1) best = i + 1;
  }
  return best;
}

}  // namespace

std::vector<Chunk> ChunkTokens(std::span<const Token> tokens) {
  std::vector<Chunk> chunks;
  const int n = static_cast<int>(tokens.size());
  int i = 0;
  while (i < n) {
    int verb_end = MatchVerbCluster(tokens, i);
    if (verb_end > i) {
      int np_end = MatchNP(tokens, verb_end);
      chunks.push_back({i, np_end, ChunkKind::kVP});
      i = np_end;
      continue;
    }
    int np_end = MatchNP(tokens, i);
    if (np_end > i) {
      chunks.push_back({i, np_end, ChunkKind::kNP});
      i = np_end;
      continue;
    }
    ++i;
  }
  return chunks;
}

// --- Sentences --------------------------------------------------------------

std::vector<int> Sentence::PlainWords() const {
  std::vector<int> plain;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].plain) plain.push_back(static_cast<int>(i));
  }
  return plain;
}

const Chunk *Sentence::ChunkOf(int token) const {
  for (const Chunk &c : chunks) {
    if (c.Contains(token)) return &c;
  }
  return nullptr;
}

std::string Sentence::Text() const {
  std::string text;
  for (const Token &t : tokens) text += t.space_before + t.raw;
  return text + trailing;
}

std::vector<Sentence> Analyze(std::string_view doc_id, std::string_view text,
                              const Lexicon &lexicon, const Gazetteer &gazetteer,
                              const Stopwords &stopwords) {
  std::string trailing;
  std::vector<Token> tokens = NormalizeEntities(Tokenize(text, &trailing), gazetteer);

  for (Token &t : tokens) {
    if (t.entity_class) continue;
    if (t.punct) {
      t.lemma = t.surface;
      t.pos = Pos::kX;
      t.tags = 0;
      t.plain = false;
      continue;
    }
    if (IsEntitySurface(t.surface)) {
      t.entity_class = t.surface.substr(1, t.surface.size() - 2);
      t.lemma = t.surface;
      t.pos = Pos::kN;
      t.tags = PosBit(Pos::kN);
      t.plain = true;
      continue;
    }
    const auto &entries = lexicon.Lookup(t.surface);
    if (entries.empty()) {
      t.lemma = ToLower(t.surface);
      t.pos = Pos::kX;
    } else {
      t.lemma = entries.front().lemma;
      t.pos = entries.front().pos;
    }
    t.tags = TokenTags(t.surface, lexicon);
    t.plain = !stopwords.count(ToLower(t.surface)) && t.pos != Pos::kD &&
              t.pos != Pos::kP;
  }

  std::vector<Sentence> sentences;
  Sentence current;
  auto close = [&]() {
    if (current.tokens.empty()) return;
    current.doc_id = std::string(doc_id);
    current.index = static_cast<int>(sentences.size());
    current.chunks = ChunkTokens(current.tokens);
    sentences.push_back(std::move(current));
    current = Sentence();
  };
  for (Token &t : tokens) {
    bool terminal = t.punct && IsTerminal(t.surface);
    current.tokens.push_back(std::move(t));
    if (terminal) close();
  }
  close();
  if (!sentences.empty()) sentences.back().trailing = trailing;
  return sentences;
}

namespace serial {

std::vector<Sentence> AnalyzeCorpus(std::span<const Document> docs,
                                    const Lexicon &lexicon,
                                    const Gazetteer &gazetteer,
                                    const Stopwords &stopwords) {
  std::vector<const Document *> order;
  for (const Document &d : docs) order.push_back(&d);
  std::stable_sort(order.begin(), order.end(),
                   [](const Document *a, const Document *b) { return a->id < b->id; });
  std::vector<Sentence> out;
  for (const Document *d : order) {
    auto sentences = Analyze(d->id, d->text, lexicon, gazetteer, stopwords);
    std::move(sentences.begin(), sentences.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace serial

std::vector<Sentence> AnalyzeCorpus(std::span<const Document> docs,
                                    const Lexicon &lexicon,
                                    const Gazetteer &gazetteer,
                                    const Stopwords &stopwords) {
  std::vector<const Document *> order;
  for (const Document &d : docs) order.push_back(&d);
  std::stable_sort(order.begin(), order.end(),
                   [](const Document *a, const Document *b) { return a->id < b->id; });
  const long n = static_cast<long>(order.size());
  std::vector<std::vector<Sentence>> parts(order.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    parts[i] = Analyze(order[i]->id, order[i]->text, lexicon, gazetteer, stopwords);
  }
  std::vector<Sentence> out;
  for (auto &part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

}  // namespace parafact
