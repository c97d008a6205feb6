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

#include "parafact/lexicon.h"

#include <algorithm>
#include <fstream>
#include <istream>

#include "parafact/error.h"
#include "parafact/text.h"

namespace parafact {

namespace {
constexpr char kLetters[] = "NVADPX";
const std::vector<LexiconEntry> kNoEntries;
}  // namespace

char PosLetter(Pos pos) { return kLetters[static_cast<int>(pos)]; }

std::optional<Pos> ParsePos(std::string_view text) {
  if (text.size() != 1) return std::nullopt;
  for (int i = 0; i < kPosCount; ++i) {
    if (kLetters[i] == text[0]) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

std::string PosSetString(PosSet set) {
  std::string out;
  for (int i = 0; i < kPosCount; ++i) {
    if (set & (1u << i)) out += kLetters[i];
  }
  return out.empty() ? "-" : out;
}

std::optional<PosSet> ParsePosSet(std::string_view text) {
  if (text == "-") return PosSet{0};
  PosSet set = 0;
  for (char c : text) {
    auto pos = ParsePos(std::string_view(&c, 1));
    if (!pos) return std::nullopt;
    set |= PosBit(*pos);
  }
  return set;
}

Lexicon Lexicon::Load(std::istream &in, const std::string &source) {
  Lexicon lexicon;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto fields = SplitWhitespace(body);
    if (fields.size() < 3 || fields.size() > 4) {
      throw ParseError(source, lineno, "expected: <surface> <lemma> <POS> [pred]");
    }
    auto pos = ParsePos(fields[2]);
    if (!pos) {
      throw ParseError(source, lineno, "unknown POS " + std::string(fields[2]));
    }
    bool pred = false;
    if (fields.size() == 4) {
      if (fields[3] != "pred") {
        throw ParseError(source, lineno, "expected 'pred', got " + std::string(fields[3]));
      }
      pred = true;
    }
    lexicon.Add({std::string(fields[0]), std::string(fields[1]), *pos, pred});
  }
  return lexicon;
}

Lexicon Lexicon::LoadFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return Load(in, path.string());
}

void Lexicon::Add(LexiconEntry entry) {
  by_lemma_[ToLower(entry.lemma)].push_back(entry);
  by_surface_[ToLower(entry.surface)].push_back(std::move(entry));
  ++entry_count_;
}

const std::vector<LexiconEntry> &Lexicon::Lookup(std::string_view surface) const {
  auto it = by_surface_.find(ToLower(surface));
  return it == by_surface_.end() ? kNoEntries : it->second;
}

PosSet Lexicon::TagsOf(std::string_view surface) const {
  PosSet set = 0;
  for (const LexiconEntry &e : Lookup(surface)) set |= PosBit(e.pos);
  return set;
}

bool Lexicon::HasLemma(std::string_view lemma) const {
  return by_lemma_.count(ToLower(lemma)) > 0;
}

std::vector<std::string> Lexicon::SurfacesOf(std::string_view lemma) const {
  std::vector<std::string> out;
  auto it = by_lemma_.find(ToLower(lemma));
  if (it == by_lemma_.end()) return out;
  for (const LexiconEntry &e : it->second) out.push_back(ToLower(e.surface));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Lexicon::IsPredicativeNoun(std::string_view lemma) const {
  auto it = by_lemma_.find(ToLower(lemma));
  if (it == by_lemma_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(), [](const LexiconEntry &e) {
    return e.pos == Pos::kN && e.predicative;
  });
}

}  // namespace parafact
