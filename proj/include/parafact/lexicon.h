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

#ifndef PARAFACT_LEXICON_H_
#define PARAFACT_LEXICON_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parafact {

// Coarse part of speech: noun, verb, adjective, determiner, preposition,
// other.
enum class Pos : uint8_t { kN = 0, kV, kA, kD, kP, kX };

inline constexpr int kPosCount = 6;

// Bit set over Pos.
using PosSet = uint8_t;

constexpr PosSet PosBit(Pos pos) { return static_cast<PosSet>(1u << static_cast<int>(pos)); }

char PosLetter(Pos pos);
std::optional<Pos> ParsePos(std::string_view text);
// "N", "NV", ... in enum order; "-" for the empty set.
std::string PosSetString(PosSet set);
std::optional<PosSet> ParsePosSet(std::string_view text);

struct LexiconEntry {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::kX;
  bool predicative = false;

  friend bool operator==(const LexiconEntry &, const LexiconEntry &) = default;
};

// Surface -> entries, case-folded. Surfaces may be ambiguous; entries keep
// file order, so the first entry is the preferred reading.
class Lexicon {
 public:
  // One entry per line: <surface> <lemma> <POS> [pred], tab or space
  // separated. '#' lines and blank lines are skipped.
  static Lexicon Load(std::istream &in, const std::string &source = "<lexicon>");
  static Lexicon LoadFile(const std::filesystem::path &path);

  void Add(LexiconEntry entry);

  bool empty() const { return by_surface_.empty(); }
  size_t size() const { return entry_count_; }

  // Empty when the surface is unknown.
  const std::vector<LexiconEntry> &Lookup(std::string_view surface) const;
  PosSet TagsOf(std::string_view surface) const;

  bool HasLemma(std::string_view lemma) const;
  // Lowercased inflected surfaces of a lemma, sorted and unique.
  std::vector<std::string> SurfacesOf(std::string_view lemma) const;
  // True if some noun entry with this lemma carries the predicative flag.
  bool IsPredicativeNoun(std::string_view lemma) const;

 private:
  std::map<std::string, std::vector<LexiconEntry>, std::less<>> by_surface_;
  std::map<std::string, std::vector<LexiconEntry>, std::less<>> by_lemma_;
  size_t entry_count_ = 0;
};

}  // namespace parafact

#endif  // PARAFACT_LEXICON_H_
