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

#ifndef PARAFACT_PATTERN_H_
#define PARAFACT_PATTERN_H_

#include <compare>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "parafact/lexicon.h"

namespace parafact {

// Analyst-provided example: head word, expansion word, target slot label and
// slot variable.
struct SeedPattern {
  std::string head;
  std::string expansion;
  std::string etq;
  std::string objet;

  // "head/expansion/etq/objet". Throws ValidationError.
  static SeedPattern Parse(std::string_view text);
  std::string ToString() const;

  friend bool operator==(const SeedPattern &, const SeedPattern &) = default;
};

enum class Schema { kPlus, kMinus };
enum class RowStatus { kProposed, kAccepted, kRejected };

std::string_view SchemaSign(Schema schema);
std::string_view RowStatusName(RowStatus status);
RowStatus ParseRowStatus(std::string_view text);

// Where a row was observed: sentence plus head and expansion token indices.
struct Provenance {
  std::string doc_id;
  int sentence = 0;
  int head = 0;
  int expansion = 0;

  friend auto operator<=>(const Provenance &, const Provenance &) = default;
};

// One line of the constraint table.
struct PatternRow {
  Schema schema = Schema::kPlus;
  std::string elt1;
  Pos cat1 = Pos::kN;
  std::string elt2;
  Pos cat2 = Pos::kN;
  double score = 0;
  std::string etq;
  std::string objet;
  RowStatus status = RowStatus::kProposed;
  std::set<Provenance> provenance;

  // Stable identity: hash of (elt1, cat1, elt2, cat2, etq).
  std::string Id() const;
  std::string Key() const;
};

// + for nominal predicates, - for verbal ones.
Schema DefaultSchema(Pos cat1);

// Ordered rows, unique on (elt1, cat1, elt2, cat2, etq).
class PatternTable {
 public:
  PatternTable() = default;

  const std::vector<PatternRow> &rows() const { return rows_; }
  std::vector<PatternRow> &mutable_rows() { return rows_; }
  size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  // Throws ValidationError on a duplicate key.
  void Add(PatternRow row);
  const PatternRow *Find(std::string_view id) const;
  PatternRow *FindMutable(std::string_view id);

  PatternTable Accepted() const;

  // TSV with header SCHEMA ELT1 CAT1 ELT2 CAT2 SCORE ETQ OBJET STATUS; scores
  // with six decimals.
  void WriteTsv(std::ostream &out) const;
  std::string ToTsv() const;
  static PatternTable ReadTsv(std::istream &in, const std::string &source = "<table>");
  static PatternTable ReadTsvFile(const std::filesystem::path &path);

 private:
  std::vector<PatternRow> rows_;
};

}  // namespace parafact

#endif  // PARAFACT_PATTERN_H_
