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

#ifndef PARAFACT_METAGRAPH_H_
#define PARAFACT_METAGRAPH_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parafact/lexicon.h"
#include "parafact/pattern.h"

namespace parafact {

enum class Structure { kSubjectVerb, kVerbDobj, kVerbIobj, kNounPoss };

std::string_view StructureName(Structure structure);
std::optional<Structure> ParseStructure(std::string_view text);

// Constraint-table columns a guard may test. Letters A..H name them in
// table order.
enum class Column { kSchema, kElt1, kCat1, kElt2, kCat2, kScore, kEtq, kObjet };

std::optional<Column> ParseColumn(std::string_view text);
std::string ColumnValue(const PatternRow &row, Column column);

struct GuardTest {
  Column column;
  std::string value;
};

// Token predicate on a template transition.
struct Predicate {
  enum class Kind { kLiteral, kSlot1, kSlot2, kPos, kModifierLoop, kEpsilon };
  Kind kind = Kind::kEpsilon;
  std::string word;  // kLiteral, lowercased
  Pos pos = Pos::kX;  // kPos
};

struct TemplateEdge {
  int from = 0;
  int to = 0;
  Predicate predicate;
  bool capture = false;
};

// Abstract syntactic-variation graph. States are indices into state_names;
// the start state is the source of the first transition in the file.
struct MetaGraph {
  std::string id;
  Structure structure = Structure::kNounPoss;
  std::vector<GuardTest> guard;
  std::vector<std::string> state_names;
  int start = 0;
  std::vector<TemplateEdge> edges;
  std::vector<int> accept;
  std::string capture_variable;

  bool Admits(const PatternRow &row) const;
};

// File format, one graph per block:
//   graph <id> structure <kind> [guard <col>=<val>[,...]]
//   <state> -> <state> : <predicate>
//   capture <objet> on <state>-><state>
//   accept <state>
// Predicates: "word", @ELT1, @ELT2, <N|V|A|D|P|X>, <MOD>, <E>.
// Throws ParseError (syntax, unknown column, capture count).
std::vector<MetaGraph> ParseMetaGraphs(std::istream &in,
                                       const std::string &source = "<metagraphs>");
std::vector<MetaGraph> ParseMetaGraphsFile(const std::filesystem::path &path);

// Concrete transition label after slot expansion.
struct Label {
  enum class Kind { kWord, kPos, kEpsilon };
  Kind kind = Kind::kEpsilon;
  std::string word;
  Pos pos = Pos::kX;
};

struct Arc {
  int from = 0;
  int to = 0;
  Label label;
  bool capture = false;
};

// Instantiated graph: one pattern row pushed through one meta-graph.
struct Automaton {
  int state_count = 0;
  int start = 0;
  std::vector<Arc> arcs;
  std::vector<int> accept;
};

// nullopt when the guard rejects the row. Slots expand to every inflected
// surface of the row's lemma; <MOD> becomes an adjective self-loop.
// Throws ValidationError if the row is not accepted, Error if a slot lemma
// is missing from the lexicon.
std::optional<Automaton> Instantiate(const MetaGraph &meta, const PatternRow &row,
                                     const Lexicon &lexicon);

}  // namespace parafact

#endif  // PARAFACT_METAGRAPH_H_
