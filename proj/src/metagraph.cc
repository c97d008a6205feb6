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

#include "parafact/metagraph.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <map>
#include <set>

#include "parafact/error.h"
#include "parafact/text.h"

namespace parafact {

std::string_view StructureName(Structure structure) {
  switch (structure) {
    case Structure::kSubjectVerb: return "subject-verb";
    case Structure::kVerbDobj: return "verb-dobj";
    case Structure::kVerbIobj: return "verb-iobj";
    case Structure::kNounPoss: return "noun-poss";
  }
  return "?";
}

std::optional<Structure> ParseStructure(std::string_view text) {
  for (Structure s : {Structure::kSubjectVerb, Structure::kVerbDobj,
                      Structure::kVerbIobj, Structure::kNounPoss}) {
    if (StructureName(s) == text) return s;
  }
  return std::nullopt;
}

std::optional<Column> ParseColumn(std::string_view text) {
  static const std::map<std::string, Column, std::less<>> kColumns = {
      {"SCHEMA", Column::kSchema}, {"A", Column::kSchema},
      {"ELT1", Column::kElt1},     {"B", Column::kElt1},
      {"CAT1", Column::kCat1},     {"C", Column::kCat1},
      {"ELT2", Column::kElt2},     {"D", Column::kElt2},
      {"CAT2", Column::kCat2},     {"E", Column::kCat2},
      {"SCORE", Column::kScore},   {"F", Column::kScore},
      {"ETQ", Column::kEtq},       {"G", Column::kEtq},
      {"OBJET", Column::kObjet},   {"H", Column::kObjet},
  };
  if (!text.empty() && text.front() == '@') text.remove_prefix(1);
  auto it = kColumns.find(text);
  if (it == kColumns.end()) return std::nullopt;
  return it->second;
}

std::string ColumnValue(const PatternRow &row, Column column) {
  switch (column) {
    case Column::kSchema: return std::string(SchemaSign(row.schema));
    case Column::kElt1: return row.elt1;
    case Column::kCat1: return std::string(1, PosLetter(row.cat1));
    case Column::kElt2: return row.elt2;
    case Column::kCat2: return std::string(1, PosLetter(row.cat2));
    case Column::kScore: return FormatFixed(row.score, 6);
    case Column::kEtq: return row.etq;
    case Column::kObjet: return row.objet;
  }
  return {};
}

bool MetaGraph::Admits(const PatternRow &row) const {
  return std::all_of(guard.begin(), guard.end(), [&](const GuardTest &test) {
    return ColumnValue(row, test.column) == test.value;
  });
}

namespace {

class Builder {
 public:
  Builder(std::string source) : source_(std::move(source)) {}

  void Header(const std::vector<std::string_view> &f, int lineno) {
    // graph <id> structure <kind> [guard <tests>]
    if (f.size() != 4 && f.size() != 6) {
      Fail(lineno, "expected: graph <id> structure <kind> [guard <col>=<val>,...]");
    }
    if (f[2] != "structure") Fail(lineno, "expected 'structure'");
    graph_ = MetaGraph();
    graph_->id = std::string(f[1]);
    auto structure = ParseStructure(f[3]);
    if (!structure) Fail(lineno, "unknown structure " + std::string(f[3]));
    graph_->structure = *structure;
    if (f.size() == 6) {
      if (f[4] != "guard") Fail(lineno, "expected 'guard'");
      for (std::string_view test : Split(f[5], ',')) {
        size_t eq = test.find('=');
        if (eq == std::string_view::npos) Fail(lineno, "guard test needs '='");
        auto column = ParseColumn(test.substr(0, eq));
        if (!column) Fail(lineno, "unknown column " + std::string(test.substr(0, eq)));
        graph_->guard.push_back({*column, std::string(test.substr(eq + 1))});
      }
    }
    header_line_ = lineno;
    state_index_.clear();
    captures_.clear();
  }

  void Transition(const std::vector<std::string_view> &f, int lineno) {
    Require(lineno);
    // <from> -> <to> : <predicate>
    if (f.size() != 5 || f[1] != "->" || f[3] != ":") {
      Fail(lineno, "expected: <state> -> <state> : <predicate>");
    }
    TemplateEdge edge;
    edge.from = State(f[0]);
    edge.to = State(f[2]);
    edge.predicate = ParsePredicate(f[4], lineno);
    if (graph_->edges.empty()) graph_->start = edge.from;
    graph_->edges.push_back(std::move(edge));
  }

  void Capture(const std::vector<std::string_view> &f, int lineno) {
    Require(lineno);
    // capture <objet> on <from>-><to>  (also accepts "<from> -> <to>")
    std::string arrow;
    for (size_t i = 3; i < f.size(); ++i) arrow += f[i];
    size_t at = arrow.find("->");
    if (f.size() < 4 || f[2] != "on" || at == std::string::npos) {
      Fail(lineno, "expected: capture <objet> on <state>-><state>");
    }
    if (!graph_->capture_variable.empty() && graph_->capture_variable != f[1]) {
      Fail(lineno, "a graph binds a single capture variable");
    }
    graph_->capture_variable = std::string(f[1]);
    captures_.push_back({arrow.substr(0, at), arrow.substr(at + 2), lineno});
  }

  void Accept(const std::vector<std::string_view> &f, int lineno) {
    Require(lineno);
    if (f.size() != 2) Fail(lineno, "expected: accept <state>");
    graph_->accept.push_back(State(f[1]));
  }

  void Finish(std::vector<MetaGraph> *out) {
    if (!graph_) return;
    MetaGraph &g = *graph_;
    if (g.edges.empty()) Fail(header_line_, "graph " + g.id + " has no transitions");
    if (g.accept.empty()) Fail(header_line_, "graph " + g.id + " has no accept state");
    for (const auto &c : captures_) {
      auto from = state_index_.find(c.from);
      auto to = state_index_.find(c.to);
      bool found = false;
      if (from != state_index_.end() && to != state_index_.end()) {
        for (TemplateEdge &e : g.edges) {
          if (e.from != from->second || e.to != to->second) continue;
          if (e.predicate.kind == Predicate::Kind::kEpsilon ||
              e.predicate.kind == Predicate::Kind::kModifierLoop) {
            Fail(c.line, "capture must be on a token-consuming transition");
          }
          e.capture = true;
          found = true;
        }
      }
      if (!found) Fail(c.line, "capture on unknown transition " + c.from + "->" + c.to);
    }
    CheckCaptures(g);
    std::sort(g.accept.begin(), g.accept.end());
    g.accept.erase(std::unique(g.accept.begin(), g.accept.end()), g.accept.end());
    out->push_back(std::move(g));
    graph_.reset();
  }

 private:
  struct PendingCapture {
    std::string from;
    std::string to;
    int line;
  };

  [[noreturn]] void Fail(int lineno, const std::string &message) const {
    throw ParseError(source_, lineno, message);
  }

  void Require(int lineno) const {
    if (!graph_) Fail(lineno, "statement outside of a graph block");
  }

  int State(std::string_view name) {
    auto [it, inserted] = state_index_.emplace(std::string(name),
                                               static_cast<int>(graph_->state_names.size()));
    if (inserted) graph_->state_names.emplace_back(name);
    return it->second;
  }

  Predicate ParsePredicate(std::string_view text, int lineno) const {
    Predicate p;
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
      p.kind = Predicate::Kind::kLiteral;
      p.word = ToLower(text.substr(1, text.size() - 2));
      if (p.word.empty()) Fail(lineno, "empty literal");
    } else if (text == "@ELT1" || text == "@B") {
      p.kind = Predicate::Kind::kSlot1;
    } else if (text == "@ELT2" || text == "@D") {
      p.kind = Predicate::Kind::kSlot2;
    } else if (text == "<MOD>") {
      p.kind = Predicate::Kind::kModifierLoop;
    } else if (text == "<E>") {
      p.kind = Predicate::Kind::kEpsilon;
    } else if (text.size() == 3 && text.front() == '<' && text.back() == '>' &&
               ParsePos(text.substr(1, 1))) {
      p.kind = Predicate::Kind::kPos;
      p.pos = *ParsePos(text.substr(1, 1));
    } else {
      Fail(lineno, "unknown predicate " + std::string(text));
    }
    return p;
  }

  // Every path from start to an accept state must cross exactly one capture.
  void CheckCaptures(const MetaGraph &g) const {
    const int n = static_cast<int>(g.state_names.size());
    std::vector<std::array<bool, 3>> seen(n, {false, false, false});
    std::vector<std::pair<int, int>> stack{{g.start, 0}};
    seen[g.start][0] = true;
    while (!stack.empty()) {
      auto [s, count] = stack.back();
      stack.pop_back();
      for (const TemplateEdge &e : g.edges) {
        if (e.from != s) continue;
        int next = std::min(2, count + (e.capture ? 1 : 0));
        if (!seen[e.to][next]) {
          seen[e.to][next] = true;
          stack.emplace_back(e.to, next);
        }
      }
    }
    for (int a : g.accept) {
      if (seen[a][0]) Fail(header_line_, "graph " + g.id + ": accepting path without capture");
      if (seen[a][2]) Fail(header_line_, "graph " + g.id + ": accepting path with two captures");
    }
  }

  std::string source_;
  std::optional<MetaGraph> graph_;
  std::map<std::string, int> state_index_;
  std::vector<PendingCapture> captures_;
  int header_line_ = 0;
};

}  // namespace

std::vector<MetaGraph> ParseMetaGraphs(std::istream &in, const std::string &source) {
  std::vector<MetaGraph> graphs;
  Builder builder(source);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (size_t hash = body.find('#'); hash != std::string_view::npos) {
      // '#' inside a quoted literal is kept.
      size_t quote = body.find('"');
      if (quote == std::string_view::npos || hash < quote) body = body.substr(0, hash);
    }
    auto f = SplitWhitespace(body);
    if (f.empty()) continue;
    if (f[0] == "graph") {
      builder.Finish(&graphs);
      builder.Header(f, lineno);
    } else if (f[0] == "capture") {
      builder.Capture(f, lineno);
    } else if (f[0] == "accept") {
      builder.Accept(f, lineno);
    } else if (f.size() > 1 && f[1] == "->") {
      builder.Transition(f, lineno);
    } else {
      throw ParseError(source, lineno, "unknown statement " + std::string(f[0]));
    }
  }
  builder.Finish(&graphs);
  std::set<std::string> ids;
  for (const MetaGraph &g : graphs) {
    if (!ids.insert(g.id).second) throw ParseError(source, 0, "duplicate graph id " + g.id);
  }
  return graphs;
}

std::vector<MetaGraph> ParseMetaGraphsFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return ParseMetaGraphs(in, path.string());
}

std::optional<Automaton> Instantiate(const MetaGraph &meta, const PatternRow &row,
                                     const Lexicon &lexicon) {
  if (row.status != RowStatus::kAccepted) {
    throw ValidationError("only accepted rows can be instantiated: " + row.elt1 + "/" + row.elt2);
  }
  if (!meta.Admits(row)) return std::nullopt;

  auto surfaces = [&](const std::string &lemma) {
    std::vector<std::string> forms = lexicon.SurfacesOf(lemma);
    if (forms.empty()) throw Error("lemma not in lexicon: " + lemma);
    return forms;
  };

  Automaton a;
  a.state_count = static_cast<int>(meta.state_names.size());
  a.start = meta.start;
  a.accept = meta.accept;
  for (const TemplateEdge &e : meta.edges) {
    const Predicate &p = e.predicate;
    switch (p.kind) {
      case Predicate::Kind::kLiteral:
        a.arcs.push_back({e.from, e.to, {Label::Kind::kWord, p.word, Pos::kX}, e.capture});
        break;
      case Predicate::Kind::kSlot1:
      case Predicate::Kind::kSlot2:
        for (std::string &form : surfaces(p.kind == Predicate::Kind::kSlot1 ? row.elt1 : row.elt2)) {
          a.arcs.push_back({e.from, e.to, {Label::Kind::kWord, std::move(form), Pos::kX}, e.capture});
        }
        break;
      case Predicate::Kind::kPos:
        a.arcs.push_back({e.from, e.to, {Label::Kind::kPos, {}, p.pos}, e.capture});
        break;
      case Predicate::Kind::kEpsilon:
        a.arcs.push_back({e.from, e.to, {Label::Kind::kEpsilon, {}, Pos::kX}, false});
        break;
      case Predicate::Kind::kModifierLoop: {
        int loop = a.state_count++;
        a.arcs.push_back({e.from, loop, {Label::Kind::kEpsilon, {}, Pos::kX}, false});
        a.arcs.push_back({loop, loop, {Label::Kind::kPos, {}, Pos::kA}, false});
        a.arcs.push_back({loop, e.to, {Label::Kind::kEpsilon, {}, Pos::kX}, false});
        break;
      }
    }
  }
  return a;
}

}  // namespace parafact
