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

#include "parafact/compiled_graph.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "parafact/corpus.h"
#include "parafact/error.h"
#include "parafact/text.h"

namespace parafact {

namespace {

constexpr std::string_view kMagic = "parafact-graph";
constexpr int kVersion = 1;

struct NfaArc {
  int to;
  Label label;
  bool capture;
};

// Epsilon closure that remembers, for each reached NFA state, the origin of
// the token step that led into its closure.
class Closure {
 public:
  explicit Closure(const std::vector<std::vector<NfaArc>> &arcs)
      : arcs_(arcs), stamp_(arcs.size(), 0), origin_(arcs.size()) {}

  using Seed = std::pair<int, CompiledGraph::Origin>;

  std::vector<CompiledGraph::Origin> Run(const std::vector<Seed> &seeds) {
    ++generation_;
    std::vector<int> queue;
    for (const auto &[state, origin] : seeds) {
      if (stamp_[state] == generation_) continue;
      stamp_[state] = generation_;
      origin_[state] = origin;
      origin_[state].nfa = state;
      queue.push_back(state);
    }
    for (size_t head = 0; head < queue.size(); ++head) {
      int s = queue[head];
      for (const NfaArc &arc : arcs_[s]) {
        if (arc.label.kind != Label::Kind::kEpsilon || stamp_[arc.to] == generation_) continue;
        stamp_[arc.to] = generation_;
        origin_[arc.to] = origin_[s];
        origin_[arc.to].nfa = arc.to;
        queue.push_back(arc.to);
      }
    }
    std::sort(queue.begin(), queue.end());
    std::vector<CompiledGraph::Origin> out;
    out.reserve(queue.size());
    for (int s : queue) out.push_back(origin_[s]);
    return out;
  }

 private:
  const std::vector<std::vector<NfaArc>> &arcs_;
  std::vector<unsigned> stamp_;
  std::vector<CompiledGraph::Origin> origin_;
  unsigned generation_ = 0;
};

std::string OriginsString(const std::vector<CompiledGraph::Origin> &origins) {
  std::string out;
  for (const auto &o : origins) {
    if (!out.empty()) out += ',';
    out += std::to_string(o.nfa) + ":" + std::to_string(o.from_nfa) + ":" + (o.capture ? "1" : "0");
  }
  return out.empty() ? "-" : out;
}

}  // namespace

CompiledGraph Compile(std::span<const MetaGraph> metas, const PatternTable &table,
                      const Lexicon &lexicon) {
  PatternTable accepted = table.Accepted();
  if (accepted.empty()) throw ValidationError("pattern table has no accepted rows");

  CompiledGraph graph;
  std::vector<std::vector<NfaArc>> arcs;
  std::vector<bool> accepting;
  std::vector<int> starts;
  for (const PatternRow &row : accepted.rows()) {
    for (const MetaGraph &meta : metas) {
      std::optional<Automaton> a = Instantiate(meta, row, lexicon);
      if (!a) continue;
      const int k = static_cast<int>(graph.instantiations_.size());
      graph.instantiations_.push_back(
          {meta.id, row.Id(), row.etq, row.objet, row.elt1, row.elt2});
      const int offset = static_cast<int>(arcs.size());
      arcs.resize(offset + a->state_count);
      accepting.resize(arcs.size(), false);
      graph.nfa_instantiation_.resize(arcs.size(), k);
      for (Arc &arc : a->arcs) {
        arcs[offset + arc.from].push_back({offset + arc.to, std::move(arc.label), arc.capture});
      }
      for (int s : a->accept) accepting[offset + s] = true;
      starts.push_back(offset + a->start);
    }
  }

  Closure closure(arcs);
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> sets;
  auto intern = [&](const std::vector<CompiledGraph::Origin> &origins) {
    std::vector<int> key;
    key.reserve(origins.size());
    for (const auto &o : origins) key.push_back(o.nfa);
    auto [it, inserted] = ids.emplace(key, static_cast<int>(sets.size()));
    if (inserted) sets.push_back(std::move(key));
    return it->second;
  };

  std::vector<Closure::Seed> seeds;
  for (int s : starts) seeds.push_back({s, {s, -1, false}});
  intern(closure.Run(seeds));

  for (size_t d = 0; d < sets.size(); ++d) {
    const std::vector<int> current = sets[d];
    CompiledGraph::State state;
    state.first = static_cast<int>(graph.transitions_.size());
    std::set<std::string> words;
    for (int s : current) {
      if (accepting[s]) state.accept_nfa.push_back(s);
      for (const NfaArc &arc : arcs[s]) {
        if (arc.label.kind == Label::Kind::kWord) words.insert(arc.label.word);
        if (arc.label.kind == Label::Kind::kPos) state.pos_labels |= PosBit(arc.label.pos);
      }
    }

    auto emit = [&](bool literal, const std::string &word, PosSet mask) {
      auto origins = closure.Run(seeds);
      CompiledGraph::Transition t;
      t.from = static_cast<int>(d);
      t.literal = literal;
      t.word = word;
      t.pos_set = mask;
      t.to = intern(origins);
      t.origins = std::move(origins);
      graph.transitions_.push_back(std::move(t));
    };

    for (const std::string &word : words) {
      const PosSet tags = TokenTags(word, lexicon);
      seeds.clear();
      for (int s : current) {
        for (const NfaArc &arc : arcs[s]) {
          bool match = (arc.label.kind == Label::Kind::kWord && arc.label.word == word) ||
                       (arc.label.kind == Label::Kind::kPos && (tags & PosBit(arc.label.pos)));
          if (match) seeds.push_back({arc.to, {arc.to, s, arc.capture}});
        }
      }
      emit(true, word, 0);
      ++state.literal_count;
    }
    for (unsigned mask = 1; mask < (1u << kPosCount); ++mask) {
      if (mask & ~static_cast<unsigned>(state.pos_labels)) continue;
      seeds.clear();
      for (int s : current) {
        for (const NfaArc &arc : arcs[s]) {
          if (arc.label.kind == Label::Kind::kPos && (mask & PosBit(arc.label.pos))) {
            seeds.push_back({arc.to, {arc.to, s, arc.capture}});
          }
        }
      }
      emit(false, {}, static_cast<PosSet>(mask));
      ++state.pos_count;
    }
    graph.states_.push_back(std::move(state));
  }
  return graph;
}

int CompiledGraph::Step(int state, const GraphToken &token) const {
  const State &s = states_[state];
  auto lit_begin = transitions_.begin() + s.first;
  auto lit_end = lit_begin + s.literal_count;
  auto it = std::lower_bound(lit_begin, lit_end, token.surface,
                             [](const Transition &t, std::string_view w) { return t.word < w; });
  if (it != lit_end && it->word == token.surface) {
    return static_cast<int>(it - transitions_.begin());
  }
  PosSet mask = token.tags & s.pos_labels;
  if (mask == 0) return -1;
  auto pos_end = lit_end + s.pos_count;
  auto jt = std::lower_bound(lit_end, pos_end, mask,
                             [](const Transition &t, PosSet m) { return t.pos_set < m; });
  if (jt != pos_end && jt->pos_set == mask) return static_cast<int>(jt - transitions_.begin());
  return -1;
}

bool CompiledGraph::Accepts(std::span<const GraphToken> tokens) const {
  if (states_.empty()) return false;
  int state = start();
  for (const GraphToken &token : tokens) {
    int t = Step(state, token);
    if (t < 0) return false;
    state = transitions_[t].to;
  }
  return !states_[state].accept_nfa.empty();
}

int CompiledGraph::CaptureStep(std::span<const int> path, int accept_nfa) const {
  int nfa = accept_nfa;
  for (int k = static_cast<int>(path.size()) - 1; k >= 0; --k) {
    const auto &origins = transitions_[path[k]].origins;
    auto it = std::lower_bound(origins.begin(), origins.end(), nfa,
                               [](const Origin &o, int n) { return o.nfa < n; });
    if (it == origins.end() || it->nfa != nfa) return -1;
    if (it->capture) return k;
    nfa = it->from_nfa;
  }
  return -1;
}

void CompiledGraph::Serialize(std::ostream &out) const {
  out << kMagic << '\t' << kVersion << '\n';
  out << "instantiations\t" << instantiations_.size() << '\n';
  for (size_t i = 0; i < instantiations_.size(); ++i) {
    const Instantiation &in = instantiations_[i];
    out << "inst\t" << i << '\t' << in.meta_id << '\t' << in.row_id << '\t' << in.etq << '\t'
        << in.objet << '\t' << in.elt1 << '\t' << in.elt2 << '\n';
  }
  out << "nfa\t" << nfa_instantiation_.size() << '\n';
  for (size_t i = 0; i < nfa_instantiation_.size(); ++i) {
    out << (i ? " " : "") << nfa_instantiation_[i];
  }
  out << '\n';
  out << "states\t" << states_.size() << '\n';
  for (size_t i = 0; i < states_.size(); ++i) {
    const State &s = states_[i];
    std::string accept;
    for (int a : s.accept_nfa) accept += (accept.empty() ? "" : ",") + std::to_string(a);
    out << "state\t" << i << '\t' << PosSetString(s.pos_labels) << '\t'
        << (accept.empty() ? "-" : accept) << '\n';
  }
  out << "transitions\t" << transitions_.size() << '\n';
  for (const Transition &t : transitions_) {
    out << "t\t" << t.from << '\t' << (t.literal ? "L" : "P") << '\t'
        << (t.literal ? t.word : PosSetString(t.pos_set)) << '\t' << t.to << '\t'
        << OriginsString(t.origins) << '\n';
  }
  out << "end\n";
}

std::string CompiledGraph::Serialize() const {
  std::ostringstream out;
  Serialize(out);
  return out.str();
}

CompiledGraph CompiledGraph::Deserialize(std::istream &in, const std::string &source) {
  CompiledGraph g;
  std::string line;
  int lineno = 0;
  auto next = [&]() -> std::vector<std::string_view> {
    if (!std::getline(in, line)) throw ParseError(source, lineno, "unexpected end of graph");
    ++lineno;
    return Split(line, '\t');
  };
  auto number = [&](std::string_view text) {
    try {
      size_t used = 0;
      long v = std::stol(std::string(text), &used);
      if (used != text.size() || v < 0) throw std::invalid_argument("n");
      return static_cast<int>(v);
    } catch (const std::exception &) {
      throw ParseError(source, lineno, "bad number " + std::string(text));
    }
  };
  auto count_line = [&](std::string_view keyword) {
    auto f = next();
    if (f.size() != 2 || f[0] != keyword) {
      throw ParseError(source, lineno, "expected " + std::string(keyword));
    }
    return number(f[1]);
  };

  auto header = next();
  if (header.size() != 2 || header[0] != kMagic) throw ParseError(source, lineno, "not a compiled graph");
  if (number(header[1]) != kVersion) throw ParseError(source, lineno, "unsupported graph version");

  const int inst_count = count_line("instantiations");
  for (int i = 0; i < inst_count; ++i) {
    auto f = next();
    if (f.size() != 8 || f[0] != "inst" || number(f[1]) != i) {
      throw ParseError(source, lineno, "bad inst line");
    }
    g.instantiations_.push_back({std::string(f[2]), std::string(f[3]), std::string(f[4]),
                                 std::string(f[5]), std::string(f[6]), std::string(f[7])});
  }
  const int nfa_count = count_line("nfa");
  {
    next();
    for (std::string_view v : SplitWhitespace(line)) {
      int k = number(v);
      if (k >= inst_count) throw ParseError(source, lineno, "bad instantiation index");
      g.nfa_instantiation_.push_back(k);
    }
    if (static_cast<int>(g.nfa_instantiation_.size()) != nfa_count) {
      throw ParseError(source, lineno, "nfa count mismatch");
    }
  }
  const int state_count = count_line("states");
  for (int i = 0; i < state_count; ++i) {
    auto f = next();
    if (f.size() != 4 || f[0] != "state" || number(f[1]) != i) {
      throw ParseError(source, lineno, "bad state line");
    }
    State s;
    auto labels = ParsePosSet(f[2]);
    if (!labels) throw ParseError(source, lineno, "bad pos labels");
    s.pos_labels = *labels;
    if (f[3] != "-") {
      for (std::string_view a : Split(f[3], ',')) {
        int nfa = number(a);
        if (nfa >= nfa_count) throw ParseError(source, lineno, "bad nfa state");
        s.accept_nfa.push_back(nfa);
      }
    }
    g.states_.push_back(std::move(s));
  }
  const int transition_count = count_line("transitions");
  int previous_from = -1;
  for (int i = 0; i < transition_count; ++i) {
    auto f = next();
    if (f.size() != 6 || f[0] != "t" || (f[2] != "L" && f[2] != "P")) {
      throw ParseError(source, lineno, "bad transition line");
    }
    Transition t;
    t.from = number(f[1]);
    t.to = number(f[4]);
    if (t.from >= state_count || t.to >= state_count || t.from < previous_from) {
      throw ParseError(source, lineno, "bad transition states");
    }
    t.literal = f[2] == "L";
    if (t.literal) {
      t.word = std::string(f[3]);
    } else {
      auto mask = ParsePosSet(f[3]);
      if (!mask) throw ParseError(source, lineno, "bad pos set");
      t.pos_set = *mask;
    }
    if (f[5] != "-") {
      for (std::string_view o : Split(f[5], ',')) {
        auto parts = Split(o, ':');
        if (parts.size() != 3) throw ParseError(source, lineno, "bad origin");
        t.origins.push_back({number(parts[0]), number(parts[1]), parts[2] == "1"});
      }
    }
    State &s = g.states_[t.from];
    if (t.from != previous_from) s.first = i;
    (t.literal ? s.literal_count : s.pos_count)++;
    previous_from = t.from;
    g.transitions_.push_back(std::move(t));
  }
  auto end = next();
  if (end.size() != 1 || end[0] != "end") throw ParseError(source, lineno, "expected end");
  return g;
}

CompiledGraph CompiledGraph::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return Deserialize(in, path);
}

}  // namespace parafact
