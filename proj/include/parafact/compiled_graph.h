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

#ifndef PARAFACT_COMPILED_GRAPH_H_
#define PARAFACT_COMPILED_GRAPH_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parafact/lexicon.h"
#include "parafact/metagraph.h"
#include "parafact/pattern.h"

namespace parafact {

// What the matcher sees of a token: lowercased surface and POS tags.
struct GraphToken {
  std::string_view surface;
  PosSet tags = 0;
};

// Deterministic union of all instantiated meta-graphs.
//
// States are subsets of the states of the union automaton (the "NFA"). From a
// state, literal transitions are tried first; a token whose surface matches
// none of them follows the transition keyed by (token tags & pos_labels).
// Each transition records, for every NFA state it reaches, which NFA state it
// came from and whether the step was a capture, so slot captures and the
// producing pattern row are recovered by walking a match path backwards.
class CompiledGraph {
 public:
  struct Instantiation {
    std::string meta_id;
    std::string row_id;
    std::string etq;
    std::string objet;
    std::string elt1;
    std::string elt2;
  };

  struct Origin {
    int nfa = 0;
    int from_nfa = 0;
    bool capture = false;
  };

  struct Transition {
    int from = 0;
    bool literal = true;
    std::string word;  // literal transitions
    PosSet pos_set = 0;  // tag transitions
    int to = 0;
    std::vector<Origin> origins;  // sorted by nfa
  };

  struct State {
    PosSet pos_labels = 0;
    int first = 0;          // first transition index
    int literal_count = 0;  // literals come first, sorted by word
    int pos_count = 0;      // then tag transitions, sorted by mask
    std::vector<int> accept_nfa;  // sorted
  };

  int start() const { return 0; }
  size_t state_count() const { return states_.size(); }
  size_t transition_count() const { return transitions_.size(); }
  const State &state(int s) const { return states_[s]; }
  const Transition &transition(int t) const { return transitions_[t]; }
  const std::vector<Instantiation> &instantiations() const { return instantiations_; }
  int InstantiationOf(int nfa) const { return nfa_instantiation_[nfa]; }

  // Index of the transition taken on `token`, or -1.
  int Step(int state, const GraphToken &token) const;

  // Whether the whole sequence is in the language.
  bool Accepts(std::span<const GraphToken> tokens) const;

  // Given the transitions of a match path and an accepting NFA state of its
  // last DFA state, returns the path index of the capturing step (-1 if the
  // path crosses no capture).
  int CaptureStep(std::span<const int> path, int accept_nfa) const;

  std::pair<size_t, size_t> Stats() const { return {state_count(), transition_count()}; }

  // Versioned text dump; sorted states and transitions.
  void Serialize(std::ostream &out) const;
  std::string Serialize() const;
  static CompiledGraph Deserialize(std::istream &in, const std::string &source = "<graph>");
  static CompiledGraph LoadFile(const std::string &path);

 private:
  friend CompiledGraph Compile(std::span<const MetaGraph>, const PatternTable &,
                               const Lexicon &);

  std::vector<State> states_;
  std::vector<Transition> transitions_;
  std::vector<Instantiation> instantiations_;
  std::vector<int> nfa_instantiation_;
};

// Instantiates every meta-graph against every accepted row (row order, then
// meta-graph order) and determinizes the union. Pure: identical inputs give
// byte-identical serializations. Throws ValidationError if no row is
// accepted.
CompiledGraph Compile(std::span<const MetaGraph> metas, const PatternTable &table,
                      const Lexicon &lexicon);

}  // namespace parafact

#endif  // PARAFACT_COMPILED_GRAPH_H_
