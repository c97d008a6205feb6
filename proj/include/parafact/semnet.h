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

#ifndef PARAFACT_SEMNET_H_
#define PARAFACT_SEMNET_H_

#include <compare>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parafact {

// Raised when the net, with synonym classes collapsed, has a directed cycle.
class CycleError : public std::runtime_error {
 public:
  explicit CycleError(const std::string &node)
      : std::runtime_error("cycle through node " + node), node_(node) {}
  const std::string &node() const { return node_; }

 private:
  std::string node_;
};

enum class RelationKind { kHypernym, kSynonym, kMeronym, kAssociation };

// Default edge cost when the net file does not give one.
double DefaultCost(RelationKind kind);
std::string_view RelationKindName(RelationKind kind);

struct SenseNode {
  std::string id;
  std::string label;
};

// Edges are stored specific -> general and only walked upward.
struct Relation {
  std::string source;
  std::string target;
  RelationKind kind = RelationKind::kHypernym;
  double cost = 1.0;
};

// Activation distance between two words. Unrelated sorts after every finite
// value, so it never passes a threshold test.
class Proximity {
 public:
  static Proximity Unrelated() { return Proximity(kUnrelated); }
  static Proximity Value(double value) { return Proximity(value); }

  bool related() const { return value_ != kUnrelated; }
  // Only meaningful when related().
  double value() const { return value_; }
  bool Within(double threshold) const { return related() && value_ <= threshold; }

  friend bool operator==(const Proximity &a, const Proximity &b) = default;
  friend auto operator<=>(const Proximity &a, const Proximity &b) {
    return a.value_ <=> b.value_;
  }

 private:
  static constexpr double kUnrelated = std::numeric_limits<double>::infinity();
  explicit Proximity(double value) : value_(value) {}
  double value_;
};

// One nearest common ancestor of two words with the word-level distances to
// it (minimum over the senses of each word).
struct CommonAncestor {
  std::string node;
  double from_a = 0;
  double from_b = 0;

  friend bool operator==(const CommonAncestor &, const CommonAncestor &) = default;
};

// Immutable weighted semantic network. All queries are const and thread-safe.
class SemanticNet {
 public:
  // Parses the line-oriented net format:
  //   node <id> "<label>"
  //   rel <src> <kind> <dst> [cost <real>]
  //   word "<surface>" <node-id>
  // Throws ParseError (syntax, dangling reference, cycle).
  static SemanticNet Load(std::istream &in, const std::string &source = "<net>");
  static SemanticNet LoadFile(const std::filesystem::path &path);

  // Validating constructor used by Load and by tests that build nets in code.
  static SemanticNet Build(std::vector<SenseNode> nodes,
                           std::vector<Relation> relations,
                           std::multimap<std::string, std::string> lexicon);

  size_t node_count() const { return nodes_.size(); }
  size_t relation_count() const { return relations_.size(); }
  size_t word_count() const { return senses_.size(); }
  const std::vector<SenseNode> &nodes() const { return nodes_; }
  const std::vector<Relation> &relations() const { return relations_; }

  bool HasNode(std::string_view id) const;
  bool HasWord(std::string_view word) const;
  // Every word with at least one sense, sorted.
  std::vector<std::string> Words() const;
  // Sense node ids of a word, sorted. Empty if unknown.
  std::vector<std::string> Senses(std::string_view word) const;

  // Every node reachable upward from `node` with its minimal cumulative cost;
  // the node itself is present at cost 0. Throws NotFoundError.
  std::map<std::string, double> AncestorCone(std::string_view node) const;

  // Minimal elements of the common-ancestor set of two words. Throws
  // NotFoundError for an unknown word.
  std::vector<CommonAncestor> NearestCommonAncestors(std::string_view a,
                                                     std::string_view b) const;

  // Mean over the nearest common ancestors of (dA + dB). Total: unknown
  // words or disjoint cones give Unrelated.
  Proximity Distance(std::string_view a, std::string_view b) const;

 private:
  struct Edge {
    int target;
    double cost;
  };

  SemanticNet() = default;
  int IndexOf(std::string_view id) const;
  const std::vector<int> *SenseIndices(std::string_view word) const;
  std::vector<double> Cone(int node) const;
  std::vector<double> WordCone(const std::vector<int> &senses) const;
  std::vector<CommonAncestor> Nca(const std::vector<int> &a,
                                  const std::vector<int> &b) const;

  std::vector<SenseNode> nodes_;  // sorted by id
  std::vector<Relation> relations_;
  std::vector<std::vector<Edge>> up_;  // per node, sorted by target
  std::vector<int> component_;         // strongly connected component id
  std::vector<std::vector<int>> component_up_;
  std::map<std::string, std::vector<int>, std::less<>> senses_;
};

}  // namespace parafact

#endif  // PARAFACT_SEMNET_H_
