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

#include "parafact/semnet.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "parafact/error.h"
#include "parafact/text.h"

namespace parafact {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool ParseKind(std::string_view name, RelationKind *kind) {
  if (name == "hyper" || name == "hypernym") {
    *kind = RelationKind::kHypernym;
  } else if (name == "syn" || name == "synonym") {
    *kind = RelationKind::kSynonym;
  } else if (name == "mero" || name == "meronym") {
    *kind = RelationKind::kMeronym;
  } else if (name == "assoc" || name == "association") {
    *kind = RelationKind::kAssociation;
  } else {
    return false;
  }
  return true;
}

// Splits a net-file line into fields. Double-quoted fields may contain
// spaces; '#' outside quotes starts a comment.
bool LexLine(std::string_view line, std::vector<std::string> *fields,
             std::string *error) {
  fields->clear();
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == '"') {
      size_t end = line.find('"', i + 1);
      if (end == std::string_view::npos) {
        *error = "unterminated string";
        return false;
      }
      fields->emplace_back(line.substr(i + 1, end - i - 1));
      i = end + 1;
    } else {
      size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
             line[i] != '\r' && line[i] != '#') {
        ++i;
      }
      fields->emplace_back(line.substr(start, i - start));
    }
  }
  return true;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int Find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

}  // namespace

double DefaultCost(RelationKind kind) {
  switch (kind) {
    case RelationKind::kHypernym: return 1.0;
    case RelationKind::kSynonym: return 0.0;
    case RelationKind::kMeronym: return 1.5;
    case RelationKind::kAssociation: return 2.0;
  }
  return 1.0;
}

std::string_view RelationKindName(RelationKind kind) {
  switch (kind) {
    case RelationKind::kHypernym: return "hypernym";
    case RelationKind::kSynonym: return "synonym";
    case RelationKind::kMeronym: return "meronym";
    case RelationKind::kAssociation: return "association";
  }
  return "?";
}

SemanticNet SemanticNet::Load(std::istream &in, const std::string &source) {
  std::vector<SenseNode> nodes;
  std::vector<Relation> relations;
  std::multimap<std::string, std::string> lexicon;
  std::set<std::string, std::less<>> ids;
  // Line of the first reference to each node, for dangling-reference errors.
  std::vector<std::pair<std::string, int>> references;

  std::string line;
  std::vector<std::string> f;
  std::string error;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!LexLine(line, &f, &error)) throw ParseError(source, lineno, error);
    if (f.empty()) continue;
    const std::string &kind = f[0];
    if (kind == "node") {
      if (f.size() < 2 || f.size() > 3) {
        throw ParseError(source, lineno, "expected: node <id> \"<label>\"");
      }
      if (!ids.insert(f[1]).second) {
        throw ParseError(source, lineno, "duplicate node " + f[1]);
      }
      nodes.push_back({f[1], f.size() == 3 ? f[2] : f[1]});
    } else if (kind == "rel") {
      if (f.size() != 4 && f.size() != 6) {
        throw ParseError(source, lineno,
                         "expected: rel <src> <kind> <dst> [cost <real>]");
      }
      Relation rel;
      rel.source = f[1];
      rel.target = f[3];
      if (!ParseKind(f[2], &rel.kind)) {
        throw ParseError(source, lineno, "unknown relation kind " + f[2]);
      }
      rel.cost = DefaultCost(rel.kind);
      if (f.size() == 6) {
        if (f[4] != "cost") throw ParseError(source, lineno, "expected 'cost'");
        try {
          size_t used = 0;
          rel.cost = std::stod(f[5], &used);
          if (used != f[5].size()) throw std::invalid_argument(f[5]);
        } catch (const std::exception &) {
          throw ParseError(source, lineno, "bad cost " + f[5]);
        }
        if (!(rel.cost >= 0)) throw ParseError(source, lineno, "negative cost");
        if (rel.kind == RelationKind::kSynonym && rel.cost != 0) {
          throw ParseError(source, lineno, "synonym cost must be 0");
        }
      }
      references.emplace_back(rel.source, lineno);
      references.emplace_back(rel.target, lineno);
      relations.push_back(std::move(rel));
    } else if (kind == "word") {
      if (f.size() != 3) {
        throw ParseError(source, lineno, "expected: word \"<surface>\" <node-id>");
      }
      references.emplace_back(f[2], lineno);
      lexicon.emplace(f[1], f[2]);
    } else {
      throw ParseError(source, lineno, "unknown record " + kind);
    }
  }
  for (const auto &[id, at] : references) {
    if (!ids.count(id)) throw ParseError(source, at, "unknown node " + id);
  }
  try {
    return Build(std::move(nodes), std::move(relations), std::move(lexicon));
  } catch (const CycleError &e) {
    throw ParseError(source, 0, e.what());
  }
}

SemanticNet SemanticNet::LoadFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return Load(in, path.string());
}

SemanticNet SemanticNet::Build(std::vector<SenseNode> nodes,
                               std::vector<Relation> relations,
                               std::multimap<std::string, std::string> lexicon) {
  SemanticNet net;
  std::sort(nodes.begin(), nodes.end(),
            [](const SenseNode &a, const SenseNode &b) { return a.id < b.id; });
  for (size_t i = 1; i < nodes.size(); ++i) {
    if (nodes[i].id == nodes[i - 1].id) {
      throw ValidationError("duplicate node " + nodes[i].id);
    }
  }
  net.nodes_ = std::move(nodes);
  const int n = static_cast<int>(net.nodes_.size());

  auto index = [&](const std::string &id) {
    int i = net.IndexOf(id);
    if (i < 0) throw ValidationError("unknown node " + id);
    return i;
  };

  net.up_.assign(n, {});
  UnionFind synonyms(n);
  for (const Relation &rel : relations) {
    if (!(rel.cost >= 0)) throw ValidationError("negative cost");
    if (rel.kind == RelationKind::kSynonym && rel.cost != 0) {
      throw ValidationError("synonym cost must be 0");
    }
    int s = index(rel.source);
    int t = index(rel.target);
    if (rel.kind == RelationKind::kSynonym) synonyms.Union(s, t);
    auto &edges = net.up_[s];
    auto it = std::find_if(edges.begin(), edges.end(),
                           [&](const Edge &e) { return e.target == t; });
    if (it == edges.end()) {
      edges.push_back({t, rel.cost});
    } else {
      it->cost = std::min(it->cost, rel.cost);
    }
  }
  for (auto &edges : net.up_) {
    std::sort(edges.begin(), edges.end(),
              [](const Edge &a, const Edge &b) { return a.target < b.target; });
  }

  // Acyclicity on the quotient by synonym classes.
  std::vector<std::set<int>> quotient(n);
  std::vector<int> indegree(n, 0);
  for (const Relation &rel : relations) {
    if (rel.kind == RelationKind::kSynonym) continue;
    int s = synonyms.Find(index(rel.source));
    int t = synonyms.Find(index(rel.target));
    if (s == t) throw CycleError(rel.source);
    if (quotient[s].insert(t).second) ++indegree[t];
  }
  std::vector<int> ready;
  int classes = 0;
  for (int i = 0; i < n; ++i) {
    if (synonyms.Find(i) != i) continue;
    ++classes;
    if (indegree[i] == 0) ready.push_back(i);
  }
  int processed = 0;
  while (!ready.empty()) {
    int c = ready.back();
    ready.pop_back();
    ++processed;
    for (int t : quotient[c]) {
      if (--indegree[t] == 0) ready.push_back(t);
    }
  }
  if (processed != classes) {
    for (int i = 0; i < n; ++i) {
      if (indegree[synonyms.Find(i)] > 0) throw CycleError(net.nodes_[i].id);
    }
  }

  // Strongly connected components of the upward graph (iterative Tarjan).
  // Only zero-cost synonym loops can make these non-trivial.
  net.component_.assign(n, -1);
  {
    std::vector<int> low(n), order(n, -1), stack;
    std::vector<bool> on_stack(n, false);
    int counter = 0, components = 0;
    for (int root = 0; root < n; ++root) {
      if (order[root] >= 0) continue;
      std::vector<std::pair<int, size_t>> frames{{root, 0}};
      order[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!frames.empty()) {
        auto &[v, next] = frames.back();
        if (next < net.up_[v].size()) {
          int w = net.up_[v][next++].target;
          if (order[w] < 0) {
            order[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = true;
            frames.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], order[w]);
          }
          continue;
        }
        if (low[v] == order[v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            net.component_[w] = components;
          } while (w != v);
          ++components;
        }
        int done = v;
        frames.pop_back();
        if (!frames.empty()) {
          int parent = frames.back().first;
          low[parent] = std::min(low[parent], low[done]);
        }
      }
    }
    net.component_up_.assign(components, {});
    for (int v = 0; v < n; ++v) {
      for (const Edge &e : net.up_[v]) {
        int a = net.component_[v], b = net.component_[e.target];
        if (a != b) net.component_up_[a].push_back(b);
      }
    }
    for (auto &ups : net.component_up_) {
      std::sort(ups.begin(), ups.end());
      ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
    }
  }

  for (const auto &[word, node] : lexicon) {
    net.senses_[ToLower(word)].push_back(index(node));
  }
  for (auto &[word, senses] : net.senses_) {
    std::sort(senses.begin(), senses.end());
    senses.erase(std::unique(senses.begin(), senses.end()), senses.end());
  }
  net.relations_ = std::move(relations);
  return net;
}

int SemanticNet::IndexOf(std::string_view id) const {
  auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), id,
      [](const SenseNode &node, std::string_view key) { return node.id < key; });
  if (it == nodes_.end() || it->id != id) return -1;
  return static_cast<int>(it - nodes_.begin());
}

bool SemanticNet::HasNode(std::string_view id) const { return IndexOf(id) >= 0; }

const std::vector<int> *SemanticNet::SenseIndices(std::string_view word) const {
  auto it = senses_.find(ToLower(word));
  return it == senses_.end() ? nullptr : &it->second;
}

bool SemanticNet::HasWord(std::string_view word) const {
  return SenseIndices(word) != nullptr;
}

std::vector<std::string> SemanticNet::Words() const {
  std::vector<std::string> out;
  out.reserve(senses_.size());
  for (const auto &entry : senses_) out.push_back(entry.first);
  return out;
}

std::vector<std::string> SemanticNet::Senses(std::string_view word) const {
  std::vector<std::string> ids;
  if (const auto *senses = SenseIndices(word)) {
    for (int s : *senses) ids.push_back(nodes_[s].id);
  }
  return ids;
}

std::vector<double> SemanticNet::Cone(int node) const {
  return WordCone({node});
}

// Multi-source Dijkstra over upward edges. Ties pop in index order, which is
// id order, so the traversal is deterministic.
std::vector<double> SemanticNet::WordCone(const std::vector<int> &senses) const {
  std::vector<double> dist(nodes_.size(), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  for (int s : senses) {
    dist[s] = 0;
    queue.emplace(0.0, s);
  }
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;
    for (const Edge &e : up_[v]) {
      double nd = d + e.cost;
      if (nd < dist[e.target]) {
        dist[e.target] = nd;
        queue.emplace(nd, e.target);
      }
    }
  }
  return dist;
}

std::map<std::string, double> SemanticNet::AncestorCone(std::string_view node) const {
  int index = IndexOf(node);
  if (index < 0) throw NotFoundError("unknown node " + std::string(node));
  std::vector<double> dist = Cone(index);
  std::map<std::string, double> cone;
  for (size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] != kInf) cone.emplace(nodes_[i].id, dist[i]);
  }
  return cone;
}

std::vector<CommonAncestor> SemanticNet::Nca(const std::vector<int> &a,
                                             const std::vector<int> &b) const {
  std::vector<double> ca = WordCone(a);
  std::vector<double> cb = WordCone(b);
  std::vector<int> common;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (ca[i] != kInf && cb[i] != kInf) common.push_back(static_cast<int>(i));
  }
  if (common.empty()) return {};

  // A common ancestor is not nearest if its component lies strictly above
  // the component of another common ancestor.
  std::vector<bool> visited(component_up_.size(), false);
  std::vector<bool> above(component_up_.size(), false);
  std::vector<int> queue;
  for (int v : common) {
    int c = component_[v];
    if (!visited[c]) {
      visited[c] = true;
      queue.push_back(c);
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int d : component_up_[queue[head]]) {
      above[d] = true;
      if (!visited[d]) {
        visited[d] = true;
        queue.push_back(d);
      }
    }
  }

  std::vector<CommonAncestor> result;
  for (int v : common) {
    if (above[component_[v]]) continue;
    result.push_back({nodes_[v].id, ca[v], cb[v]});
  }
  return result;
}

std::vector<CommonAncestor> SemanticNet::NearestCommonAncestors(
    std::string_view a, std::string_view b) const {
  const auto *sa = SenseIndices(a);
  if (!sa) throw NotFoundError("unknown word " + std::string(a));
  const auto *sb = SenseIndices(b);
  if (!sb) throw NotFoundError("unknown word " + std::string(b));
  return Nca(*sa, *sb);
}

Proximity SemanticNet::Distance(std::string_view a, std::string_view b) const {
  const auto *sa = SenseIndices(a);
  const auto *sb = SenseIndices(b);
  if (!sa || !sb) return Proximity::Unrelated();
  std::vector<CommonAncestor> nca = Nca(*sa, *sb);
  if (nca.empty()) return Proximity::Unrelated();
  double sum = 0;
  for (const CommonAncestor &c : nca) sum += c.from_a + c.from_b;
  return Proximity::Value(sum / static_cast<double>(nca.size()));
}

}  // namespace parafact
