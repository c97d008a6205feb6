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

#include "oracles.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "parafact/acquisition.h"
#include "parafact/text.h"

namespace parafact::testing {

using nlohmann::json;

std::string FixturePath(const std::string &name) {
  return std::string(PARAFACT_FIXTURES_DIR) + "/" + name;
}

const Fixtures &LoadFixtures() {
  static const Fixtures *fixtures = [] {
    auto *f = new Fixtures{
        SemanticNet::LoadFile(FixturePath("acq-net.txt")),
        SemanticNet::LoadFile(FixturePath("acq-net-spurious.txt")),
        Lexicon::LoadFile(FixturePath("lexicon.txt")),
        LoadStopwordsFile(FixturePath("stopwords.txt")),
        Gazetteer::LoadFile(FixturePath("gazetteer.tsv")),
        {},
        {}};
    f->s5 = serial::AnalyzeCorpus(LoadCorpusDir(FixturePath("corpus_s5")), f->lexicon,
                                  f->gazetteer, f->stopwords);
    f->eval = serial::AnalyzeCorpus(LoadCorpusDir(FixturePath("corpus_eval")), f->lexicon,
                                    f->gazetteer, f->stopwords);
    return f;
  }();
  return *fixtures;
}

SeedPattern S5Seed() { return {"cession", "société", "entreprise_achetee", "$2"}; }

SemanticNet RandomNet::Build() const { return SemanticNet::Build(nodes, relations, lexicon); }

RandomNet MakeRandomNet(std::mt19937_64 &rng, int max_nodes, int max_senses) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  RandomNet net;
  const int n = uniform(1, max_nodes);
  for (int i = 0; i < n; ++i) {
    char id[16];
    std::snprintf(id, sizeof(id), "n%02d", i);
    net.nodes.push_back({id, id});
  }
  // Nodes of one class may only be linked by synonymy; other relations go
  // from a lower class rank to a higher one.
  const int classes = uniform(1, n);
  std::vector<int> cls(n);
  for (int &c : cls) c = uniform(0, classes - 1);
  std::vector<int> rank(classes);
  for (int i = 0; i < classes; ++i) rank[i] = i;
  std::shuffle(rank.begin(), rank.end(), rng);

  const double density = std::uniform_real_distribution<double>(0.1, 0.5)(rng);
  const RelationKind kinds[] = {RelationKind::kHypernym, RelationKind::kMeronym,
                                RelationKind::kAssociation};
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (cls[u] == cls[v]) {
        if (chance(0.4)) {
          net.relations.push_back({net.nodes[u].id, net.nodes[v].id, RelationKind::kSynonym, 0.0});
        }
      } else if (rank[cls[u]] < rank[cls[v]] && chance(density)) {
        RelationKind kind = kinds[uniform(0, 2)];
        double cost = chance(0.2) ? DefaultCost(kind) : 0.5 * uniform(0, 6);
        net.relations.push_back({net.nodes[u].id, net.nodes[v].id, kind, cost});
      }
    }
  }
  const int words = uniform(1, 8);
  for (int w = 0; w < words; ++w) {
    std::string word = "w" + std::to_string(w);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    int senses = uniform(1, std::min(max_senses, n));
    for (int s = 0; s < senses; ++s) net.lexicon.emplace(word, net.nodes[order[s]].id);
    net.words.push_back(word);
  }
  return net;
}

ProximityOracle::ProximityOracle(const RandomNet &net)
    : ProximityOracle(net.nodes, net.relations, net.lexicon) {}

ProximityOracle::ProximityOracle(std::vector<SenseNode> nodes, std::vector<Relation> relations,
                                 std::multimap<std::string, std::string> lexicon)
    : lexicon_(std::move(lexicon)) {
  std::map<std::string, std::vector<std::pair<std::string, double>>> up;
  for (const SenseNode &n : nodes) ids_.push_back(n.id);
  for (const Relation &r : relations) up[r.source].push_back({r.target, r.cost});
  for (const std::string &id : ids_) {
    std::map<std::string, double> &cone = cone_[id];
    std::set<std::string> on_path;
    std::function<void(const std::string &, double)> walk = [&](const std::string &v, double cost) {
      auto it = cone.find(v);
      if (it == cone.end() || cost < it->second) cone[v] = cost;
      on_path.insert(v);
      for (const auto &[w, c] : up[v]) {
        if (!on_path.count(w)) walk(w, cost + c);
      }
      on_path.erase(v);
    };
    walk(id, 0.0);
  }
}

std::map<std::string, double> ProximityOracle::WordCone(const std::string &word) const {
  std::map<std::string, double> cone;
  auto [lo, hi] = lexicon_.equal_range(word);
  for (auto it = lo; it != hi; ++it) {
    for (const auto &[node, cost] : cone_.at(it->second)) {
      auto found = cone.find(node);
      if (found == cone.end() || cost < found->second) cone[node] = cost;
    }
  }
  return cone;
}

std::vector<CommonAncestor> ProximityOracle::Nca(const std::string &a, const std::string &b) const {
  std::map<std::string, double> ca = WordCone(a), cb = WordCone(b);
  std::vector<std::string> common;
  for (const auto &[node, cost] : ca) {
    if (cb.count(node)) common.push_back(node);
  }
  auto reaches = [&](const std::string &u, const std::string &v) { return cone_.at(u).count(v) > 0; };
  std::vector<CommonAncestor> out;
  for (const std::string &v : common) {
    bool strictly_above = false;
    for (const std::string &u : common) {
      if (u != v && reaches(u, v) && !reaches(v, u)) strictly_above = true;
    }
    if (!strictly_above) out.push_back({v, ca.at(v), cb.at(v)});
  }
  return out;
}

Proximity ProximityOracle::Distance(const std::string &a, const std::string &b) const {
  std::vector<CommonAncestor> nca = Nca(a, b);
  if (nca.empty()) return Proximity::Unrelated();
  double sum = 0;
  for (const CommonAncestor &c : nca) sum += c.from_a + c.from_b;
  return Proximity::Value(sum / static_cast<double>(nca.size()));
}

std::vector<PatternRow> OracleAcquire(const SeedPattern &seed, const Sentence &sentence,
                                      const SemanticNet &net, const Lexicon &lexicon,
                                      const Stopwords &stopwords, double threshold) {
  const int n = static_cast<int>(sentence.tokens.size());
  auto plain = [&](int i) {
    const Token &t = sentence.tokens[i];
    if (t.punct) return false;
    if (t.entity_class) return true;
    return !stopwords.count(ToLower(t.surface)) && t.pos != Pos::kD && t.pos != Pos::kP;
  };
  auto predicative = [&](const Token &t) {
    if (t.pos == Pos::kV) return true;
    if (t.pos != Pos::kN || t.entity_class) return false;
    for (const LexiconEntry &e : lexicon.Lookup(t.surface)) {
      if (e.lemma == t.lemma && e.pos == Pos::kN && e.predicative) return true;
    }
    return false;
  };
  std::vector<PatternRow> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!plain(i) || !plain(j)) continue;
      bool adjacent = true;
      for (int k = i + 1; k < j; ++k) adjacent = adjacent && !plain(k);
      if (!adjacent) continue;
      const Token &h = sentence.tokens[i], &e = sentence.tokens[j];
      Proximity p1 = net.Distance(seed.head, h.key());
      Proximity p2 = net.Distance(seed.expansion, e.key());
      if (!p1.related() || !p2.related() || p1.value() > threshold || p2.value() > threshold) continue;
      bool together = false;
      for (const Chunk &c : sentence.chunks) {
        together = together || (c.start <= i && i < c.end && c.start <= j && j < c.end);
      }
      if (!together || !predicative(h)) continue;
      PatternRow row;
      row.schema = h.pos == Pos::kV ? Schema::kMinus : Schema::kPlus;
      row.elt1 = h.key();
      row.cat1 = h.pos;
      row.elt2 = e.key();
      row.cat2 = e.pos;
      row.score = p1.value() + p2.value();
      row.etq = seed.etq;
      row.objet = seed.objet;
      row.provenance.insert({sentence.doc_id, sentence.index, i, j});
      rows.push_back(row);
    }
  }
  return rows;
}

std::string RowSignature(const PatternRow &row) {
  std::ostringstream out;
  out << SchemaSign(row.schema) << ' ' << row.elt1 << '/' << PosLetter(row.cat1) << ' '
      << row.elt2 << '/' << PosLetter(row.cat2) << ' ' << row.score << ' ' << row.etq << ' '
      << row.objet << ' ' << RowStatusName(row.status);
  for (const Provenance &p : row.provenance) {
    out << " [" << p.doc_id << ':' << p.sentence << ':' << p.head << ':' << p.expansion << ']';
  }
  return out.str();
}

NfaOracle::NfaOracle(std::span<const MetaGraph> metas, const PatternTable &table,
                     const Lexicon &lexicon) {
  for (const PatternRow &row : table.rows()) {
    if (row.status != RowStatus::kAccepted) continue;
    for (const MetaGraph &meta : metas) {
      if (auto a = Instantiate(meta, row, lexicon)) automata_.push_back({*a, row.elt1, row.elt2});
    }
  }
}

std::set<int> NfaOracle::Closure(const Automaton &a, std::set<int> states) {
  std::vector<int> todo(states.begin(), states.end());
  while (!todo.empty()) {
    int s = todo.back();
    todo.pop_back();
    for (const Arc &arc : a.arcs) {
      if (arc.from == s && arc.label.kind == Label::Kind::kEpsilon && states.insert(arc.to).second) {
        todo.push_back(arc.to);
      }
    }
  }
  return states;
}

std::set<int> NfaOracle::Move(const Automaton &a, const std::set<int> &states,
                              const GraphToken &tok) {
  std::set<int> next;
  for (const Arc &arc : a.arcs) {
    if (!states.count(arc.from)) continue;
    bool match = (arc.label.kind == Label::Kind::kWord && arc.label.word == tok.surface) ||
                 (arc.label.kind == Label::Kind::kPos && (tok.tags & PosBit(arc.label.pos)));
    if (match) next.insert(arc.to);
  }
  return Closure(a, std::move(next));
}

bool NfaOracle::Run(const Automaton &a, std::span<const GraphToken> tokens) {
  std::set<int> current = Closure(a, {a.start});
  for (const GraphToken &tok : tokens) {
    current = Move(a, current, tok);
    if (current.empty()) return false;
  }
  return std::any_of(a.accept.begin(), a.accept.end(), [&](int s) { return current.count(s) > 0; });
}

NfaOracle::Config NfaOracle::Start() const {
  Config config;
  for (const Entry &e : automata_) config.push_back(Closure(e.automaton, {e.automaton.start}));
  return config;
}

NfaOracle::Config NfaOracle::Advance(const Config &config, const GraphToken &token) const {
  Config next(config.size());
  for (size_t i = 0; i < config.size(); ++i) {
    if (!config[i].empty()) next[i] = Move(automata_[i].automaton, config[i], token);
  }
  return next;
}

bool NfaOracle::Live(const Config &config) {
  return std::any_of(config.begin(), config.end(), [](const std::set<int> &s) { return !s.empty(); });
}

bool NfaOracle::Accepting(const Config &config) const {
  for (size_t i = 0; i < config.size(); ++i) {
    for (int s : automata_[i].automaton.accept) {
      if (config[i].count(s)) return true;
    }
  }
  return false;
}

bool NfaOracle::Accepts(std::span<const GraphToken> tokens) const {
  return std::any_of(automata_.begin(), automata_.end(),
                     [&](const Entry &e) { return Run(e.automaton, tokens); });
}

bool NfaOracle::AcceptsWithRow(std::span<const GraphToken> tokens, const std::string &elt1,
                               const std::string &elt2) const {
  return std::any_of(automata_.begin(), automata_.end(), [&](const Entry &e) {
    return e.elt1 == elt1 && e.elt2 == elt2 && Run(e.automaton, tokens);
  });
}

Phrase MakePhrase(const std::string &text, const Lexicon &lexicon) {
  Phrase p;
  for (std::string_view w : SplitWhitespace(text)) p.surfaces.push_back(ToLower(w));
  for (const std::string &s : p.surfaces) p.tokens.push_back({s, TokenTags(s, lexicon)});
  return p;
}

RecognitionFixture LoadRecognitionFixture() {
  RecognitionFixture f;
  f.metas = ParseMetaGraphsFile(FixturePath("metagraphs.txt"));
  f.table = PatternTable::ReadTsvFile(FixturePath("recognition_table.tsv"));
  f.graph = Compile(f.metas, f.table, LoadFixtures().lexicon);
  return f;
}

const std::vector<BoundSequence> &DocumentedSequences() {
  static const std::vector<BoundSequence> kSequences = {
      {"reprise des activités", "Reprise des activités charter.", "reprise", "activité"},
      {"reprendre les activités", "Reprendre les activités charter.", "reprendre", "activité"},
      {"reprise de l' ensemble des magasins", "Reprise de l'ensemble des magasins suisses.",
       "reprise", "magasin"},
      {"reprendre l' ensemble des magasins", "Reprendre l'ensemble des magasins suisses.",
       "reprendre", "magasin"},
      {"racheter les différentes activités", "Racheter les différentes activités.", "racheter",
       "activité"},
      {"rachat des différentes activités", "Rachat des différentes activités.", "rachat",
       "activité"},
  };
  return kSequences;
}

const std::vector<std::pair<std::string, bool>> &PassiveCases() {
  static const std::vector<std::pair<std::string, bool>> kCases = {
      {"activités ont été rachetées", true},
      {"*c-company* a été rachetée", true},
      {"activités sont rachetées", true},
      {"usines ont été acquises", false},
      {"activités ont été reprises", false},
  };
  return kCases;
}

const std::vector<std::string> &NearMisses() {
  static const std::vector<std::string> kNearMisses = {
      "reprise les activités",
      "rachat activités",
      "cession des activités",
      "rachat des différentes usines",
      "racheter les différentes magasins",
      "reprendre l' ensemble de les magasins",
      "reprise de ensemble des magasins",
      "activités ont été reprises",
      "usines ont été acquises",
      "activités a rachetées",
      "rachat par les activités",
      "racheter à les activités",
      "les activités rachat",
      "activités des rachat",
      "reprendre les les activités",
      "racheter les très activités",
      "*c-company* , que a racheté",
      "cession des activités pour *c-company*",
      "reprise des activités différentes",
      "acquérir l' ensemble des activités",
  };
  return kNearMisses;
}

const std::vector<std::string> &EnumerationAlphabet() {
  static const std::vector<std::string> kAlphabet = {
      "reprise", "reprendre", "rachat", "racheter", "acquérir", "cession", "activités",
      "magasins", "usines", "*c-company*", "des", "de", "l'", "les", "ensemble",
      "différentes", "ont", "a", "été", "rachetées", "acquises", "par", "à", ",", "qui", "foo"};
  return kAlphabet;
}

EnumerationResult EnumerateAndCompare(const CompiledGraph &graph, const NfaOracle &oracle,
                                      const Lexicon &lexicon,
                                      const std::vector<std::string> &alphabet, int max_length) {
  EnumerationResult result;
  std::vector<GraphToken> symbols;
  for (const std::string &s : alphabet) symbols.push_back({s, TokenTags(s, lexicon)});
  std::vector<std::string> prefix;
  std::function<void(int, const NfaOracle::Config &)> walk = [&](int state,
                                                                 const NfaOracle::Config &config) {
    ++result.prefixes;
    bool dfa_accepts = !graph.state(state).accept_nfa.empty();
    bool nfa_accepts = oracle.Accepting(config);
    result.accepted += nfa_accepts;
    auto mismatch = [&](const std::string &what) {
      if (result.mismatches++ == 0) {
        for (const std::string &w : prefix) result.first_mismatch += w + " ";
        result.first_mismatch += "(" + what + ")";
      }
    };
    if (dfa_accepts != nfa_accepts) mismatch("acceptance");
    if (static_cast<int>(prefix.size()) == max_length) return;
    for (size_t i = 0; i < symbols.size(); ++i) {
      NfaOracle::Config next = oracle.Advance(config, symbols[i]);
      int t = graph.Step(state, symbols[i]);
      bool live = NfaOracle::Live(next);
      if (live != (t >= 0)) {
        prefix.push_back(alphabet[i]);
        mismatch("liveness");
        prefix.pop_back();
        continue;
      }
      if (!live) continue;
      prefix.push_back(alphabet[i]);
      walk(graph.transition(t).to, next);
      prefix.pop_back();
    }
  };
  walk(graph.start(), oracle.Start());
  return result;
}

const PipelineFixture &LoadPipelineFixture() {
  static const PipelineFixture fixture = [] {
    const Fixtures &f = LoadFixtures();
    PipelineFixture p;
    p.metas = ParseMetaGraphsFile(FixturePath("metagraphs.txt"));
    p.table = AcquireCorpus(S5Seed(), f.s5, f.net, f.lexicon, 2.0);
    for (PatternRow &row : p.table.mutable_rows()) row.status = RowStatus::kAccepted;
    p.graph = Compile(p.metas, p.table, f.lexicon);
    return p;
  }();
  return fixture;
}

namespace {

std::string ShellQuote(const std::string &s) {
  std::string out = "'";
  for (char ch : s) {
    if (ch == '\'') {
      out += "'\\''";
    } else {
      out += ch;
    }
  }
  return out + "'";
}

std::string Slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

CliResult RunCli(const std::vector<std::string> &args) {
  static std::atomic<int> counter{0};
  const auto base = std::filesystem::temp_directory_path() /
                    ("parafact-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::string command = ShellQuote(PARAFACT_CLI);
  for (const std::string &a : args) command += " " + ShellQuote(a);
  command += " >" + ShellQuote(base.string() + ".out") + " 2>" + ShellQuote(base.string() + ".err");
  int status = std::system(command.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = Slurp(base.string() + ".out");
  r.err = Slurp(base.string() + ".err");
  std::filesystem::remove(base.string() + ".out");
  std::filesystem::remove(base.string() + ".err");
  return r;
}

CliPipeline RunCliPipeline(const std::string &workdir) {
  namespace fs = std::filesystem;
  fs::create_directories(workdir);
  CliPipeline p;
  p.table_path = (fs::path(workdir) / "table.tsv").string();
  p.graph_path = (fs::path(workdir) / "graph.bin").string();
  p.records_path = (fs::path(workdir) / "records.tsv").string();
  const std::vector<std::string> analysis = {
      "--lexicon", FixturePath("lexicon.txt"), "--stopwords", FixturePath("stopwords.txt"),
      "--gazetteer", FixturePath("gazetteer.tsv")};
  auto with = [&](std::vector<std::string> args) {
    args.insert(args.end(), analysis.begin(), analysis.end());
    return args;
  };
  auto start = std::chrono::steady_clock::now();
  auto done = [&] {
    p.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return p;
  };

  p.acquire = RunCli(with({"acquire", "--net", FixturePath("acq-net.txt"), "--corpus",
                           FixturePath("corpus_s5"), "--seed",
                           "cession/société/entreprise_achetee/$2", "--threshold", "2",
                           "--out", p.table_path}));
  if (p.acquire.exit_code != 0) return done();
  std::vector<std::string> decide = {"decide", "--table", p.table_path};
  std::istringstream ids(p.acquire.out);
  std::string line;
  while (std::getline(ids, line)) {
    if (line.empty()) continue;
    decide.push_back("--accept");
    decide.push_back(line.substr(0, line.find('\t')));
  }
  p.decide = RunCli(decide);
  if (p.decide.exit_code != 0) return done();
  p.compile = RunCli({"compile", "--metagraphs", FixturePath("metagraphs.txt"), "--table",
                      p.table_path, "--lexicon", FixturePath("lexicon.txt"), "--out",
                      p.graph_path, "--stats"});
  if (p.compile.exit_code != 0) return done();
  p.extract = RunCli(with({"extract", "--graph", p.graph_path, "--corpus",
                           FixturePath("corpus_eval"), "--out", p.records_path, "--dedupe"}));
  if (p.extract.exit_code != 0) return done();
  p.eval = RunCli({"eval", "--records", p.records_path, "--gold", FixturePath("gold.tsv")});
  if (p.eval.exit_code != 0) return done();
  p.eval_planted = RunCli(with({"eval", "--records", p.records_path, "--gold",
                                FixturePath("gold_planted.tsv"), "--classify-misses", "--net",
                                FixturePath("acq-net.txt"), "--table", p.table_path, "--graph",
                                p.graph_path, "--threshold", "2", "--corpus",
                                FixturePath("corpus_eval")}));
  p.ok = p.eval_planted.exit_code == 0;
  return done();
}

std::string RandomFixtureText(std::mt19937 &rng) {
  static const char *kVocab[] = {
      "la", "le", "les", "des", "de", "d'", "l'", "du", "à", "a", "été",
      "cession", "reprise", "rachat", "activités", "activité", "magasins",
      "société", "groupe", "racheter", "acquérir", "reprendre", "renoncer",
      "se", "porter", "acquéreur", "différentes", "charter", "ensemble",
      "Vivendi", "Universal", "Air", "Liberté", "annoncé", "veut", ","};
  std::uniform_int_distribution<size_t> pick(0, std::size(kVocab) - 1);
  std::string text;
  const int n = std::uniform_int_distribution<int>(1, 14)(rng);
  for (int i = 0; i < n; ++i) text += std::string(i ? " " : "") + kVocab[pick(rng)];
  return text + ".";
}

std::string LogStats::per_seed_text() const {
  char text[32];
  std::snprintf(text, sizeof(text), "%d.%02d", accepted / seeds, (accepted * 100 / seeds) % 100);
  return text;
}

std::map<int, LogStats> StatsFromLogs(const std::string &proposals_path,
                                      const std::string &decisions_path) {
  std::map<int, LogStats> stats;
  std::map<std::string, int> round_of;
  std::map<std::string, std::string> last_verdict;
  std::ifstream proposals(proposals_path);
  std::string line;
  while (std::getline(proposals, line)) {
    json j = json::parse(line);
    LogStats &s = stats[j["id"].get<int>()];
    s.seeds = static_cast<int>(j["seeds"].size());
    for (const json &c : j["candidates"]) {
      ++s.proposed;
      PatternRow row;
      row.elt1 = c["elt1"];
      row.cat1 = *ParsePos(c["cat1"].get<std::string>());
      row.elt2 = c["elt2"];
      row.cat2 = *ParsePos(c["cat2"].get<std::string>());
      row.etq = c["etq"];
      round_of[row.Id()] = j["id"];
    }
  }
  std::ifstream decisions(decisions_path);
  while (std::getline(decisions, line)) {
    json j = json::parse(line);
    if (j["type"] == "decision") last_verdict[j["candidate_id"]] = j["verdict"];
  }
  for (const auto &[id, verdict] : last_verdict) {
    LogStats &s = stats[round_of.at(id)];
    (verdict == "accept" ? s.accepted : s.rejected)++;
  }
  return stats;
}

std::pair<size_t, size_t> GoldenStats(const std::string &name) {
  std::ifstream in(FixturePath("golden_stats.txt"));
  std::regex line_re(R"((\S+) states=(\d+) transitions=(\d+))");
  std::string line;
  while (std::getline(in, line)) {
    std::smatch m;
    if (std::regex_match(line, m, line_re) && m[1] == name) {
      return {std::stoul(m[2]), std::stoul(m[3])};
    }
  }
  return {0, 0};
}

}  // namespace parafact::testing
