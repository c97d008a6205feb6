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

// Command-line entry points for the acquisition and extraction pipeline.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>

#include "parafact/acquisition.h"
#include "parafact/compiled_graph.h"
#include "parafact/corpus.h"
#include "parafact/error.h"
#include "parafact/evaluation.h"
#include "parafact/extraction.h"
#include "parafact/lexicon.h"
#include "parafact/metagraph.h"
#include "parafact/pattern.h"
#include "parafact/semnet.h"
#include "parafact/server.h"
#include "parafact/text.h"
#include "parafact/workbench.h"

namespace fs = std::filesystem;

namespace parafact {
namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct AnalysisFlags {
  std::string corpus;
  std::string lexicon;
  std::string stopwords;
  std::string gazetteer;

  void Register(CLI::App *cmd, bool corpus_required) {
    auto *c = cmd->add_option("--corpus", corpus, "Directory of .txt documents");
    if (corpus_required) c->required();
    cmd->add_option("--lexicon", lexicon, "Lexicon file")->required();
    cmd->add_option("--stopwords", stopwords, "Stopword list");
    cmd->add_option("--gazetteer", gazetteer, "Entity gazetteer");
  }

  Lexicon LoadLexicon() const { return Lexicon::LoadFile(lexicon); }

  std::vector<Sentence> Analyze(const Lexicon &lex) const {
    Stopwords stop = stopwords.empty() ? Stopwords{} : LoadStopwordsFile(stopwords);
    Gazetteer gaz = gazetteer.empty() ? Gazetteer{} : Gazetteer::LoadFile(gazetteer);
    std::vector<Document> docs = LoadCorpusDir(corpus);
    return AnalyzeCorpus(docs, lex, gaz, stop);
  }
};

// Writes to `path`, or stdout when empty.
void WriteOutput(const std::string &path, const std::string &content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Error("cannot write " + path);
}

int RunNetValidate(const std::string &path) {
  SemanticNet net = SemanticNet::LoadFile(path);
  std::cout << "ok nodes=" << net.node_count() << " relations=" << net.relation_count()
            << " words=" << net.word_count() << "\n";
  return 0;
}

struct AcquireFlags {
  std::string net;
  AnalysisFlags analysis;
  std::vector<std::string> seeds;
  double threshold = 0;
  std::string out;
};

int RunAcquire(const AcquireFlags &f) {
  SemanticNet net = SemanticNet::LoadFile(f.net);
  Lexicon lex = f.analysis.LoadLexicon();
  std::vector<Sentence> sentences = f.analysis.Analyze(lex);
  std::vector<PatternRow> rows;
  for (const std::string &text : f.seeds) {
    PatternTable t = AcquireCorpus(SeedPattern::Parse(text), sentences, net, lex, f.threshold);
    rows.insert(rows.end(), t.rows().begin(), t.rows().end());
  }
  PatternTable table = MergeRows(std::move(rows));
  WriteOutput(f.out, table.ToTsv());
  if (!f.out.empty()) {
    for (const PatternRow &row : table.rows()) {
      std::cout << row.Id() << '\t' << row.elt1 << '\t' << PosLetter(row.cat1) << '\t'
                << row.elt2 << '\t' << PosLetter(row.cat2) << '\t'
                << FormatFixed(row.score, 6) << '\n';
    }
  }
  return 0;
}

struct DecideFlags {
  std::string table;
  std::vector<std::string> accept;
  std::vector<std::string> reject;
  std::string out;
  bool accepted_only = false;
};

int RunDecide(const DecideFlags &f) {
  PatternTable table = PatternTable::ReadTsvFile(f.table);
  auto apply = [&](const std::vector<std::string> &ids, RowStatus status) {
    for (const std::string &id : ids) {
      PatternRow *row = table.FindMutable(id);
      if (!row) throw NotFoundError("unknown row id " + id);
      row->status = status;
    }
  };
  apply(f.accept, RowStatus::kAccepted);
  apply(f.reject, RowStatus::kRejected);
  if (f.accepted_only) table = table.Accepted();
  WriteOutput(f.out.empty() ? f.table : f.out, table.ToTsv());
  return 0;
}

struct CompileFlags {
  std::string metagraphs;
  std::string table;
  std::string lexicon;
  std::string out;
  bool stats = false;
};

int RunCompile(const CompileFlags &f) {
  std::vector<MetaGraph> metas = ParseMetaGraphsFile(f.metagraphs);
  PatternTable table = PatternTable::ReadTsvFile(f.table);
  Lexicon lex = Lexicon::LoadFile(f.lexicon);
  CompiledGraph graph = Compile(metas, table, lex);
  WriteOutput(f.out, graph.Serialize());
  if (f.stats) {
    auto [states, transitions] = graph.Stats();
    (f.out.empty() ? std::cerr : std::cout)
        << "states=" << states << " transitions=" << transitions << "\n";
  }
  return 0;
}

struct ExtractFlags {
  std::string graph;
  AnalysisFlags analysis;
  std::string out;
  bool dedupe = false;
};

int RunExtract(const ExtractFlags &f) {
  CompiledGraph graph = CompiledGraph::LoadFile(f.graph);
  Lexicon lex = f.analysis.LoadLexicon();
  std::vector<Sentence> sentences = f.analysis.Analyze(lex);
  std::vector<ExtractionRecord> records = Extract(graph, sentences);
  if (f.dedupe) records = DedupePerDocument(std::move(records));
  std::ostringstream out;
  WriteRecordsTsv(out, records);
  WriteOutput(f.out, out.str());
  return 0;
}

struct EvalFlags {
  std::string records;
  std::string gold;
  bool classify = false;
  std::string net;
  std::string table;
  std::string graph;
  double threshold = 0;
  AnalysisFlags analysis;
  std::string misses_out;
};

int RunEval(const EvalFlags &f) {
  if (f.classify) {
    for (const auto &[flag, value] :
         {std::pair{"--net", &f.net}, {"--table", &f.table}, {"--graph", &f.graph},
          {"--corpus", &f.analysis.corpus}, {"--lexicon", &f.analysis.lexicon}}) {
      if (value->empty()) throw CLI::RequiredError(std::string(flag) + " (with --classify-misses)");
    }
  }
  std::vector<ExtractionRecord> records = ReadRecordsTsvFile(f.records);
  std::vector<GoldAnnotation> gold = ReadGoldTsvFile(f.gold);
  std::vector<SlotScore> scores = Evaluate(records, gold);
  WriteReport(std::cout, scores);
  if (!f.classify) return 0;
  SemanticNet net = SemanticNet::LoadFile(f.net);
  PatternTable table = PatternTable::ReadTsvFile(f.table);
  CompiledGraph graph = CompiledGraph::LoadFile(f.graph);
  Lexicon lex = f.analysis.LoadLexicon();
  std::vector<Sentence> sentences = f.analysis.Analyze(lex);
  MissContext ctx;
  ctx.sentences = sentences;
  ctx.table = &table;
  ctx.net = &net;
  ctx.threshold = f.threshold;
  ctx.graph = &graph;
  std::vector<GoldAnnotation> misses = Misses(records, gold);
  std::ostringstream report;
  WriteMissReport(report, ClassifyMisses(misses, ctx));
  if (f.misses_out.empty()) {
    std::cout << "\n" << report.str();
  } else {
    WriteOutput(f.misses_out, report.str());
  }
  return 0;
}

struct ServeFlags {
  std::string data_dir;
  std::string listen;
  std::string net;
  AnalysisFlags analysis;
};

int RunServe(const ServeFlags &f) {
  ServeConfig config = ServeConfigFromEnv();
  if (!f.data_dir.empty()) config.data_dir = f.data_dir;
  if (!f.listen.empty()) config.listen = f.listen;
  auto [host, port] = ParseListen(config.listen);

  std::optional<SemanticNet> net;
  std::optional<Lexicon> lex;
  std::vector<Sentence> sentences;
  WorkbenchResources resources;
  if (!f.net.empty()) net = SemanticNet::LoadFile(f.net);
  if (!f.analysis.lexicon.empty()) lex = f.analysis.LoadLexicon();
  if (lex && !f.analysis.corpus.empty()) sentences = f.analysis.Analyze(*lex);
  if (net && lex && !f.analysis.corpus.empty()) {
    resources = {&sentences, &*net, &*lex};
  }
  Workbench workbench(config.data_dir, resources);
  httplib::Server server;
  RegisterRoutes(server, workbench);
  if (!server.bind_to_port(host, port)) throw Error("cannot listen on " + config.listen);
  std::cerr << "listening on " << config.listen << " data=" << config.data_dir << "\n";
  server.listen_after_bind();
  return 0;
}

int Main(int argc, char **argv) {
  CLI::App app{"parafact: paraphrase-pattern acquisition and extraction"};
  app.require_subcommand(1);

  CLI::App *net_cmd = app.add_subcommand("net", "Semantic-net utilities");
  net_cmd->require_subcommand(1);
  std::string net_file;
  CLI::App *validate = net_cmd->add_subcommand("validate", "Check a semantic net");
  validate->add_option("net-file", net_file, "Net file")->required();

  AcquireFlags acq;
  CLI::App *acquire = app.add_subcommand("acquire", "Propose pattern rows from seeds");
  acquire->add_option("--net", acq.net, "Semantic net")->required();
  acq.analysis.Register(acquire, true);
  acquire->add_option("--seed", acq.seeds, "head/expansion/etq/objet")->required();
  acquire->add_option("--threshold", acq.threshold, "Proximity threshold")->required();
  acquire->add_option("--out", acq.out, "Output table (stdout if omitted)");

  DecideFlags dec;
  CLI::App *decide = app.add_subcommand("decide", "Accept or reject table rows");
  decide->add_option("--table", dec.table, "Pattern table")->required();
  decide->add_option("--accept", dec.accept, "Row ids to accept");
  decide->add_option("--reject", dec.reject, "Row ids to reject");
  decide->add_option("--out", dec.out, "Output table (default: rewrite --table)");
  decide->add_flag("--accepted-only", dec.accepted_only, "Keep accepted rows only");

  CompileFlags comp;
  CLI::App *compile = app.add_subcommand("compile", "Compile meta-graphs against a table");
  compile->add_option("--metagraphs", comp.metagraphs, "Meta-graph file")->required();
  compile->add_option("--table", comp.table, "Pattern table")->required();
  compile->add_option("--lexicon", comp.lexicon, "Lexicon file")->required();
  compile->add_option("--out", comp.out, "Output graph (stdout if omitted)");
  compile->add_flag("--stats", comp.stats, "Print state and transition counts");

  ExtractFlags ext;
  CLI::App *extract = app.add_subcommand("extract", "Run a compiled graph over a corpus");
  extract->add_option("--graph", ext.graph, "Compiled graph")->required();
  ext.analysis.Register(extract, true);
  extract->add_option("--out", ext.out, "Output records (stdout if omitted)");
  extract->add_flag("--dedupe", ext.dedupe, "Keep one record per (doc, slot, filler)");

  EvalFlags ev;
  CLI::App *eval = app.add_subcommand("eval", "Score records against gold annotations");
  eval->add_option("--records", ev.records, "Extraction records")->required();
  eval->add_option("--gold", ev.gold, "Gold annotations")->required();
  eval->add_flag("--classify-misses", ev.classify, "Explain each missed annotation");
  eval->add_option("--net", ev.net, "Semantic net (for --classify-misses)");
  eval->add_option("--table", ev.table, "Pattern table (for --classify-misses)");
  eval->add_option("--graph", ev.graph, "Compiled graph (for --classify-misses)");
  eval->add_option("--threshold", ev.threshold, "Proximity threshold (for --classify-misses)");
  eval->add_option("--corpus", ev.analysis.corpus, "Corpus directory");
  eval->add_option("--lexicon", ev.analysis.lexicon, "Lexicon file");
  eval->add_option("--stopwords", ev.analysis.stopwords, "Stopword list");
  eval->add_option("--gazetteer", ev.analysis.gazetteer, "Entity gazetteer");
  eval->add_option("--misses-out", ev.misses_out, "Miss report file (stdout if omitted)");

  ServeFlags srv;
  CLI::App *serve = app.add_subcommand("serve", "Start the workbench HTTP service");
  serve->add_option("--data-dir", srv.data_dir, "Data directory (env PARAFACT_DATA_DIR)");
  serve->add_option("--listen", srv.listen, "host:port (env PARAFACT_LISTEN)");
  serve->add_option("--net", srv.net, "Semantic net");
  serve->add_option("--corpus", srv.analysis.corpus, "Corpus directory");
  serve->add_option("--lexicon", srv.analysis.lexicon, "Lexicon file");
  serve->add_option("--stopwords", srv.analysis.stopwords, "Stopword list");
  serve->add_option("--gazetteer", srv.analysis.gazetteer, "Entity gazetteer");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate) return RunNetValidate(net_file);
    if (*acquire) return RunAcquire(acq);
    if (*decide) return RunDecide(dec);
    if (*compile) return RunCompile(comp);
    if (*extract) return RunExtract(ext);
    if (*eval) return RunEval(ev);
    if (*serve) return RunServe(srv);
  } catch (const CLI::Error &e) {
    std::cerr << "parafact: missing option " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    std::cerr << "parafact: " << e.what() << "\n";
    return kExitData;
  } catch (const CycleError &e) {
    std::cerr << "parafact: " << e.what() << "\n";
    return kExitData;
  } catch (const fs::filesystem_error &e) {
    std::cerr << "parafact: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception &e) {
    std::cerr << "parafact: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace parafact

int main(int argc, char **argv) { return parafact::Main(argc, argv); }
