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

// Serial reference kernels against their OpenMP counterparts on a corpus
// made of repeated fixture documents.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "parafact/acquisition.h"
#include "parafact/compiled_graph.h"
#include "parafact/corpus.h"
#include "parafact/extraction.h"
#include "parafact/metagraph.h"

namespace {

using namespace parafact;

std::string Fixture(const std::string &name) { return std::string(PARAFACT_FIXTURES_DIR) + "/" + name; }

struct Inputs {
  Lexicon lexicon = Lexicon::LoadFile(Fixture("lexicon.txt"));
  Gazetteer gazetteer = Gazetteer::LoadFile(Fixture("gazetteer.tsv"));
  Stopwords stopwords = LoadStopwordsFile(Fixture("stopwords.txt"));
  SemanticNet net = SemanticNet::LoadFile(Fixture("acq-net-spurious.txt"));
  std::vector<Document> base;
  CompiledGraph graph;

  Inputs() {
    base = LoadCorpusDir(Fixture("corpus_s5"));
    for (Document &d : LoadCorpusDir(Fixture("corpus_eval"))) base.push_back(std::move(d));
    auto metas = ParseMetaGraphsFile(Fixture("metagraphs.txt"));
    graph = Compile(metas, PatternTable::ReadTsvFile(Fixture("recognition_table.tsv")), lexicon);
  }
};

const Inputs &Shared() {
  static const Inputs inputs;
  return inputs;
}

std::vector<Document> Docs(int copies) {
  std::vector<Document> docs;
  for (int c = 0; c < copies; ++c) {
    for (const Document &d : Shared().base) docs.push_back({d.id + "-" + std::to_string(c), d.text});
  }
  return docs;
}

std::vector<Sentence> Sentences(int copies) {
  const Inputs &in = Shared();
  auto docs = Docs(copies);
  return serial::AnalyzeCorpus(docs, in.lexicon, in.gazetteer, in.stopwords);
}

const SeedPattern kSeed = SeedPattern::Parse("cession/société/entreprise_achetee/$2");

template <bool kParallel>
void BM_Analyze(benchmark::State &state) {
  const Inputs &in = Shared();
  auto docs = Docs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = kParallel ? AnalyzeCorpus(docs, in.lexicon, in.gazetteer, in.stopwords)
                         : serial::AnalyzeCorpus(docs, in.lexicon, in.gazetteer, in.stopwords);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(docs.size()));
}

template <bool kParallel>
void BM_Acquire(benchmark::State &state) {
  const Inputs &in = Shared();
  auto sentences = Sentences(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = kParallel ? AcquireCorpus(kSeed, sentences, in.net, in.lexicon, 2.0)
                         : serial::AcquireCorpus(kSeed, sentences, in.net, in.lexicon, 2.0);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sentences.size()));
}

template <bool kParallel>
void BM_Extract(benchmark::State &state) {
  const Inputs &in = Shared();
  auto sentences = Sentences(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = kParallel ? Extract(in.graph, sentences) : serial::Extract(in.graph, sentences);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sentences.size()));
}

BENCHMARK(BM_Analyze<false>)->Name("Analyze/serial")->RangeMultiplier(8)->Range(8, 512);
BENCHMARK(BM_Analyze<true>)->Name("Analyze/omp")->RangeMultiplier(8)->Range(8, 512)->UseRealTime();
BENCHMARK(BM_Acquire<false>)->Name("Acquire/serial")->RangeMultiplier(8)->Range(8, 512);
BENCHMARK(BM_Acquire<true>)->Name("Acquire/omp")->RangeMultiplier(8)->Range(8, 512)->UseRealTime();
BENCHMARK(BM_Extract<false>)->Name("Extract/serial")->RangeMultiplier(8)->Range(8, 512);
BENCHMARK(BM_Extract<true>)->Name("Extract/omp")->RangeMultiplier(8)->Range(8, 512)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
