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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "oracles.h"
#include "parafact/acquisition.h"
#include "parafact/extraction.h"

using namespace parafact;
using parafact::testing::FixturePath;
using parafact::testing::LoadFixtures;
using parafact::testing::RunCli;

namespace fs = std::filesystem;

namespace {

std::string Workdir(const std::string &name) {
  auto dir = fs::temp_directory_path() / ("parafact-clitest-" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir.string();
}

std::string ReadAll(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

std::vector<std::string> Analysis() {
  return {"--lexicon", FixturePath("lexicon.txt"), "--stopwords", FixturePath("stopwords.txt"),
          "--gazetteer", FixturePath("gazetteer.tsv")};
}

}  // namespace

TEST_CASE("help and usage") {
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"--help"}, {"net", "validate", "--help"}, {"acquire", "--help"}, {"decide", "--help"},
           {"compile", "--help"}, {"extract", "--help"}, {"eval", "--help"}, {"serve", "--help"}}) {
    CAPTURE(args.front());
    CHECK(RunCli(args).exit_code == 0);
  }
  CHECK(RunCli({}).exit_code == 1);
  CHECK(RunCli({"frobnicate"}).exit_code == 1);
  CHECK(RunCli({"acquire", "--net", "x"}).exit_code == 1);
  CHECK(RunCli({"eval", "--records", "r", "--gold", "g", "--classify-misses"}).exit_code == 1);
}

TEST_CASE("net validate") {
  auto ok = RunCli({"net", "validate", FixturePath("acq-net.txt")});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "ok nodes=8 relations=5 words=18\n");

  std::string dir = Workdir("net");
  std::ofstream(dir + "/cycle.txt") << "node A a\nnode B b\nrel A hyper B\nrel B hyper A\n";
  auto cycle = RunCli({"net", "validate", dir + "/cycle.txt"});
  CHECK(cycle.exit_code == 2);
  CHECK(cycle.err.find("cycle") != std::string::npos);
  CHECK(std::count(cycle.err.begin(), cycle.err.end(), '\n') == 1);

  std::ofstream(dir + "/bad.txt") << "node A a\nbogus line\n";
  auto bad = RunCli({"net", "validate", dir + "/bad.txt"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find(":2") != std::string::npos);
  CHECK(RunCli({"net", "validate", dir + "/missing.txt"}).exit_code == 2);
}

TEST_CASE("full pipeline") {
  auto p = testing::RunCliPipeline(Workdir("pipeline"));
  REQUIRE(p.ok);
  CHECK(p.eval.out.find("arg2\t6\t0\t0\t1.0000\t1.0000\t1.0000") != std::string::npos);
  CHECK(p.eval_planted.out.find("d07\t0\targ2\tnet-gap") != std::string::npos);
  CHECK(p.eval_planted.out.find("d08\t0\targ2\ttransformation-gap") != std::string::npos);

  // Outputs are byte-identical to the library calls they wrap.
  const auto &f = LoadFixtures();
  const auto &lib = testing::LoadPipelineFixture();
  CHECK(ReadAll(p.table_path) == lib.table.ToTsv());
  CHECK(ReadAll(p.graph_path) == lib.graph.Serialize());
  std::ostringstream records;
  WriteRecordsTsv(records, DedupePerDocument(Extract(lib.graph, f.eval)));
  CHECK(ReadAll(p.records_path) == records.str());

  auto [states, transitions] = lib.graph.Stats();
  CHECK(p.compile.out == "states=" + std::to_string(states) +
                             " transitions=" + std::to_string(transitions) + "\n");
  CHECK(lib.graph.Stats() == testing::GoldenStats("pipeline"));
}

TEST_CASE("acquire at threshold 0") {
  std::vector<std::string> args = {"acquire", "--net", FixturePath("acq-net.txt"), "--corpus",
                                   FixturePath("corpus_s5"), "--seed",
                                   "cession/société/entreprise_achetee/$2", "--threshold", "0"};
  for (const auto &a : Analysis()) args.push_back(a);
  auto r = RunCli(args);
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  PatternTable table = PatternTable::ReadTsv(in);
  REQUIRE(table.size() == 1);
  CHECK(table.rows()[0].elt1 == "cession");
  CHECK(table.rows()[0].elt2 == "c-company");
  for (const PatternRow &row : table.rows()) CHECK(row.score == 0);

  args[8] = "-1";
  CHECK(RunCli(args).exit_code == 2);
}

TEST_CASE("decide") {
  std::string dir = Workdir("decide");
  fs::copy_file(FixturePath("recognition_table.tsv"), dir + "/t.tsv");
  PatternTable before = PatternTable::ReadTsvFile(dir + "/t.tsv");
  const std::string rejected = before.rows().back().Id();
  const std::string first = before.rows().front().Id();
  CHECK(RunCli({"decide", "--table", dir + "/t.tsv", "--accept", rejected, "--reject", first,
                "--out", dir + "/u.tsv"})
            .exit_code == 0);
  PatternTable after = PatternTable::ReadTsvFile(dir + "/u.tsv");
  CHECK(after.Find(rejected)->status == RowStatus::kAccepted);
  CHECK(after.Find(first)->status == RowStatus::kRejected);
  CHECK(RunCli({"decide", "--table", dir + "/t.tsv", "--accept", "ffffffffffffffff"}).exit_code == 2);
  CHECK(RunCli({"decide", "--table", dir + "/u.tsv", "--accepted-only"}).exit_code == 0);
  CHECK(PatternTable::ReadTsvFile(dir + "/u.tsv").size() == before.size() - 1);
}
