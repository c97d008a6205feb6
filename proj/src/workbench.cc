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

#include "parafact/workbench.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <tuple>

#include <json.hpp>

#include "parafact/acquisition.h"
#include "parafact/error.h"
#include "parafact/text.h"

namespace parafact {

using json = nlohmann::json;

RoundStats ComputeRoundStats(int proposed, int accepted, int rejected, int seeds) {
  RoundStats s;
  s.proposed = proposed;
  s.accepted = accepted;
  s.rejected = rejected;
  s.acceptance_rate = proposed > 0 ? static_cast<double>(accepted) / proposed : 0.0;
  s.new_patterns_per_seed = seeds > 0 ? static_cast<double>(accepted) / seeds : 0.0;
  long hundredths = seeds > 0 ? 100L * accepted / seeds : 0;
  std::string frac = std::to_string(hundredths % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  s.new_patterns_per_seed_text = std::to_string(hundredths / 100) + "." + frac;
  return s;
}

Verdict ParseVerdict(std::string_view text) {
  if (text == "accept") return Verdict::kAccept;
  if (text == "reject") return Verdict::kReject;
  throw ValidationError("verdict must be accept or reject, got '" + std::string(text) + "'");
}

std::string_view VerdictName(Verdict verdict) {
  return verdict == Verdict::kAccept ? "accept" : "reject";
}

std::string UtcNow() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

json RowToJson(const PatternRow &row) {
  json prov = json::array();
  for (const Provenance &p : row.provenance) {
    prov.push_back({{"doc", p.doc_id}, {"sentence", p.sentence}, {"head", p.head},
                    {"expansion", p.expansion}});
  }
  return {{"schema", SchemaSign(row.schema)},
          {"elt1", row.elt1},
          {"cat1", std::string(1, PosLetter(row.cat1))},
          {"elt2", row.elt2},
          {"cat2", std::string(1, PosLetter(row.cat2))},
          {"score", row.score},
          {"etq", row.etq},
          {"objet", row.objet},
          {"provenance", prov}};
}

Pos PosField(const json &j, const char *name) {
  std::optional<Pos> pos = ParsePos(j.at(name).get<std::string>());
  if (!pos) throw ValidationError(std::string("bad POS in field ") + name);
  return *pos;
}

PatternRow RowFromJson(const json &j) {
  PatternRow row;
  row.schema = j.at("schema").get<std::string>() == "-" ? Schema::kMinus : Schema::kPlus;
  row.elt1 = j.at("elt1").get<std::string>();
  row.cat1 = PosField(j, "cat1");
  row.elt2 = j.at("elt2").get<std::string>();
  row.cat2 = PosField(j, "cat2");
  row.score = j.at("score").get<double>();
  row.etq = j.at("etq").get<std::string>();
  row.objet = j.at("objet").get<std::string>();
  for (const json &p : j.at("provenance")) {
    row.provenance.insert({p.at("doc").get<std::string>(), p.at("sentence").get<int>(),
                           p.at("head").get<int>(), p.at("expansion").get<int>()});
  }
  return row;
}

bool RowLess(const PatternRow &a, const PatternRow &b) {
  return std::tie(a.score, a.elt1, a.cat1, a.elt2, a.cat2, a.etq) <
         std::tie(b.score, b.elt1, b.cat1, b.elt2, b.cat2, b.etq);
}

// Complete, parsable lines of a log. A bad final line is cut from the file;
// a bad line elsewhere is corruption.
std::vector<std::string> ReadLog(const std::filesystem::path &path) {
  std::vector<std::string> lines;
  std::ifstream in(path, std::ios::binary);
  if (!in) return lines;
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  size_t pos = 0;
  size_t good_end = 0;
  int lineno = 0;
  while (pos < data.size()) {
    ++lineno;
    size_t nl = data.find('\n', pos);
    bool terminated = nl != std::string::npos;
    std::string line = data.substr(pos, terminated ? nl - pos : std::string::npos);
    bool parsable = json::accept(line);
    if (!terminated || !parsable) {
      if (terminated && data.find('\n', nl + 1) != std::string::npos) {
        throw ParseError(path.string(), lineno, "corrupt log record");
      }
      break;
    }
    lines.push_back(std::move(line));
    pos = nl + 1;
    good_end = pos;
  }
  if (good_end < data.size()) std::filesystem::resize_file(path, good_end);
  return lines;
}

}  // namespace

Workbench::Workbench(std::filesystem::path data_dir, WorkbenchResources resources,
                     Clock clock)
    : data_dir_(std::move(data_dir)),
      resources_(resources),
      clock_(clock ? std::move(clock) : Clock(UtcNow)) {
  std::filesystem::create_directories(data_dir_);
  Replay();
}

void Workbench::Replay() {
  for (const std::string &line : ReadLog(proposals_path())) ApplyRoundRecord(line);
  for (const std::string &line : ReadLog(decisions_path())) ApplyDecisionRecord(line);
}

void Workbench::ApplyRoundRecord(const std::string &line) {
  json j = json::parse(line);
  RoundState state;
  state.round.id = j.at("id").get<int>();
  for (const json &s : j.at("seeds")) state.round.seeds.push_back(SeedPattern::Parse(s.get<std::string>()));
  state.round.threshold = j.at("threshold").get<double>();
  state.round.created_at = j.at("created_at").get<std::string>();
  for (const json &c : j.at("candidates")) {
    PatternRow row = RowFromJson(c);
    std::string id = row.Id();
    state.candidate_ids.push_back(id);
    candidates_[id] = Candidate{state.round.id, std::move(row)};
  }
  rounds_[state.round.id] = std::move(state);
}

void Workbench::ApplyDecisionRecord(const std::string &line) {
  json j = json::parse(line);
  std::string type = j.at("type").get<std::string>();
  if (type == "close") {
    auto it = rounds_.find(j.at("round").get<int>());
    if (it != rounds_.end()) it->second.round.closed = true;
    return;
  }
  auto it = candidates_.find(j.at("candidate_id").get<std::string>());
  if (it == candidates_.end()) return;
  it->second.row.status = ParseVerdict(j.at("verdict").get<std::string>()) == Verdict::kAccept
                              ? RowStatus::kAccepted
                              : RowStatus::kRejected;
}

void Workbench::Append(const std::filesystem::path &path, const std::string &line) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  out << line << '\n';
  out.flush();
  if (!out) throw Error("cannot append to " + path.string());
}

RoundStats Workbench::StatsOf(const RoundState &state) const {
  int accepted = 0, rejected = 0;
  for (const std::string &id : state.candidate_ids) {
    RowStatus s = candidates_.at(id).row.status;
    accepted += s == RowStatus::kAccepted;
    rejected += s == RowStatus::kRejected;
  }
  return ComputeRoundStats(static_cast<int>(state.candidate_ids.size()), accepted, rejected,
                           static_cast<int>(state.round.seeds.size()));
}

Round Workbench::Snapshot(const RoundState &state) const {
  Round r = state.round;
  r.stats = StatsOf(state);
  return r;
}

Round Workbench::StartRound(const std::vector<SeedPattern> &seeds, double threshold) {
  if (seeds.empty()) throw ValidationError("a round needs at least one seed");
  if (!(threshold >= 0)) throw ValidationError("threshold must be a non-negative number");
  if (!resources_.sentences || !resources_.net || !resources_.lexicon) {
    throw ValidationError("workbench has no corpus, net or lexicon loaded");
  }
  std::vector<PatternRow> rows;
  for (const SeedPattern &seed : seeds) {
    PatternTable t = AcquireCorpus(seed, *resources_.sentences, *resources_.net,
                                   *resources_.lexicon, threshold);
    for (const PatternRow &row : t.rows()) rows.push_back(row);
  }
  PatternTable merged = MergeRows(std::move(rows));

  std::unique_lock lock(mu_);
  RoundState state;
  state.round.id = rounds_.empty() ? 1 : rounds_.rbegin()->first + 1;
  state.round.seeds = seeds;
  state.round.threshold = threshold;
  state.round.created_at = clock_();
  json record = {{"type", "round"},
                 {"id", state.round.id},
                 {"seeds", json::array()},
                 {"threshold", threshold},
                 {"created_at", state.round.created_at},
                 {"candidates", json::array()}};
  for (const SeedPattern &s : seeds) record["seeds"].push_back(s.ToString());
  for (const PatternRow &row : merged.rows()) {
    if (candidates_.count(row.Id())) continue;
    record["candidates"].push_back(RowToJson(row));
  }
  std::string line = record.dump();
  Append(proposals_path(), line);
  ApplyRoundRecord(line);
  return Snapshot(rounds_.at(state.round.id));
}

std::vector<Round> Workbench::Rounds() const {
  std::shared_lock lock(mu_);
  std::vector<Round> out;
  for (const auto &[id, state] : rounds_) out.push_back(Snapshot(state));
  return out;
}

Round Workbench::GetRound(int id) const {
  std::shared_lock lock(mu_);
  auto it = rounds_.find(id);
  if (it == rounds_.end()) throw NotFoundError("unknown round " + std::to_string(id));
  return Snapshot(it->second);
}

std::vector<Candidate> Workbench::Candidates(std::optional<RowStatus> status,
                                             std::optional<int> round) const {
  std::shared_lock lock(mu_);
  if (round && !rounds_.count(*round)) {
    throw NotFoundError("unknown round " + std::to_string(*round));
  }
  std::vector<Candidate> out;
  for (const auto &[id, c] : candidates_) {
    if (status && c.row.status != *status) continue;
    if (round && c.round != *round) continue;
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate &a, const Candidate &b) { return RowLess(a.row, b.row); });
  return out;
}

Candidate Workbench::GetCandidate(const std::string &id) const {
  std::shared_lock lock(mu_);
  auto it = candidates_.find(id);
  if (it == candidates_.end()) throw NotFoundError("unknown candidate " + id);
  return it->second;
}

Candidate Workbench::RecordDecision(const std::string &candidate_id, Verdict verdict,
                                    const std::string &annotator) {
  std::unique_lock lock(mu_);
  auto it = candidates_.find(candidate_id);
  if (it == candidates_.end()) throw NotFoundError("unknown candidate " + candidate_id);
  if (rounds_.at(it->second.round).round.closed) {
    throw ConflictError("round " + std::to_string(it->second.round) + " is closed");
  }
  RowStatus target = verdict == Verdict::kAccept ? RowStatus::kAccepted : RowStatus::kRejected;
  if (it->second.row.status == target) return it->second;
  json record = {{"type", "decision"},
                 {"candidate_id", candidate_id},
                 {"verdict", VerdictName(verdict)},
                 {"annotator", annotator},
                 {"at", clock_()}};
  std::string line = record.dump();
  Append(decisions_path(), line);
  ApplyDecisionRecord(line);
  return it->second;
}

std::vector<Snippet> Workbench::Concordance(const std::string &candidate_id, int k) const {
  if (k < 0) throw ValidationError("k must be non-negative");
  Candidate c = GetCandidate(candidate_id);
  std::vector<Snippet> out;
  for (const Provenance &p : c.row.provenance) {
    if (static_cast<int>(out.size()) >= k) break;
    const Sentence *sentence = nullptr;
    if (resources_.sentences) {
      for (const Sentence &s : *resources_.sentences) {
        if (s.doc_id == p.doc_id && s.index == p.sentence) {
          sentence = &s;
          break;
        }
      }
    }
    if (!sentence) throw NotFoundError("sentence " + p.doc_id + "#" + std::to_string(p.sentence) + " not loaded");
    Snippet snip;
    snip.doc_id = p.doc_id;
    snip.sentence = p.sentence;
    snip.head = p.head;
    snip.expansion = p.expansion;
    for (size_t i = 0; i < sentence->tokens.size(); ++i) {
      const Token &t = sentence->tokens[i];
      bool marked = static_cast<int>(i) == p.head || static_cast<int>(i) == p.expansion;
      std::string space = i == 0 ? "" : t.space_before;
      snip.tokens.push_back({t.raw, space, marked});
      snip.text += space + t.raw;
      snip.marked += space + (marked ? "[" + t.raw + "]" : t.raw);
    }
    out.push_back(std::move(snip));
  }
  return out;
}

Promotion Workbench::PromoteAccepted(int round_id) {
  std::unique_lock lock(mu_);
  auto it = rounds_.find(round_id);
  if (it == rounds_.end()) throw NotFoundError("unknown round " + std::to_string(round_id));
  std::vector<PatternRow> rows;
  for (const std::string &id : it->second.candidate_ids) {
    const PatternRow &row = candidates_.at(id).row;
    if (row.status == RowStatus::kAccepted) rows.push_back(row);
  }
  if (rows.empty()) {
    throw ValidationError("round " + std::to_string(round_id) + " has no accepted rows");
  }
  std::sort(rows.begin(), rows.end(), RowLess);
  Promotion promo;
  for (PatternRow &row : rows) {
    promo.seeds.push_back({row.elt1, row.elt2, row.etq, row.objet});
    promo.table.mutable_rows().push_back(std::move(row));
  }
  if (!it->second.round.closed) {
    json record = {{"type", "close"}, {"round", round_id}, {"at", clock_()}};
    std::string line = record.dump();
    Append(decisions_path(), line);
    ApplyDecisionRecord(line);
  }
  return promo;
}

PatternTable Workbench::AcceptedTable() const {
  std::vector<Candidate> accepted = Candidates(RowStatus::kAccepted);
  PatternTable table;
  for (Candidate &c : accepted) table.mutable_rows().push_back(std::move(c.row));
  return table;
}

}  // namespace parafact
