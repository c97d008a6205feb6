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

#ifndef PARAFACT_WORKBENCH_H_
#define PARAFACT_WORKBENCH_H_

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "parafact/corpus.h"
#include "parafact/lexicon.h"
#include "parafact/pattern.h"
#include "parafact/semnet.h"

namespace parafact {

struct RoundStats {
  int proposed = 0;
  int accepted = 0;
  int rejected = 0;
  // accepted / proposed, 0 when nothing was proposed.
  double acceptance_rate = 0;
  // accepted / number of seeds.
  double new_patterns_per_seed = 0;
  // The same ratio truncated to two decimals ("4.16" for 25/6).
  std::string new_patterns_per_seed_text;
};

RoundStats ComputeRoundStats(int proposed, int accepted, int rejected, int seeds);

struct Round {
  int id = 0;
  std::vector<SeedPattern> seeds;
  double threshold = 0;
  std::string created_at;
  bool closed = false;
  RoundStats stats;
};

struct Candidate {
  int round = 0;
  PatternRow row;
};

enum class Verdict { kAccept, kReject };
Verdict ParseVerdict(std::string_view text);
std::string_view VerdictName(Verdict verdict);

struct SnippetToken {
  std::string text;
  std::string space_before;
  bool marked = false;
};

struct Snippet {
  std::string doc_id;
  int sentence = 0;
  int head = 0;
  int expansion = 0;
  std::string text;
  std::vector<SnippetToken> tokens;
  // Text with the head and expansion tokens wrapped in [ ].
  std::string marked;
};

struct Promotion {
  PatternTable table;
  std::vector<SeedPattern> seeds;
};

// Corpus and net a workbench runs acquisition against. Any member may be
// null, in which case starting a round fails.
struct WorkbenchResources {
  const std::vector<Sentence> *sentences = nullptr;
  const SemanticNet *net = nullptr;
  const Lexicon *lexicon = nullptr;
};

// Analyst validation loop backed by two append-only JSON-lines logs in a
// data directory:
//   proposals.jsonl  one record per round, carrying its candidates
//   decisions.jsonl  verdicts and round closures
// State is rebuilt by replaying both logs on open. A final line that is
// unterminated or unparsable is dropped and cut from the file.
class Workbench {
 public:
  using Clock = std::function<std::string()>;

  explicit Workbench(std::filesystem::path data_dir, WorkbenchResources resources = {},
                     Clock clock = {});

  Workbench(const Workbench &) = delete;
  Workbench &operator=(const Workbench &) = delete;

  // Throws ValidationError for empty seeds, a negative threshold or missing
  // resources.
  Round StartRound(const std::vector<SeedPattern> &seeds, double threshold);

  std::vector<Round> Rounds() const;
  Round GetRound(int id) const;  // NotFoundError

  // Sorted by score, then row key.
  std::vector<Candidate> Candidates(std::optional<RowStatus> status = {},
                                    std::optional<int> round = {}) const;
  Candidate GetCandidate(const std::string &id) const;  // NotFoundError

  // NotFoundError for unknown ids, ConflictError when the round is closed.
  // Repeating the current verdict is a no-op.
  Candidate RecordDecision(const std::string &candidate_id, Verdict verdict,
                           const std::string &annotator);

  std::vector<Snippet> Concordance(const std::string &candidate_id, int k) const;

  // Exports accepted rows and closes the round. ValidationError when none
  // were accepted.
  Promotion PromoteAccepted(int round_id);

  // Accepted rows of every round, in table order.
  PatternTable AcceptedTable() const;

  const std::filesystem::path &data_dir() const { return data_dir_; }
  std::filesystem::path proposals_path() const { return data_dir_ / "proposals.jsonl"; }
  std::filesystem::path decisions_path() const { return data_dir_ / "decisions.jsonl"; }

 private:
  struct RoundState {
    Round round;
    std::vector<std::string> candidate_ids;
  };

  void Replay();
  void ApplyRoundRecord(const std::string &line);
  void ApplyDecisionRecord(const std::string &line);
  RoundStats StatsOf(const RoundState &state) const;
  Round Snapshot(const RoundState &state) const;
  void Append(const std::filesystem::path &path, const std::string &line);

  std::filesystem::path data_dir_;
  WorkbenchResources resources_;
  Clock clock_;

  mutable std::shared_mutex mu_;
  std::map<int, RoundState> rounds_;
  std::map<std::string, Candidate> candidates_;
};

std::string UtcNow();

}  // namespace parafact

#endif  // PARAFACT_WORKBENCH_H_
