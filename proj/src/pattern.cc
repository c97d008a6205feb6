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

#include "parafact/pattern.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "parafact/error.h"
#include "parafact/text.h"

namespace parafact {

namespace {
constexpr std::string_view kHeader = "SCHEMA\tELT1\tCAT1\tELT2\tCAT2\tSCORE\tETQ\tOBJET\tSTATUS";
}

SeedPattern SeedPattern::Parse(std::string_view text) {
  auto parts = Split(text, '/');
  if (parts.size() != 4) {
    throw ValidationError("seed must be head/exp/etq/objet: " + std::string(text));
  }
  SeedPattern seed{std::string(Trim(parts[0])), std::string(Trim(parts[1])),
                   std::string(Trim(parts[2])), std::string(Trim(parts[3]))};
  if (seed.head.empty() || seed.expansion.empty()) {
    throw ValidationError("seed head and expansion must be non-empty");
  }
  return seed;
}

std::string SeedPattern::ToString() const {
  return head + "/" + expansion + "/" + etq + "/" + objet;
}

std::string_view SchemaSign(Schema schema) {
  return schema == Schema::kPlus ? "+" : "-";
}

std::string_view RowStatusName(RowStatus status) {
  switch (status) {
    case RowStatus::kProposed: return "proposed";
    case RowStatus::kAccepted: return "accepted";
    case RowStatus::kRejected: return "rejected";
  }
  return "?";
}

RowStatus ParseRowStatus(std::string_view text) {
  if (text == "proposed") return RowStatus::kProposed;
  if (text == "accepted") return RowStatus::kAccepted;
  if (text == "rejected") return RowStatus::kRejected;
  throw ValidationError("unknown status " + std::string(text));
}

Schema DefaultSchema(Pos cat1) {
  return cat1 == Pos::kV ? Schema::kMinus : Schema::kPlus;
}

std::string PatternRow::Key() const {
  std::string key = elt1;
  key += '\t';
  key += PosLetter(cat1);
  key += '\t';
  key += elt2;
  key += '\t';
  key += PosLetter(cat2);
  key += '\t';
  key += etq;
  return key;
}

std::string PatternRow::Id() const { return Hex64(Fingerprint(Key())); }

void PatternTable::Add(PatternRow row) {
  std::string key = row.Key();
  for (const PatternRow &r : rows_) {
    if (r.Key() == key) throw ValidationError("duplicate pattern row " + row.elt1 + "/" + row.elt2);
  }
  rows_.push_back(std::move(row));
}

const PatternRow *PatternTable::Find(std::string_view id) const {
  for (const PatternRow &r : rows_) {
    if (r.Id() == id) return &r;
  }
  return nullptr;
}

PatternRow *PatternTable::FindMutable(std::string_view id) {
  for (PatternRow &r : rows_) {
    if (r.Id() == id) return &r;
  }
  return nullptr;
}

PatternTable PatternTable::Accepted() const {
  PatternTable out;
  for (const PatternRow &r : rows_) {
    if (r.status == RowStatus::kAccepted) out.rows_.push_back(r);
  }
  return out;
}

void PatternTable::WriteTsv(std::ostream &out) const {
  out << kHeader << '\n';
  for (const PatternRow &r : rows_) {
    out << SchemaSign(r.schema) << '\t' << r.elt1 << '\t' << PosLetter(r.cat1) << '\t'
        << r.elt2 << '\t' << PosLetter(r.cat2) << '\t' << FormatFixed(r.score, 6) << '\t'
        << r.etq << '\t' << r.objet << '\t' << RowStatusName(r.status) << '\n';
  }
}

std::string PatternTable::ToTsv() const {
  std::ostringstream out;
  WriteTsv(out);
  return out.str();
}

PatternTable PatternTable::ReadTsv(std::istream &in, const std::string &source) {
  PatternTable table;
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    if (!header) {
      if (line != kHeader) throw ParseError(source, lineno, "bad pattern table header");
      header = true;
      continue;
    }
    auto f = Split(line, '\t');
    if (f.size() != 9) throw ParseError(source, lineno, "expected 9 columns");
    PatternRow row;
    if (f[0] == "+") {
      row.schema = Schema::kPlus;
    } else if (f[0] == "-") {
      row.schema = Schema::kMinus;
    } else {
      throw ParseError(source, lineno, "SCHEMA must be + or -");
    }
    row.elt1 = std::string(f[1]);
    row.elt2 = std::string(f[3]);
    auto cat1 = ParsePos(f[2]);
    auto cat2 = ParsePos(f[4]);
    if (!cat1 || !cat2) throw ParseError(source, lineno, "bad category");
    row.cat1 = *cat1;
    row.cat2 = *cat2;
    try {
      size_t used = 0;
      row.score = std::stod(std::string(f[5]), &used);
      if (used != f[5].size() || row.score < 0) throw std::invalid_argument("score");
      row.status = ParseRowStatus(f[8]);
    } catch (const std::exception &e) {
      throw ParseError(source, lineno, std::string("bad field: ") + e.what());
    }
    row.etq = std::string(f[6]);
    row.objet = std::string(f[7]);
    try {
      table.Add(std::move(row));
    } catch (const ValidationError &e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  if (!header) throw ParseError(source, 0, "missing pattern table header");
  return table;
}

PatternTable PatternTable::ReadTsvFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return ReadTsv(in, path.string());
}

}  // namespace parafact
