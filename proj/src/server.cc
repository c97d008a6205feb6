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

#include "parafact/server.h"

#include <cstdlib>
#include <optional>

#include <httplib.h>

#include "parafact/error.h"

namespace parafact {

using json = nlohmann::json;

json RoundToJson(const Round &round) {
  json seeds = json::array();
  for (const SeedPattern &s : round.seeds) seeds.push_back(s.ToString());
  const RoundStats &st = round.stats;
  return {{"id", round.id},
          {"seeds", seeds},
          {"threshold", round.threshold},
          {"created_at", round.created_at},
          {"closed", round.closed},
          {"stats",
           {{"proposed", st.proposed},
            {"accepted", st.accepted},
            {"rejected", st.rejected},
            {"acceptance_rate", st.acceptance_rate},
            {"new_patterns_per_seed", st.new_patterns_per_seed},
            {"new_patterns_per_seed_text", st.new_patterns_per_seed_text}}}};
}

json CandidateToJson(const Candidate &c) {
  const PatternRow &row = c.row;
  json prov = json::array();
  for (const Provenance &p : row.provenance) {
    prov.push_back({{"doc", p.doc_id}, {"sentence", p.sentence}, {"head", p.head},
                    {"expansion", p.expansion}});
  }
  return {{"id", row.Id()},
          {"round", c.round},
          {"schema", SchemaSign(row.schema)},
          {"elt1", row.elt1},
          {"cat1", std::string(1, PosLetter(row.cat1))},
          {"elt2", row.elt2},
          {"cat2", std::string(1, PosLetter(row.cat2))},
          {"score", row.score},
          {"etq", row.etq},
          {"objet", row.objet},
          {"status", RowStatusName(row.status)},
          {"provenance", prov}};
}

json SnippetToJson(const Snippet &s) {
  json tokens = json::array();
  for (const SnippetToken &t : s.tokens) {
    tokens.push_back({{"text", t.text}, {"space_before", t.space_before}, {"marked", t.marked}});
  }
  return {{"doc", s.doc_id},     {"sentence", s.sentence}, {"head", s.head},
          {"expansion", s.expansion}, {"text", s.text}, {"marked", s.marked},
          {"tokens", tokens}};
}

namespace {

void SendJson(httplib::Response &res, const json &body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response &res, int status, const std::string &code,
               const std::string &message) {
  SendJson(res, {{"code", code}, {"message", message}}, status);
}

template <typename Fn>
httplib::Server::Handler Guard(Fn fn) {
  return [fn](const httplib::Request &req, httplib::Response &res) {
    try {
      fn(req, res);
    } catch (const NotFoundError &e) {
      SendError(res, 404, "not_found", e.what());
    } catch (const ConflictError &e) {
      SendError(res, 409, "conflict", e.what());
    } catch (const ValidationError &e) {
      SendError(res, 422, "validation", e.what());
    } catch (const json::exception &e) {
      SendError(res, 422, "validation", e.what());
    } catch (const std::exception &e) {
      SendError(res, 500, "internal", e.what());
    }
  };
}

int ParseInt(const std::string &text, const std::string &what) {
  try {
    size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception &) {
  }
  throw ValidationError(what + " must be an integer");
}

json ParseBody(const httplib::Request &req) {
  json body = json::parse(req.body, nullptr, false);
  if (body.is_discarded() || !body.is_object()) {
    throw ValidationError("request body must be a JSON object");
  }
  return body;
}

}  // namespace

void RegisterRoutes(httplib::Server &server, Workbench &wb) {
  server.Post("/api/v1/rounds", Guard([&wb](const httplib::Request &req, httplib::Response &res) {
    json body = ParseBody(req);
    if (!body.contains("seeds") || !body["seeds"].is_array()) {
      throw ValidationError("seeds must be an array");
    }
    std::vector<SeedPattern> seeds;
    for (const json &s : body["seeds"]) {
      if (s.is_string()) {
        seeds.push_back(SeedPattern::Parse(s.get<std::string>()));
      } else {
        seeds.push_back({s.at("head").get<std::string>(), s.at("expansion").get<std::string>(),
                         s.at("etq").get<std::string>(), s.at("objet").get<std::string>()});
      }
    }
    if (!body.contains("threshold") || !body["threshold"].is_number()) {
      throw ValidationError("threshold must be a number");
    }
    SendJson(res, RoundToJson(wb.StartRound(seeds, body["threshold"].get<double>())), 201);
  }));

  server.Get("/api/v1/rounds", Guard([&wb](const httplib::Request &, httplib::Response &res) {
    json out = json::array();
    for (const Round &r : wb.Rounds()) out.push_back(RoundToJson(r));
    SendJson(res, out);
  }));

  server.Get(R"(/api/v1/rounds/(-?\d+))",
             Guard([&wb](const httplib::Request &req, httplib::Response &res) {
               SendJson(res, RoundToJson(wb.GetRound(ParseInt(req.matches[1], "round id"))));
             }));

  server.Post(R"(/api/v1/rounds/(-?\d+)/promote)",
              Guard([&wb](const httplib::Request &req, httplib::Response &res) {
                Promotion p = wb.PromoteAccepted(ParseInt(req.matches[1], "round id"));
                json rows = json::array();
                for (const PatternRow &row : p.table.rows()) rows.push_back(CandidateToJson({0, row}));
                for (json &r : rows) r.erase("round");
                json seeds = json::array();
                for (const SeedPattern &s : p.seeds) seeds.push_back(s.ToString());
                SendJson(res, {{"table", p.table.ToTsv()}, {"rows", rows}, {"seeds", seeds}});
              }));

  server.Get("/api/v1/candidates",
             Guard([&wb](const httplib::Request &req, httplib::Response &res) {
               std::optional<RowStatus> status;
               std::optional<int> round;
               if (req.has_param("status")) status = ParseRowStatus(req.get_param_value("status"));
               if (req.has_param("round")) round = ParseInt(req.get_param_value("round"), "round");
               json out = json::array();
               for (const Candidate &c : wb.Candidates(status, round)) out.push_back(CandidateToJson(c));
               SendJson(res, out);
             }));

  server.Get(R"(/api/v1/candidates/([0-9a-f]+)/concordance)",
             Guard([&wb](const httplib::Request &req, httplib::Response &res) {
               int k = req.has_param("k") ? ParseInt(req.get_param_value("k"), "k") : 10;
               json out = json::array();
               for (const Snippet &s : wb.Concordance(req.matches[1], k)) out.push_back(SnippetToJson(s));
               SendJson(res, out);
             }));

  server.Post("/api/v1/decisions",
              Guard([&wb](const httplib::Request &req, httplib::Response &res) {
                json body = ParseBody(req);
                std::string id = body.at("candidate_id").get<std::string>();
                Verdict verdict = ParseVerdict(body.at("verdict").get<std::string>());
                std::string annotator = body.value("annotator", "");
                SendJson(res, CandidateToJson(wb.RecordDecision(id, verdict, annotator)));
              }));

  server.Get("/api/v1/tables/accepted",
             Guard([&wb](const httplib::Request &, httplib::Response &res) {
               res.set_content(wb.AcceptedTable().ToTsv(), "text/tab-separated-values");
             }));
}

std::pair<std::string, int> ParseListen(const std::string &listen) {
  size_t colon = listen.rfind(':');
  if (colon == std::string::npos || colon == 0) {
    throw ValidationError("listen address must be host:port, got '" + listen + "'");
  }
  std::string port = listen.substr(colon + 1);
  int p = 0;
  try {
    p = ParseInt(port, "port");
  } catch (const ValidationError &) {
    throw ValidationError("listen address must be host:port, got '" + listen + "'");
  }
  if (p < 0 || p > 65535) throw ValidationError("port out of range: " + port);
  return {listen.substr(0, colon), p};
}

ServeConfig ServeConfigFromEnv() {
  ServeConfig config;
  if (const char *dir = std::getenv("PARAFACT_DATA_DIR"); dir && *dir) config.data_dir = dir;
  if (const char *listen = std::getenv("PARAFACT_LISTEN"); listen && *listen) config.listen = listen;
  return config;
}

}  // namespace parafact
