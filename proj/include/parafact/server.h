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

#ifndef PARAFACT_SERVER_H_
#define PARAFACT_SERVER_H_

#include <string>
#include <utility>

#include <json.hpp>

#include "parafact/workbench.h"

namespace httplib {
class Server;
}

namespace parafact {

nlohmann::json RoundToJson(const Round &round);
nlohmann::json CandidateToJson(const Candidate &candidate);
nlohmann::json SnippetToJson(const Snippet &snippet);

// Installs the /api/v1 routes. The workbench must outlive the server.
void RegisterRoutes(httplib::Server &server, Workbench &workbench);

// "host:port"; throws ValidationError.
std::pair<std::string, int> ParseListen(const std::string &listen);

struct ServeConfig {
  std::string data_dir = "./data";
  std::string listen = "127.0.0.1:8737";
};

// Defaults overridden by PARAFACT_DATA_DIR and PARAFACT_LISTEN.
ServeConfig ServeConfigFromEnv();

}  // namespace parafact

#endif  // PARAFACT_SERVER_H_
