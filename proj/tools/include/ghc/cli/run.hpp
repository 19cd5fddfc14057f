#pragma once

#include <string>

#include <json.hpp>

namespace ghc::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInputError = 2, kUnsupported = 3 };

struct Response {
  int exit_code = kOk;
  Json body;        ///< result document, or {"error": {...}} on failure
  std::string diagnostic;
};

/// Runs one {"command": ..., "parameters": {...}} request.
Response run(const Json &request);

/// Parses `text` as a request first; malformed JSON yields exit code 2.
Response run_text(const std::string &text);

/// Rank cap for root-system construction: GHC_MAX_RANK if set, else 8.
int max_rank_from_env();

/// Canonical serialization used for every emitted document.
std::string render(const Json &doc);

} // namespace ghc::cli
