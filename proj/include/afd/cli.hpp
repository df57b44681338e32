#pragma once

// Batch front end: parses a JSON run configuration, dispatches to the
// library, and streams one JSON record per line. Bodies are deterministic
// byte for byte for identical configurations; wall time appears only in the
// trailing summary line.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace afd::cli {

struct RunResult {
  std::vector<std::string> lines;  // the report body, one JSON record each
  bool invariants_ok = true;
};

// Dispatches config["command"]; throws std::invalid_argument (or json
// exceptions) on malformed configurations.
RunResult run(const nlohmann::json& config);

// Body lines, then a {"summary": ...} line carrying wall time. Returns 0 on
// success, 1 when an asserted invariant failed, 2 on configuration errors.
int run_to_stream(const nlohmann::json& config, std::ostream& out);

}  // namespace afd::cli
