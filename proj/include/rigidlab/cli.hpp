#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace rigidlab {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitLimit = 3 };

/// Runs one `rigidlab` invocation. `args` excludes the program name. The
/// report goes to `out` (or --output), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Flattened "path: value" rendering used by --format text.
std::string json_to_text(const nlohmann::json& j);

}  // namespace rigidlab
