#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tfg/json_io.hpp"

namespace tfg::cli {

/// Exit codes: 0 success, 1 I/O, parse or usage failure, 2 mathematical
/// validation failure (the output is then {"error": code, "detail": ...}).
enum ExitCode { Success = 0, IoFailure = 1, ValidationFailure = 2 };

/// Runs one command. `args` excludes the program name. JSON results (or DOT
/// text) go to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out);

/// Runs every request of {"requests":[{"argv":[...]}, ...]} and returns
/// {"results":[...]} in manifest order. Items run concurrently unless
/// `serial`; the report is identical either way.
io::Json run_batch(const io::Json& manifest, bool serial);

}  // namespace tfg::cli
