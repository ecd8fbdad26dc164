#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypersquare::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes: 0 success or definitive answer, 1 usage or input error,
/// 2 failure or timeout outcome.
enum ExitCode { kOk = 0, kUsage = 1, kOutcome = 2 };

/// Runs one command line (without the program name). Hypergraphs are read
/// from --input or `in`; results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hypersquare::cli
