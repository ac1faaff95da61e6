#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lucastk::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

/// Runs one command line (without the program name). Results go to `out`
/// (or the --out file), diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Recomputes every entry of <dir>/manifest.json and byte-compares it with
/// the stored file.
int verify_golden(const std::string& dir, std::ostream& out, std::ostream& err);

}  // namespace lucastk::cli
