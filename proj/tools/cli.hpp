#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conclab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInconclusive = 3;

/// Runs one command line (args excludes the program name). Results go to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conclab::cli
