#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace borwein::cli {

inline constexpr const char* kToolName = "borwein-lab";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kPass = 0, kViolation = 1, kUsage = 2 };

// Inclusive integer range parsed from "7" or "2..9".
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::vector<std::int64_t> values() const;
};

Range parse_range(const std::string& text);

// Runs the command line `args` (without the program name). Results go to
// `out` or the --out file; diagnostics and wall time go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace borwein::cli
