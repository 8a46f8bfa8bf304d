#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "residue/modmath.hpp"

namespace residue::cli {

enum class Format { csv, json };

/// Parsed global and per-command settings.
struct RunConfig {
  std::string command;
  std::uint64_t limit = 0;
  std::size_t bins = 16;
  std::string output_path;  ///< empty: standard output
  /// Unset means the command's natural format: plain text for the scalar
  /// commands (solve, wilson, decompose p), CSV for tables, JSON for stats.
  std::optional<Format> format;
  std::uint64_t seed = kDefaultPrimalitySeed;
  unsigned workers = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace residue::cli
