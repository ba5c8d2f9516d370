#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "taylor/free_algebra.hpp"

namespace taylor::cli {

enum class Format { Text, Json, Dot };

enum ExitCode : int { kPass = 0, kCounterexample = 1, kUsage = 2, kCapExceeded = 3 };

struct RunConfig {
  std::string command;  // analyze, edges, verify, csp-solve, csp-minimize, catalog
  std::vector<std::string> inputs;
  std::vector<unsigned> arities;  // empty: least prime above |Sg(a,b)|
  std::size_t closure_cap = kDefaultClosureCap;
  std::size_t subset_cap = 6;
  std::size_t search_limit = 1000000;
  std::size_t catalog_cap = 8;
  unsigned k = 2;
  unsigned l = 3;
  bool all_solutions = false;
  Format format = Format::Text;
  std::uint64_t seed = 0;
  std::string out;  // empty: standard output
};

/// Runs one subcommand, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit code.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace taylor::cli
