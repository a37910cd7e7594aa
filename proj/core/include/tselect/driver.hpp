#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tselect/solver.hpp"

namespace tselect {

// Everything the generator run needs, resolved from the command line (or
// built directly by tests).
struct RunConfig {
  std::string input_path;
  std::optional<std::string> output_path;  // absent: points go to stdout
  OrderPolicy order = OrderPolicy::Input;
  std::uint64_t budget = 1000000;      // normalization term budget
  std::uint64_t enum_cap = 1000000;    // enumeration guard for oracles/checks
  bool decompose = true;               // try independent-component splitting
  bool bound_only = false;
  int verbosity = 0;                   // >=1: phase timings on `progress`
};

// Exit codes shared by the driver and the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;       // parse or validation error
inline constexpr int kExitBudget = 2;      // term budget or cap exceeded
inline constexpr int kExitEmptyDomain = 3; // empty component domain

// Runs the full pipeline on one document: parse, sugar elimination, bound
// report, criterion and constraint normal forms, solve, print. The upper
// bound is written to `progress` as "# bound: <b>" before any expansion
// starts; with bound_only set, the run stops there. Results go to the
// output path (written atomically via a temporary file) or to `progress`.
// The result file starts with the summary line
//   # points: <n>  bound: <b>  terms: <r>
// followed by one point per line. Errors are reported on `diag` prefixed
// with the phase that failed, and the matching exit code is returned.
//
// Compose documents are solved through their explicit composition tree.
// For monolithic instances with decompose enabled, the driver splits off
// independent components when possible and falls back to the direct solve
// when a discovered component has an empty domain (the full domain is then
// empty too, so the empty set is the answer, not an error).
int run(const RunConfig& config, std::ostream& progress, std::ostream& diag);

// Prints "# bound: <b>" for the document without expanding anything.
int report_bound(const RunConfig& config, std::ostream& out, std::ostream& diag);

// Oracle subcommands. Each parses `instance_path` and reports on `out`;
// errors go to `diag` with the usual exit codes.
int oracle_minimum(const std::string& instance_path, std::ostream& out,
                   std::ostream& diag);
int oracle_empty_adequate(const std::string& instance_path, std::ostream& out,
                          std::ostream& diag);
// Verifies a point file against an instance: prints "adequate: yes|no" and
// "minimal: yes|no|n/a" (n/a when not adequate).
int oracle_check(const std::string& instance_path, const std::string& points_path,
                 std::ostream& out, std::ostream& diag);
// Emits the instance encoding a graph edge list / a 3-CNF in simplified
// DIMACS, for feeding the other subcommands.
int oracle_from_graph(const std::string& graph_path, std::ostream& out,
                      std::ostream& diag);
int oracle_from_cnf(const std::string& cnf_path, bool constraint_side,
                    std::ostream& out, std::ostream& diag);

}  // namespace tselect
