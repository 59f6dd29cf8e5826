// report.hpp
//
// Composite audit of a partition file and the structured run report behind
// the command-line surface. A report renders both as text and as JSON; the
// two renderings always agree on pass/fail.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jeqp/partition.hpp"

namespace jeqp {

inline constexpr const char* kVersion = "0.1.0";

struct CheckRow {
  std::string name;
  bool applicable = true;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::string version = kVersion;
  std::string info;  // e.g. "not a lambda_2 partition"
  std::vector<CheckRow> checks;
  double wall_secs = 0.0;
  bool with_timing = true;

  bool all_pass() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Runs: equitability, antipodal closure, the difference eigenfunction
// property, the cross-edge/support identity, the difference census with its
// counting identity, and the F3/large-block structure checks. Checks whose
// preconditions do not hold for
// this partition are reported as not applicable; a partition whose second
// quotient eigenvalue is not lambda_2(n,w) gets an informational note and
// only the generic checks.
RunReport audit_partition(const TwoPartition& p, const std::string& command,
                          bool with_timing);

// (i, lambda_i) for i = 0..w.
std::vector<std::pair<int, std::int64_t>> spectrum_table(const GraphParams& p);

}  // namespace jeqp
