// search.hpp
//
// Exhaustive backtracking enumeration of equitable 2-partitions with a
// prescribed quotient matrix. Cell labels are assigned to vertices in colex
// rank order with constraint propagation on per-vertex neighbor budgets and
// global cell sizes; antipodal forcing (n = 2w) and a vertex-0 symmetry fix
// are optional reductions that preserve the set of equivalence classes.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jeqp/partition.hpp"

namespace jeqp {

struct SearchSpec {
  GraphParams params;
  QuotientMatrix matrix;
  std::uint64_t node_budget = 1'000'000'000;  // decision nodes
  double time_budget_secs = 3600.0;
  bool symmetry = true;             // pin vertex 0 to C1 (class-complete;
                                    // raw solution counts then cover only
                                    // the restricted tree)
  std::optional<bool> antipodal;    // default: on iff n = 2w and the matrix
                                    // has second eigenvalue lambda_2(n,w)
  int threads = 1;
  int split_depth = 0;              // 0 = auto (threads > 1 only)
  bool collect_raw = false;
};

enum class SearchStatus { Complete, BudgetExhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::Complete;
  std::vector<TwoPartition> classes;      // one per equivalence class, sorted
  std::vector<std::string> class_canon;   // canonical strings, aligned
  std::uint64_t raw_solutions = 0;        // solutions in the explored tree
  std::vector<TwoPartition> raw;          // filled when collect_raw
  std::uint64_t nodes = 0;
  double wall_secs = 0.0;
};

// Complete status is reported only when the full (possibly symmetry-reduced)
// tree was exhausted. A matrix whose implied cell size c*C(n,w)/(b+c) is not
// an integer yields an immediate empty Complete outcome.
SearchOutcome enumerate_partitions(const SearchSpec& spec);

// Per-matrix classification of J(2w,w).
struct MatrixClassification {
  QuotientMatrix matrix;
  bool searched = false;                 // false in constructions-only audit
  SearchStatus status = SearchStatus::Complete;
  std::vector<TwoPartition> classes;
  std::vector<std::string> labels;       // construction1..4 or "new"
  std::uint64_t nodes = 0;
  double wall_secs = 0.0;
};

struct ClassifyReport {
  int w = 0;
  bool exhaustive = false;
  std::vector<MatrixClassification> rows;
  bool complete() const;  // every searched row finished
};

// exhaustive = run enumerate_partitions per admissible matrix and match the
// classes against the constructions; otherwise audit the constructions only
// (verify matrix + membership in the admissible family). Requires w >= 4.
ClassifyReport classify_n_eq_2w(int w, bool exhaustive,
                                std::uint64_t node_budget = 1'000'000'000,
                                double time_budget_secs = 3600.0,
                                int threads = 1);

// F3-type partial differences pin the partition down completely: if any
// partial difference of b*chi_{C1}-c*chi_{C2} classifies as F3, asserts that
// the partition is equivalent to construction 1, construction 2, or the
// case-2 pattern (construction 3's class, which is already equitable at
// w = 4). Vacuously true when no F3-type difference exists. Requires an
// equitable lambda_2 partition of J(2w,w) with w >= 4.
//
// (The two mid-planes of the difference pair are pinned by the special
// coordinate; the top plane either meets both cells - then its restriction
// is a lambda_1 partition with a single special coordinate, giving the
// construction-2 and construction-3 cases - or lies inside one cell, giving
// construction 1.)
bool f3_class_check(const TwoPartition& p);

// If the block decomposition has a block of size >= 2w-5, asserts equivalence
// to one of the four constructions. Vacuously true otherwise. Requires w >= 5.
bool large_block_check(const TwoPartition& p);

}  // namespace jeqp
