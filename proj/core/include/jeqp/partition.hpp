// partition.hpp
//
// Two-cell partitions of J(n,w): equitability verification, quotient
// matrices, the admissible lambda_2 matrix family, and antipodal closure
// for n = 2w.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jeqp/johnson.hpp"

namespace jeqp {

// cell[r] in {1,2} holds the cell label of the vertex of colex rank r.
struct TwoPartition {
  GraphParams params;
  std::vector<std::uint8_t> cell;

  friend bool operator==(const TwoPartition&, const TwoPartition&) = default;
};

// Throws std::invalid_argument unless the membership array has length C(n,w),
// labels are in {1,2} and both cells are nonempty.
void validate_partition(const TwoPartition& p);

// [[a,b],[c,d]]: a = within-C1 degree, b = C1->C2, c = C2->C1, d = within-C2.
struct QuotientMatrix {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) =
      default;
  QuotientMatrix swapped() const { return {d, c, b, a}; }
  std::string str() const;
};

using MatrixFamily = std::vector<QuotientMatrix>;

struct EquitableResult {
  bool equitable = false;
  QuotientMatrix matrix;       // valid when equitable
  std::uint64_t witness = 0;   // when not: first vertex (by rank) whose
                               // (own,other) counts deviate from the counts
                               // of the first-seen vertex of its cell
};

EquitableResult verify_equitable(const TwoPartition& p);

// (a+b, a-c): the row sum w(n-w) and the second quotient eigenvalue.
std::pair<std::int64_t, std::int64_t> quotient_eigenvalues(
    const QuotientMatrix& m);

// All matrices [[w(n-w)-b, b],[2n-2-b, w(n-w)-2n+2+b]] with
// b in {n-1,...,2n-3} (so b >= c >= 1) and all entries nonnegative.
// Every member has eigenvalue pair (w(n-w), lambda_2(n,w)).
// Requires w >= 2 and n >= 2w.
MatrixFamily admissible_matrices(const GraphParams& p);

struct AntipodalResult {
  bool closed = false;
  std::uint64_t witness = 0;  // first vertex whose antipode is in the other cell
};

// Requires n = 2w; true iff every vertex and its antipode share a cell.
AntipodalResult antipodal_closed(const TwoPartition& p);

std::pair<std::uint64_t, std::uint64_t> cell_sizes(const TwoPartition& p);

TwoPartition with_cells_swapped(const TwoPartition& p);

// One char per vertex in colex rank order, e.g. "12211...".
std::string membership_string(const TwoPartition& p);
TwoPartition partition_from_membership(const GraphParams& params,
                                       std::string_view membership);

}  // namespace jeqp
