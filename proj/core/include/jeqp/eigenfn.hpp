// eigenfn.hpp
//
// Integer-valued functions on the vertices of J(n,w): eigenfunction checks,
// partial differences, the three-valued lambda_1 form classifier, coordinate
// block decompositions, and the edge-count / pair-count identities that tie
// equitable partitions to their difference functions.
//
// All arithmetic is exact integer; scale factors are exact rationals.

#pragma once

#include <cstdint>
#include <vector>

#include "jeqp/johnson.hpp"
#include "jeqp/partition.hpp"
#include "jeqp/rational.hpp"

namespace jeqp {

struct VertexFunction {
  GraphParams params;
  std::vector<std::int64_t> values;  // indexed by colex rank

  friend bool operator==(const VertexFunction&, const VertexFunction&) =
      default;
};

// Throws unless values has length C(n,w).
void validate_function(const VertexFunction& f);

bool is_zero(const VertexFunction& f);
std::uint64_t support_size(const VertexFunction& f);

enum class EigenStatus { Eigenfunction, ZeroFunction, NotEigenfunction };

struct EigenCheck {
  EigenStatus status = EigenStatus::NotEigenfunction;
  std::uint64_t witness = 0;  // first vertex violating the eigen-equation
};

// Exact check of lambda*f(x) = sum of f over neighbors, at every vertex.
// The all-zero function reports ZeroFunction (not an eigenfunction).
EigenCheck is_eigenfunction(const VertexFunction& f, std::int64_t lambda);

// f_{j1,j2} on J(n-2,w-1): for y over coordinates {1..n}\{j1,j2} (order kept),
// value  f(y with 1 at j1, 0 at j2) - f(y with 0 at j1, 1 at j2).
// Requires j1 != j2 in [1,n], w >= 2 and n >= w+2.
VertexFunction partial_difference(const VertexFunction& f, int j1, int j2);

// b*chi_{C1} - c*chi_{C2} for an equitable partition with matrix m.
VertexFunction from_partition(const TwoPartition& p, const QuotientMatrix& m);

// The canonical three-valued lambda_1 forms.
//   F1 (j1,j2):  +1 on {x_j1=1, x_j2=0}, -1 on {x_j1=0, x_j2=1}, else 0.
//   F2 (j1,j2):  +1 on {x_j1=x_j2=1}, -1 on {x_j1=x_j2=0}, else 0.  n=2w.
//   F3 (j):      +1 on {x_j=1}, -1 on {x_j=0}.                      n=2w.
//   F4 (H):      +1 on supp(x) within H, -1 on supp(x) within the
//                complement of H, else 0.  w=2, n even, |H|=n/2.
enum class FormKind { Zero, F1, F2, F3, F4, Other };

const char* form_kind_name(FormKind k);

struct ClassifiedForm {
  FormKind kind = FormKind::Other;
  std::vector<int> witness;  // 1-based coordinates; empty for Zero/Other
  Rational scale{0, 1};      // nonzero alpha for F1..F4

  friend bool operator==(const ClassifiedForm&, const ClassifiedForm&) =
      default;
};

// Canonical form with scale 1 for the given witness. Validates the witness
// against the form's (n,w) constraints.
VertexFunction make_form(const GraphParams& p, FormKind kind,
                         const std::vector<int>& witness);

// scale * make_form(...); Zero reconstructs the zero function.
// The stored scale must be integral for an exact reconstruction.
VertexFunction reconstruct(const GraphParams& p, const ClassifiedForm& cf);

// Decides whether f is a nonzero rational multiple of some form composed
// with a coordinate permutation. Witnesses are the lexicographically
// smallest coordinate tuples realizing the form; F1 orders its pair so
// j1 < j2 (a sign flip moves into the scale), F3 keeps the +1 side at
// the witness coordinate, F4 is normalized to positive scale.
// On J(4,2) the F2 and F4 patterns coincide; precedence F1,F2,F3,F4 applies.
ClassifiedForm classify_form(const VertexFunction& f);

// true iff f_{i,j} is identically zero, i.e. f is invariant under the
// coordinate transposition (i j).
bool zero_pair(const VertexFunction& f, int i, int j);

// |S(f_{i,j})| without materializing the difference.
std::uint64_t pair_support_size(const VertexFunction& f, int i, int j);

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // sorted coords, blocks by min coord
  std::vector<int> sbd() const;          // sorted multiset of block sizes
};

// Equivalence classes of the zero-difference relation. The relation is
// transitive for every f (zero difference = transposition invariance);
// a violation would mean a bug and throws std::logic_error.
BlockDecomposition block_decomposition(const VertexFunction& f);

struct CrossEdgeAudit {
  Rational lhs;            // bc/(b+c) * C(n,w): the cross-cell edge count
  std::int64_t rhs = 0;    // sum over i<j of |S(f_{i,j})|
  bool equal = false;
};

// Requires an equitable partition; throws std::invalid_argument otherwise.
CrossEdgeAudit cross_edge_audit(const TwoPartition& p);

// (1/2) s floor(N/s) (2N - s - s floor(N/s)): lower bound for the sum of
// pairwise products of a composition of N into parts of size at most s.
// Requires 0 < s < N.
std::int64_t pairs_lower_bound(std::int64_t N, std::int64_t s);

enum class CensusStatus { Ok, F3Route };

struct DiffCensus {
  CensusStatus status = CensusStatus::Ok;
  std::uint64_t k0 = 0, k1 = 0, k2 = 0;  // zero / F1-type / F2-type counts
  bool counts_complete = false;           // k0+k1+k2 == C(n,2)
  bool counting_identity_holds = false;  // bc(2w-3) == k1 w(w-1) + k2 w(w-2)
};

// Classifies all C(2w,2) partial differences of b*chi_{C1} - c*chi_{C2}.
// Requires n = 2w and an equitable partition whose second quotient
// eigenvalue is lambda_2(n,w). An F3-type difference short-circuits with
// F3Route — such partitions are handled by the structural F3 analysis
// (f3_class_check) instead, and their censuses do not satisfy the two-support
// counting identity. An Other verdict throws.
DiffCensus difference_census(const TwoPartition& p);

}  // namespace jeqp
