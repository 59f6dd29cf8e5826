// canon.hpp
//
// Exact canonical forms for two-cell partitions under the group generated by
// coordinate permutations and the cell swap: the canonical form is the
// lexicographically smallest membership string over the whole group orbit.
// The permutation search branches over one representative per coordinate
// block (same-block coordinates are interchangeable by an automorphism) and
// prunes on prefix comparisons; the result is independent of the pruning.

#pragma once

#include <string>
#include <vector>

#include "jeqp/partition.hpp"

namespace jeqp {

struct CanonicalForm {
  std::string membership;   // minimal string over the group action
  std::vector<int> perm;    // perm[i] = 0-based image of 0-based coordinate i
  bool swapped = false;     // certificate: apply perm then swap reproduces it
};

// Exact minimization. Throws std::invalid_argument when n exceeds n_guard
// (no silent heuristic answer). threads > 1 parallelizes over the top-level
// branch choices with a deterministic merge.
CanonicalForm canonical_form(const TwoPartition& p, int n_guard = 14,
                             int threads = 1);

// Same (n,w) required. Fast invariant rejection (cell sizes, quotient matrix
// up to swap, block-size multiset) before full canonicalization.
bool equivalent(const TwoPartition& p, const TwoPartition& q,
                int n_guard = 14);

// new_membership[rank(perm(S))] = old[rank(S)], then optional cell swap.
TwoPartition apply_permutation(const TwoPartition& p,
                               const std::vector<int>& perm, bool swap_cells);

// One-line cycle notation over 1-based coordinates, "id" for the identity.
std::string perm_cycles_one_based(const std::vector<int>& perm);

}  // namespace jeqp
