// constructions.hpp
//
// Generators for the four J(2w,w) prefix-pattern partitions, the single
// special-coordinate partition, and generic prefix-pattern partitions whose
// membership depends only on the first k coordinates.

#pragma once

#include <cstdint>
#include <vector>

#include "jeqp/partition.hpp"

namespace jeqp {

// Membership rule on the first k coordinates: a vertex lands in C1 iff its
// restriction to coordinates 1..k is one of the tuples. Tuples use the same
// bit convention as Vertex (bit j-1 <=> coordinate j).
struct PrefixPattern {
  int k = 0;
  std::vector<std::uint64_t> tuples;
};

PrefixPattern pattern_from_strings(const std::vector<std::string>& tuples);

// C1 = vertices whose k-prefix lies in the pattern, C2 = the rest.
// No equitability is implied. Throws if a cell comes out empty.
TwoPartition pattern_partition(const GraphParams& p,
                               const PrefixPattern& pattern);

// The four partitions of J(2w,w) with second eigenvalue, cells labeled so
// that b >= c. Quotient matrices (established by verify_equitable, never
// assumed):
//   construction1: [[w^2-3w+2, 3w-2],[w,   w^2-w  ]]   w >= 3
//   construction2: [[w^2-2w,   2w  ],[2w-2,w^2-2w+2]]  w >= 3
//   construction3: [[w^2-2w,   2w  ],[2w-2,w^2-2w+2]]  w >= 5
//   construction4: [[w^2-3w,   3w  ],[w-2, w^2-w+2 ]]  w >= 3
TwoPartition construction1(int w);
TwoPartition construction2(int w);
TwoPartition construction3(int w);
TwoPartition construction4(int w);

// C1 = {x : x_i = 0}, C2 = {x : x_i = 1}. Equitable with second quotient
// eigenvalue lambda_1(n,w).
TwoPartition coordinate_partition(const GraphParams& p, int i);

}  // namespace jeqp
