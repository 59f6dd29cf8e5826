#include "jeqp/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace jeqp {

namespace {

// Relabel cells so the verified quotient matrix has b >= c.
TwoPartition normalize_labels(TwoPartition p) {
  const EquitableResult eq = verify_equitable(p);
  if (eq.equitable && eq.matrix.b < eq.matrix.c) return with_cells_swapped(p);
  return p;
}

TwoPartition prefix_construction(int w, int min_w,
                                 const std::vector<std::string>& tuples,
                                 const char* name) {
  if (w < min_w)
    throw std::invalid_argument(std::string(name) + ": requires w >= " +
                                std::to_string(min_w));
  const GraphParams p{2 * w, w};
  return normalize_labels(pattern_partition(p, pattern_from_strings(tuples)));
}

}  // namespace

PrefixPattern pattern_from_strings(const std::vector<std::string>& tuples) {
  if (tuples.empty())
    throw std::invalid_argument("pattern: empty tuple set");
  PrefixPattern pat;
  pat.k = static_cast<int>(tuples.front().size());
  for (const auto& t : tuples) {
    if (static_cast<int>(t.size()) != pat.k)
      throw std::invalid_argument("pattern: tuples of unequal length");
    pat.tuples.push_back(parse_vertex_bits(t).bits);
  }
  std::sort(pat.tuples.begin(), pat.tuples.end());
  pat.tuples.erase(std::unique(pat.tuples.begin(), pat.tuples.end()),
                   pat.tuples.end());
  return pat;
}

TwoPartition pattern_partition(const GraphParams& p,
                               const PrefixPattern& pattern) {
  validate_params(p);
  if (pattern.k < 1 || pattern.k > p.n)
    throw std::invalid_argument("pattern_partition: need 1 <= k <= n");
  for (std::uint64_t t : pattern.tuples)
    if (t >> pattern.k)
      throw std::invalid_argument("pattern_partition: tuple wider than k");

  const JohnsonGraph g(p);
  const std::uint64_t prefix_mask = (std::uint64_t{1} << pattern.k) - 1;
  TwoPartition out{p, std::vector<std::uint8_t>(
                          static_cast<std::size_t>(g.num_vertices()))};
  std::uint64_t n1 = 0;
  Vertex v = g.first();
  std::uint64_t r = 0;
  do {
    const std::uint64_t prefix = v.bits & prefix_mask;
    const bool in_c1 = std::binary_search(pattern.tuples.begin(),
                                          pattern.tuples.end(), prefix);
    out.cell[r++] = in_c1 ? 1 : 2;
    if (in_c1) ++n1;
  } while (g.next(v));
  if (n1 == 0 || n1 == g.num_vertices())
    throw std::invalid_argument("pattern_partition: a cell is empty");
  return out;
}

TwoPartition construction1(int w) {
  return prefix_construction(w, 3,
                             {"10000", "11000", "10100", "00011", "01111",
                              "00111", "01011", "11100"},
                             "construction1");
}

TwoPartition construction2(int w) {
  return prefix_construction(w, 3, {"00", "11"}, "construction2");
}

TwoPartition construction3(int w) {
  return prefix_construction(
      w, 5,
      {"00000", "00100", "00010", "00001", "10100", "01010", "00101", "00011",
       "11111", "11011", "11101", "11110", "01011", "10101", "11010", "11100"},
      "construction3");
}

TwoPartition construction4(int w) {
  return prefix_construction(w, 3, {"000", "111"}, "construction4");
}

TwoPartition coordinate_partition(const GraphParams& p, int i) {
  validate_params(p);
  if (i < 1 || i > p.n)
    throw std::invalid_argument("coordinate_partition: coordinate out of range");
  const JohnsonGraph g(p);
  const std::uint64_t bit = std::uint64_t{1} << (i - 1);
  TwoPartition out{p, std::vector<std::uint8_t>(
                          static_cast<std::size_t>(g.num_vertices()))};
  Vertex v = g.first();
  std::uint64_t r = 0;
  do {
    out.cell[r++] = (v.bits & bit) ? 2 : 1;
  } while (g.next(v));
  return out;
}

}  // namespace jeqp
