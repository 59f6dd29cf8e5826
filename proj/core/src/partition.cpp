#include "jeqp/partition.hpp"

#include <stdexcept>

namespace jeqp {

void validate_partition(const TwoPartition& p) {
  const JohnsonGraph g(p.params);
  if (p.cell.size() != g.num_vertices())
    throw std::invalid_argument("partition: membership length != C(n,w)");
  std::uint64_t n1 = 0, n2 = 0;
  for (std::uint8_t c : p.cell) {
    if (c == 1)
      ++n1;
    else if (c == 2)
      ++n2;
    else
      throw std::invalid_argument("partition: cell labels must be 1 or 2");
  }
  if (n1 == 0 || n2 == 0)
    throw std::invalid_argument("partition: a cell is empty");
}

std::string QuotientMatrix::str() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
         std::to_string(c) + "," + std::to_string(d) + "]]";
}

EquitableResult verify_equitable(const TwoPartition& p) {
  validate_partition(p);
  const JohnsonGraph g(p.params);

  // (own,other) counts of the first-seen vertex per cell act as reference.
  std::int64_t ref_own[3] = {-1, -1, -1};
  std::int64_t ref_other[3] = {-1, -1, -1};

  Vertex v = g.first();
  std::uint64_t r = 0;
  do {
    const int cell = p.cell[r];
    std::int64_t own = 0, other = 0;
    for (const Vertex& u : g.neighbors(v))
      (p.cell[g.rank(u)] == cell ? own : other)++;
    if (ref_own[cell] < 0) {
      ref_own[cell] = own;
      ref_other[cell] = other;
    } else if (own != ref_own[cell] || other != ref_other[cell]) {
      return {false, {}, r};
    }
    ++r;
  } while (g.next(v));

  const QuotientMatrix m{ref_own[1], ref_other[1], ref_other[2], ref_own[2]};
  return {true, m, 0};
}

std::pair<std::int64_t, std::int64_t> quotient_eigenvalues(
    const QuotientMatrix& m) {
  return {m.a + m.b, m.a - m.c};
}

MatrixFamily admissible_matrices(const GraphParams& p) {
  validate_params(p);
  if (p.w < 2 || p.n < 2 * p.w)
    throw std::invalid_argument("admissible_matrices: need w >= 2, n >= 2w");
  const std::int64_t deg = std::int64_t{p.w} * (p.n - p.w);
  MatrixFamily out;
  for (std::int64_t b = p.n - 1; b <= 2 * p.n - 3; ++b) {
    const std::int64_t c = 2 * p.n - 2 - b;
    const QuotientMatrix m{deg - b, b, c, deg - c};
    if (m.a < 0 || m.c < 1 || m.d < 0) continue;
    out.push_back(m);
  }
  return out;
}

AntipodalResult antipodal_closed(const TwoPartition& p) {
  validate_partition(p);
  if (p.params.n != 2 * p.params.w)
    throw std::invalid_argument("antipodal_closed: requires n = 2w");
  const JohnsonGraph g(p.params);
  Vertex v = g.first();
  std::uint64_t r = 0;
  do {
    const std::uint64_t rc = g.rank(antipode(v, p.params.n));
    if (p.cell[r] != p.cell[rc]) return {false, r};
    ++r;
  } while (g.next(v));
  return {true, 0};
}

std::pair<std::uint64_t, std::uint64_t> cell_sizes(const TwoPartition& p) {
  std::uint64_t n1 = 0, n2 = 0;
  for (std::uint8_t c : p.cell) (c == 1 ? n1 : n2)++;
  return {n1, n2};
}

TwoPartition with_cells_swapped(const TwoPartition& p) {
  TwoPartition q = p;
  for (auto& c : q.cell) c = static_cast<std::uint8_t>(3 - c);
  return q;
}

std::string membership_string(const TwoPartition& p) {
  std::string s(p.cell.size(), '0');
  for (std::size_t i = 0; i < p.cell.size(); ++i)
    s[i] = static_cast<char>('0' + p.cell[i]);
  return s;
}

TwoPartition partition_from_membership(const GraphParams& params,
                                       std::string_view membership) {
  TwoPartition p{params, {}};
  p.cell.reserve(membership.size());
  for (char ch : membership) {
    if (ch != '1' && ch != '2')
      throw std::invalid_argument("membership: characters must be 1 or 2");
    p.cell.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  validate_partition(p);
  return p;
}

}  // namespace jeqp
