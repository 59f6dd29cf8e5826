#include <doctest.h>

#include "jeqp/constructions.hpp"
#include "jeqp/partition.hpp"
#include "oracles.hpp"

using namespace jeqp;

namespace {

std::array<std::int64_t, 4> as_array(const QuotientMatrix& m) {
  return {m.a, m.b, m.c, m.d};
}

}  // namespace

TEST_CASE("verify_equitable on known partitions") {
  const EquitableResult c2 = verify_equitable(construction2(4));
  REQUIRE(c2.equitable);
  CHECK(c2.matrix == QuotientMatrix{8, 8, 6, 10});

  const TwoPartition coord = coordinate_partition({6, 3}, 1);
  const EquitableResult ce = verify_equitable(coord);
  REQUIRE(ce.equitable);
  CHECK(ce.matrix == QuotientMatrix{6, 3, 3, 6});

  // independent quadratic oracle agrees
  const oracle::VertexTable t(6, 3);
  const auto naive = oracle::naive_equitable(t, coord.cell);
  REQUIRE(naive.has_value());
  CHECK(*naive == as_array(ce.matrix));
}

TEST_CASE("one moved vertex breaks regularity with a deterministic witness") {
  TwoPartition p = construction2(4);
  REQUIRE(p.cell[0] == 1);  // {1,2,3,4} has x1+x2 = 2
  p.cell[0] = 2;
  const EquitableResult eq = verify_equitable(p);
  REQUIRE_FALSE(eq.equitable);
  // Scanning ranks: 0 seeds the C2 reference (8,8), 1 seeds C1 at (7,9),
  // rank 2 agrees, and rank 3 = {1,3,4,5} in C2 carries (11,5).
  CHECK(eq.witness == 3);
  const auto naive = oracle::naive_equitable(oracle::VertexTable(8, 4), p.cell);
  CHECK_FALSE(naive.has_value());
}

TEST_CASE("quotient_eigenvalues") {
  CHECK(quotient_eigenvalues({8, 8, 6, 10}) == std::pair{std::int64_t{16},
                                                         std::int64_t{2}});
  CHECK(quotient_eigenvalues({6, 3, 3, 6}) == std::pair{std::int64_t{9},
                                                        std::int64_t{3}});
  CHECK(quotient_eigenvalues({0, 9, 1, 8}) == std::pair{std::int64_t{9},
                                                        std::int64_t{-1}});
}

TEST_CASE("admissible matrix family") {
  const MatrixFamily fam = admissible_matrices({8, 4});
  REQUIRE(fam.size() == 7);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    CHECK(fam[i].b == static_cast<std::int64_t>(7 + i));
    CHECK(fam[i].a + fam[i].b == 16);
    CHECK(fam[i].c + fam[i].d == 16);
    CHECK(fam[i].b >= fam[i].c);
    CHECK(fam[i].c >= 1);
    CHECK(fam[i].a >= 0);
    CHECK(fam[i].d >= 0);
    CHECK(quotient_eigenvalues(fam[i]) ==
          std::pair{std::int64_t{16}, std::int64_t{2}});
  }
  CHECK(std::count(fam.begin(), fam.end(), QuotientMatrix{8, 8, 6, 10}) == 1);
  CHECK(std::count(fam.begin(), fam.end(), QuotientMatrix{6, 10, 4, 12}) == 1);

  const MatrixFamily f63 = admissible_matrices({6, 3});
  REQUIRE(f63.size() == 5);
  CHECK(f63.front().b == 5);
  CHECK(f63.back().b == 9);

  CHECK_THROWS_AS(admissible_matrices({7, 4}), std::invalid_argument);
  CHECK_THROWS_AS(admissible_matrices({4, 1}), std::invalid_argument);
}

TEST_CASE("antipodal closure") {
  CHECK(antipodal_closed(construction2(3)).closed);
  CHECK(antipodal_closed(construction4(3)).closed);

  const AntipodalResult coord = antipodal_closed(coordinate_partition({6, 3}, 1));
  CHECK_FALSE(coord.closed);
  CHECK(coord.witness == 0);  // complement flips x1 for every vertex

  CHECK_THROWS_AS(antipodal_closed(coordinate_partition({7, 3}, 1)),
                  std::invalid_argument);
}

TEST_CASE("cross-edge double counting for accepted partitions") {
  for (const TwoPartition& p :
       {construction1(3), construction2(4), construction4(3),
        coordinate_partition({7, 3}, 2)}) {
    const EquitableResult eq = verify_equitable(p);
    REQUIRE(eq.equitable);
    const auto [n1, n2] = cell_sizes(p);
    CHECK(static_cast<std::int64_t>(n1) * eq.matrix.b ==
          static_cast<std::int64_t>(n2) * eq.matrix.c);
  }
}

TEST_CASE("membership strings and validation") {
  const TwoPartition p = construction4(3);
  const std::string s = membership_string(p);
  CHECK(partition_from_membership(p.params, s) == p);
  CHECK_THROWS_AS(partition_from_membership({6, 3}, "123"),
                  std::invalid_argument);
  CHECK_THROWS_AS(partition_from_membership({6, 3}, std::string(20, '1')),
                  std::invalid_argument);
  TwoPartition bad = p;
  bad.cell[0] = 3;
  CHECK_THROWS_AS(verify_equitable(bad), std::invalid_argument);
}
