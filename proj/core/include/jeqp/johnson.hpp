// johnson.hpp
//
// Johnson graph J(n,w) fundamentals: vertices as weight-w bit masks over n
// coordinates, colexicographic ranking, adjacency, and the eigenvalue ladder
// lambda_i(n,w) = (w-i)(n-w-i) - i.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jeqp {

// Largest coordinate count the vertex machinery supports. Colex ranks of
// w-subsets stay below 2^63 for all n <= 62.
inline constexpr int kMaxCoords = 62;

struct GraphParams {
  int n = 0;  // coordinate count
  int w = 0;  // vertex weight
  friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

// Throws std::invalid_argument unless 1 <= w <= n-1.
void validate_params(const GraphParams& p);

// lambda_i(n,w) = (w-i)(n-w-i) - i. Requires 0 <= i <= w.
std::int64_t eigenvalue(const GraphParams& p, int i);

// C(n,k); 0 when k < 0 or k > n. Requires 0 <= n <= kMaxCoords.
std::uint64_t binomial(int n, int k);

// A vertex of J(n,w): bit j-1 set <=> coordinate j is in the support
// (coordinates are 1-based in all I/O, 0-based bits internally).
// Numeric order on the masks equals colexicographic order on supports.
struct Vertex {
  std::uint64_t bits = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

Vertex vertex_from_support(const std::vector<int>& support_1based);
std::vector<int> support_of(Vertex v, int n);

// Bitstring form, coordinate 1 leftmost: {1,2,4} in n=6 is "110100".
Vertex parse_vertex_bits(std::string_view s);
std::string format_vertex_bits(Vertex v, int n);

// All n coordinates flipped. For n = 2w this is the antipodal vertex;
// for other n the weight changes.
Vertex antipode(Vertex v, int n);

class JohnsonGraph {
 public:
  explicit JohnsonGraph(GraphParams p);
  JohnsonGraph(int n, int w) : JohnsonGraph(GraphParams{n, w}) {}

  int n() const { return params_.n; }
  int w() const { return params_.w; }
  const GraphParams& params() const { return params_; }

  std::uint64_t num_vertices() const { return num_vertices_; }  // C(n,w)
  int degree() const { return params_.w * (params_.n - params_.w); }
  std::int64_t eigenvalue(int i) const { return jeqp::eigenvalue(params_, i); }
  std::int64_t lambda2() const { return eigenvalue(2); }

  // true iff v is a weight-w mask inside the first n coordinates.
  bool contains(Vertex v) const;

  // Colexicographic rank in [0, C(n,w)) and its inverse.
  std::uint64_t rank(Vertex v) const;
  Vertex unrank(std::uint64_t r) const;

  // Exactly w-1 common ones (Hamming distance 2). Vertices must belong to
  // this graph; otherwise throws std::invalid_argument.
  bool adjacent(Vertex u, Vertex v) const;

  // The w(n-w) vertices adjacent to u, sorted by rank, no duplicates.
  std::vector<Vertex> neighbors(Vertex u) const;

  // Colex iteration: first() is {1..w}; next() advances and returns false
  // past the last vertex.
  Vertex first() const { return Vertex{(std::uint64_t{1} << params_.w) - 1}; }
  bool next(Vertex& v) const;

  std::vector<Vertex> all_vertices() const;

 private:
  GraphParams params_;
  std::uint64_t num_vertices_ = 0;
};

}  // namespace jeqp
