#include "jeqp/johnson.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace jeqp {

namespace {

using BinomTable =
    std::array<std::array<std::uint64_t, kMaxCoords + 1>, kMaxCoords + 1>;

const BinomTable& binomial_table() {
  static const BinomTable table = [] {
    BinomTable t{};
    for (int n = 0; n <= kMaxCoords; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

void validate_params(const GraphParams& p) {
  if (p.w < 1 || p.w > p.n - 1)
    throw std::invalid_argument("GraphParams: need 1 <= w <= n-1, got n=" +
                                std::to_string(p.n) +
                                " w=" + std::to_string(p.w));
}

std::int64_t eigenvalue(const GraphParams& p, int i) {
  validate_params(p);
  if (i < 0 || i > p.w)
    throw std::invalid_argument("eigenvalue: index i out of [0,w]");
  const std::int64_t w = p.w, n = p.n, k = i;
  return (w - k) * (n - w - k) - k;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxCoords)
    throw std::invalid_argument("binomial: n out of [0," +
                                std::to_string(kMaxCoords) + "]");
  if (k < 0 || k > n) return 0;
  return binomial_table()[n][k];
}

Vertex vertex_from_support(const std::vector<int>& support_1based) {
  Vertex v;
  for (int c : support_1based) {
    if (c < 1 || c > kMaxCoords)
      throw std::invalid_argument("vertex support coordinate out of range");
    v.bits |= std::uint64_t{1} << (c - 1);
  }
  return v;
}

std::vector<int> support_of(Vertex v, int n) {
  std::vector<int> out;
  for (int c = 0; c < n; ++c)
    if (v.bits >> c & 1) out.push_back(c + 1);
  return out;
}

Vertex parse_vertex_bits(std::string_view s) {
  if (s.empty() || s.size() > kMaxCoords)
    throw std::invalid_argument("vertex bitstring length out of range");
  Vertex v;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.bits |= std::uint64_t{1} << i;
    else if (s[i] != '0')
      throw std::invalid_argument("vertex bitstring must be over {0,1}");
  }
  return v;
}

std::string format_vertex_bits(Vertex v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int c = 0; c < n; ++c)
    if (v.bits >> c & 1) s[static_cast<std::size_t>(c)] = '1';
  return s;
}

Vertex antipode(Vertex v, int n) {
  const std::uint64_t full =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return Vertex{v.bits ^ full};
}

JohnsonGraph::JohnsonGraph(GraphParams p) : params_(p) {
  validate_params(p);
  if (p.n > kMaxCoords)
    throw std::invalid_argument("JohnsonGraph: n exceeds kMaxCoords");
  num_vertices_ = binomial(p.n, p.w);
}

bool JohnsonGraph::contains(Vertex v) const {
  if (params_.n < 64 && (v.bits >> params_.n) != 0) return false;
  return std::popcount(v.bits) == params_.w;
}

std::uint64_t JohnsonGraph::rank(Vertex v) const {
  if (!contains(v))
    throw std::invalid_argument("rank: vertex does not belong to J(n,w)");
  std::uint64_t r = 0, bits = v.bits;
  int i = 1;
  while (bits) {
    const int pos = std::countr_zero(bits);
    r += binomial(pos, i++);
    bits &= bits - 1;
  }
  return r;
}

Vertex JohnsonGraph::unrank(std::uint64_t r) const {
  if (r >= num_vertices_)
    throw std::invalid_argument("unrank: rank >= C(n,w)");
  Vertex v;
  int c = params_.n - 1;
  for (int i = params_.w; i >= 1; --i) {
    while (binomial(c, i) > r) --c;
    v.bits |= std::uint64_t{1} << c;
    r -= binomial(c, i);
    --c;
  }
  return v;
}

bool JohnsonGraph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v))
    throw std::invalid_argument("adjacent: vertex does not belong to J(n,w)");
  return std::popcount(u.bits ^ v.bits) == 2;
}

std::vector<Vertex> JohnsonGraph::neighbors(Vertex u) const {
  if (!contains(u))
    throw std::invalid_argument("neighbors: vertex does not belong to J(n,w)");
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (int s = 0; s < params_.n; ++s) {
    if (!(u.bits >> s & 1)) continue;
    for (int t = 0; t < params_.n; ++t) {
      if (u.bits >> t & 1) continue;
      out.push_back(
          Vertex{u.bits ^ (std::uint64_t{1} << s) ^ (std::uint64_t{1} << t)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool JohnsonGraph::next(Vertex& v) const {
  // Gosper's hack: next mask of equal popcount in numeric (= colex) order.
  const std::uint64_t x = v.bits;
  const std::uint64_t u = x & (~x + 1);
  const std::uint64_t s = x + u;
  v.bits = s | (((x ^ s) >> 2) / u);
  if (params_.n < 64 && (v.bits >> params_.n) != 0) return false;
  return true;
}

std::vector<Vertex> JohnsonGraph::all_vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(num_vertices_));
  Vertex v = first();
  do {
    out.push_back(v);
  } while (next(v) && out.size() < num_vertices_);
  return out;
}

}  // namespace jeqp
