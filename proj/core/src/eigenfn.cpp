#include "jeqp/eigenfn.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace jeqp {

namespace {

// Inserts a zero bit at position pos, shifting higher bits up.
std::uint64_t insert_gap(std::uint64_t x, int pos) {
  const std::uint64_t low = x & ((std::uint64_t{1} << pos) - 1);
  return ((x >> pos) << (pos + 1)) | low;
}

}  // namespace

void validate_function(const VertexFunction& f) {
  const JohnsonGraph g(f.params);
  if (f.values.size() != g.num_vertices())
    throw std::invalid_argument("function: values length != C(n,w)");
}

bool is_zero(const VertexFunction& f) {
  return std::all_of(f.values.begin(), f.values.end(),
                     [](std::int64_t v) { return v == 0; });
}

std::uint64_t support_size(const VertexFunction& f) {
  return static_cast<std::uint64_t>(
      std::count_if(f.values.begin(), f.values.end(),
                    [](std::int64_t v) { return v != 0; }));
}

EigenCheck is_eigenfunction(const VertexFunction& f, std::int64_t lambda) {
  validate_function(f);
  if (is_zero(f)) return {EigenStatus::ZeroFunction, 0};
  const JohnsonGraph g(f.params);
  Vertex v = g.first();
  std::uint64_t r = 0;
  do {
    std::int64_t sum = 0;
    for (const Vertex& u : g.neighbors(v)) sum += f.values[g.rank(u)];
    if (sum != lambda * f.values[r]) return {EigenStatus::NotEigenfunction, r};
    ++r;
  } while (g.next(v));
  return {EigenStatus::Eigenfunction, 0};
}

VertexFunction partial_difference(const VertexFunction& f, int j1, int j2) {
  validate_function(f);
  const int n = f.params.n, w = f.params.w;
  if (j1 == j2 || j1 < 1 || j1 > n || j2 < 1 || j2 > n)
    throw std::invalid_argument("partial_difference: bad coordinate pair");
  if (w < 2 || n < w + 2)
    throw std::invalid_argument("partial_difference: need w >= 2, n >= w+2");

  const JohnsonGraph g(f.params);
  const JohnsonGraph sub(n - 2, w - 1);
  const int p1 = j1 - 1, p2 = j2 - 1;
  const int q1 = std::min(p1, p2), q2 = std::max(p1, p2);

  VertexFunction out{sub.params(), std::vector<std::int64_t>(
                                       static_cast<std::size_t>(
                                           sub.num_vertices()))};
  Vertex y = sub.first();
  std::uint64_t r = 0;
  do {
    const std::uint64_t base = insert_gap(insert_gap(y.bits, q1), q2);
    const std::int64_t plus =
        f.values[g.rank(Vertex{base | std::uint64_t{1} << p1})];
    const std::int64_t minus =
        f.values[g.rank(Vertex{base | std::uint64_t{1} << p2})];
    out.values[r] = plus - minus;
    ++r;
  } while (sub.next(y));
  return out;
}

VertexFunction from_partition(const TwoPartition& p, const QuotientMatrix& m) {
  validate_partition(p);
  VertexFunction f{p.params, std::vector<std::int64_t>(p.cell.size())};
  for (std::size_t i = 0; i < p.cell.size(); ++i)
    f.values[i] = p.cell[i] == 1 ? m.b : -m.c;
  return f;
}

const char* form_kind_name(FormKind k) {
  switch (k) {
    case FormKind::Zero: return "Zero";
    case FormKind::F1: return "F1";
    case FormKind::F2: return "F2";
    case FormKind::F3: return "F3";
    case FormKind::F4: return "F4";
    case FormKind::Other: return "Other";
  }
  return "?";
}

VertexFunction make_form(const GraphParams& p, FormKind kind,
                         const std::vector<int>& witness) {
  validate_params(p);
  const int n = p.n, w = p.w;
  auto coord_ok = [n](int j) { return j >= 1 && j <= n; };

  switch (kind) {
    case FormKind::F1:
    case FormKind::F2: {
      if (witness.size() != 2 || !coord_ok(witness[0]) ||
          !coord_ok(witness[1]) || witness[0] == witness[1])
        throw std::invalid_argument("make_form: need two distinct coords");
      if (kind == FormKind::F2 && n != 2 * w)
        throw std::invalid_argument("make_form: F2 requires n = 2w");
      break;
    }
    case FormKind::F3: {
      if (witness.size() != 1 || !coord_ok(witness[0]))
        throw std::invalid_argument("make_form: need one coordinate");
      if (n != 2 * w)
        throw std::invalid_argument("make_form: F3 requires n = 2w");
      break;
    }
    case FormKind::F4: {
      if (w != 2 || n % 2 != 0)
        throw std::invalid_argument("make_form: F4 requires w = 2, n even");
      if (static_cast<int>(witness.size()) != n / 2)
        throw std::invalid_argument("make_form: F4 witness must be a half-set");
      for (int j : witness)
        if (!coord_ok(j))
          throw std::invalid_argument("make_form: coordinate out of range");
      break;
    }
    default:
      throw std::invalid_argument("make_form: kind must be F1..F4");
  }

  const JohnsonGraph g(p);
  VertexFunction f{p, std::vector<std::int64_t>(
                          static_cast<std::size_t>(g.num_vertices()))};

  std::uint64_t half = 0;
  if (kind == FormKind::F4) half = vertex_from_support(witness).bits;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  Vertex v = g.first();
  std::uint64_t r = 0;
  do {
    std::int64_t val = 0;
    switch (kind) {
      case FormKind::F1: {
        const bool b1 = v.bits >> (witness[0] - 1) & 1;
        const bool b2 = v.bits >> (witness[1] - 1) & 1;
        val = b1 && !b2 ? 1 : (!b1 && b2 ? -1 : 0);
        break;
      }
      case FormKind::F2: {
        const bool b1 = v.bits >> (witness[0] - 1) & 1;
        const bool b2 = v.bits >> (witness[1] - 1) & 1;
        val = b1 && b2 ? 1 : (!b1 && !b2 ? -1 : 0);
        break;
      }
      case FormKind::F3:
        val = (v.bits >> (witness[0] - 1) & 1) ? 1 : -1;
        break;
      case FormKind::F4:
        if ((v.bits & ~half) == 0)
          val = 1;
        else if ((v.bits & ~(full ^ half)) == 0)
          val = -1;
        break;
      default:
        break;
    }
    f.values[r++] = val;
  } while (g.next(v));
  return f;
}

VertexFunction reconstruct(const GraphParams& p, const ClassifiedForm& cf) {
  if (cf.kind == FormKind::Zero) {
    const JohnsonGraph g(p);
    return {p, std::vector<std::int64_t>(
                   static_cast<std::size_t>(g.num_vertices()))};
  }
  if (cf.kind == FormKind::Other)
    throw std::invalid_argument("reconstruct: Other has no canonical form");
  if (!cf.scale.is_integer() || cf.scale.num == 0)
    throw std::invalid_argument("reconstruct: scale must be a nonzero integer");
  VertexFunction f = make_form(p, cf.kind, cf.witness);
  for (auto& v : f.values) v *= cf.scale.num;
  return f;
}

namespace {

struct FormCandidate {
  FormKind kind;
  std::vector<int> witness;
};

// alpha from the first vertex where the unit form is nonzero; exact compare.
bool verify_candidate(const VertexFunction& f, const FormCandidate& cand,
                      ClassifiedForm& out) {
  VertexFunction form = make_form(f.params, cand.kind, cand.witness);
  std::int64_t alpha = 0;
  for (std::size_t i = 0; i < form.values.size(); ++i) {
    if (form.values[i] != 0) {
      alpha = f.values[i] * form.values[i];  // form value is +-1
      break;
    }
  }
  if (alpha == 0) return false;
  for (std::size_t i = 0; i < form.values.size(); ++i)
    if (f.values[i] != alpha * form.values[i]) return false;
  out = {cand.kind, cand.witness, Rational{alpha, 1}};
  return true;
}

}  // namespace

ClassifiedForm classify_form(const VertexFunction& f) {
  validate_function(f);
  if (is_zero(f)) return {FormKind::Zero, {}, Rational{0, 1}};

  const int n = f.params.n, w = f.params.w;
  const JohnsonGraph g(f.params);

  // Induced values on J(n,1): a[i] = sum of f over vertices containing i+1.
  std::vector<std::int64_t> a(static_cast<std::size_t>(n), 0);
  {
    Vertex v = g.first();
    std::uint64_t r = 0;
    do {
      const std::int64_t val = f.values[r++];
      if (val != 0) {
        std::uint64_t bits = v.bits;
        while (bits) {
          a[static_cast<std::size_t>(std::countr_zero(bits))] += val;
          bits &= bits - 1;
        }
      }
    } while (g.next(v));
  }

  std::vector<int> nonzero;
  for (int i = 0; i < n; ++i)
    if (a[static_cast<std::size_t>(i)] != 0) nonzero.push_back(i + 1);

  std::vector<FormCandidate> candidates;
  if (nonzero.size() == 2) {
    candidates.push_back({FormKind::F1, {nonzero[0], nonzero[1]}});
  } else if (static_cast<int>(nonzero.size()) == n) {
    // Group coordinates by induced value.
    std::vector<std::pair<std::int64_t, std::vector<int>>> groups;
    for (int i = 0; i < n; ++i) {
      const std::int64_t val = a[static_cast<std::size_t>(i)];
      auto it = std::find_if(groups.begin(), groups.end(),
                             [val](const auto& gr) { return gr.first == val; });
      if (it == groups.end())
        groups.push_back({val, {i + 1}});
      else
        it->second.push_back(i + 1);
    }
    if (groups.size() == 2) {
      for (const auto& gr : groups) {
        if (gr.second.size() == 2 && n == 2 * w)
          candidates.push_back({FormKind::F2, gr.second});
        if (gr.second.size() == 1 && n == 2 * w)
          candidates.push_back({FormKind::F3, gr.second});
        if (static_cast<int>(gr.second.size()) == n / 2 && w == 2 &&
            n % 2 == 0 && gr.first > 0)
          candidates.push_back({FormKind::F4, gr.second});
      }
      // Precedence F1 < F2 < F3 < F4 on the kind, then lexicographic witness.
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const FormCandidate& x, const FormCandidate& y) {
                         return x.kind < y.kind;
                       });
    }
  }

  ClassifiedForm out;
  for (const auto& cand : candidates)
    if (verify_candidate(f, cand, out)) return out;
  return {FormKind::Other, {}, Rational{0, 1}};
}

bool zero_pair(const VertexFunction& f, int i, int j) {
  const int n = f.params.n;
  if (i == j || i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("zero_pair: bad coordinate pair");
  const JohnsonGraph g(f.params);
  const std::uint64_t bi = std::uint64_t{1} << (i - 1);
  const std::uint64_t bj = std::uint64_t{1} << (j - 1);
  Vertex v = g.first();
  std::uint64_t r = 0;
  do {
    if ((v.bits & bi) && !(v.bits & bj)) {
      if (f.values[r] != f.values[g.rank(Vertex{v.bits ^ bi ^ bj})])
        return false;
    }
    ++r;
  } while (g.next(v));
  return true;
}

std::uint64_t pair_support_size(const VertexFunction& f, int i, int j) {
  const int n = f.params.n;
  if (i == j || i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("pair_support_size: bad coordinate pair");
  const JohnsonGraph g(f.params);
  const std::uint64_t bi = std::uint64_t{1} << (i - 1);
  const std::uint64_t bj = std::uint64_t{1} << (j - 1);
  std::uint64_t count = 0;
  Vertex v = g.first();
  std::uint64_t r = 0;
  do {
    if ((v.bits & bi) && !(v.bits & bj))
      if (f.values[r] != f.values[g.rank(Vertex{v.bits ^ bi ^ bj})]) ++count;
    ++r;
  } while (g.next(v));
  return count;
}

std::vector<int> BlockDecomposition::sbd() const {
  std::vector<int> s;
  s.reserve(blocks.size());
  for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
  std::sort(s.begin(), s.end());
  return s;
}

BlockDecomposition block_decomposition(const VertexFunction& f) {
  validate_function(f);
  const int n = f.params.n;

  std::vector<std::vector<bool>> zero(static_cast<std::size_t>(n),
                                      std::vector<bool>(n, false));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(
              parent[static_cast<std::size_t>(x)])];
    return x;
  };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (zero_pair(f, i + 1, j + 1)) {
        zero[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        parent[static_cast<std::size_t>(find(i))] = find(j);
      }

  // The zero-difference relation must already be an equivalence.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((find(i) == find(j)) !=
          zero[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        throw std::logic_error(
            "block_decomposition: zero-difference relation not transitive");

  std::vector<std::vector<int>> blocks;
  std::vector<int> root_block(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (root_block[static_cast<std::size_t>(r)] < 0) {
      root_block[static_cast<std::size_t>(r)] =
          static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(root_block[static_cast<std::size_t>(r)])]
        .push_back(i + 1);
  }
  return {std::move(blocks)};
}

CrossEdgeAudit cross_edge_audit(const TwoPartition& p) {
  const EquitableResult eq = verify_equitable(p);
  if (!eq.equitable)
    throw std::invalid_argument("cross_edge_audit: partition is not equitable");
  const QuotientMatrix& m = eq.matrix;
  const JohnsonGraph g(p.params);
  const VertexFunction f = from_partition(p, m);

  std::int64_t rhs = 0;
  for (int i = 1; i <= p.params.n; ++i)
    for (int j = i + 1; j <= p.params.n; ++j)
      rhs += static_cast<std::int64_t>(pair_support_size(f, i, j));

  const Rational lhs{m.b * m.c * static_cast<std::int64_t>(g.num_vertices()),
                     m.b + m.c};
  return {lhs, rhs, lhs == Rational{rhs}};
}

std::int64_t pairs_lower_bound(std::int64_t N, std::int64_t s) {
  if (s <= 0 || s >= N)
    throw std::invalid_argument("pairs_lower_bound: need 0 < s < N");
  const std::int64_t q = N / s;
  return s * q * (2 * N - s - s * q) / 2;
}

DiffCensus difference_census(const TwoPartition& p) {
  const int n = p.params.n, w = p.params.w;
  if (n != 2 * w)
    throw std::invalid_argument("difference_census: requires n = 2w");
  const EquitableResult eq = verify_equitable(p);
  if (!eq.equitable)
    throw std::invalid_argument("difference_census: partition is not equitable");
  const QuotientMatrix& m = eq.matrix;
  if (m.a - m.c != eigenvalue(p.params, 2))
    throw std::invalid_argument(
        "difference_census: second quotient eigenvalue is not lambda_2");

  const VertexFunction f = from_partition(p, m);
  DiffCensus census;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const ClassifiedForm cf = classify_form(partial_difference(f, i, j));
      switch (cf.kind) {
        case FormKind::Zero: ++census.k0; break;
        case FormKind::F1: ++census.k1; break;
        case FormKind::F2: ++census.k2; break;
        case FormKind::F3:
          census.status = CensusStatus::F3Route;
          return census;
        default:
          throw std::invalid_argument(
              "difference_census: a partial difference matches no classified form");
      }
    }
  }
  const std::uint64_t pairs = binomial(n, 2);
  census.counts_complete = census.k0 + census.k1 + census.k2 == pairs;
  const std::int64_t k1 = static_cast<std::int64_t>(census.k1);
  const std::int64_t k2 = static_cast<std::int64_t>(census.k2);
  census.counting_identity_holds =
      m.b * m.c * (2 * w - 3) == k1 * w * (w - 1) + k2 * w * (w - 2);
  return census;
}

}  // namespace jeqp
