#include "jeqp/canon.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <stdexcept>

#include "jeqp/eigenfn.hpp"

namespace jeqp {

namespace {

std::string flip_labels(std::string s) {
  for (char& c : s) c = c == '1' ? '2' : '1';
  return s;
}

// Branch-and-bound minimization of the image string. Preimages q[0..d-1] of
// the result coordinates are chosen depth-first; after choosing q[d] the
// characters at ranks [C(d,w), C(d+1,w)) are determined (the w-subsets of
// result coordinates {0..d} whose maximum is d, in colex order).
class Minimizer {
 public:
  Minimizer(const JohnsonGraph& g, const std::vector<int>& block_id)
      : g_(g),
        n_(g.n()),
        w_(g.w()),
        block_id_(block_id),
        cur_(static_cast<std::size_t>(g.num_vertices()), '0'),
        q_(static_cast<std::size_t>(g.n()), 0) {}

  void seed(const std::string& best, const std::vector<int>& perm,
            bool swapped) {
    best_ = best;
    best_perm_ = perm;
    best_swapped_ = swapped;
  }

  // src = membership string after the swap flag is applied.
  // first_choice >= 0 restricts the depth-0 candidate (for parallel runs).
  void run(const std::string& src, bool swapped, int first_choice = -1) {
    src_ = &src;
    swap_ = swapped;
    first_choice_ = first_choice;
    dfs(0, false);
  }

  const std::string& best() const { return best_; }
  const std::vector<int>& best_perm() const { return best_perm_; }
  bool best_swapped() const { return best_swapped_; }

 private:
  void dfs(int d, bool lt) {
    if (d == n_) {
      if (lt) {
        best_ = cur_;
        best_perm_.assign(static_cast<std::size_t>(n_), 0);
        for (int t = 0; t < n_; ++t)
          best_perm_[static_cast<std::size_t>(q_[static_cast<std::size_t>(t)])] = t;
        best_swapped_ = swap_;
        ++generation_;
      }
      return;
    }
    std::uint32_t tried = 0;
    for (int c = 0; c < n_; ++c) {
      if (used_ >> c & 1) continue;
      if (d == 0 && first_choice_ >= 0 && c != first_choice_) continue;
      const int b = block_id_[static_cast<std::size_t>(c)];
      if (tried >> b & 1) continue;
      tried |= std::uint32_t{1} << b;

      q_[static_cast<std::size_t>(d)] = c;
      bool child_lt = lt;
      if (!fill_block(d, child_lt)) continue;  // strictly worse, prune

      used_ |= std::uint64_t{1} << c;
      const std::uint64_t gen = generation_;
      dfs(d + 1, child_lt);
      used_ &= ~(std::uint64_t{1} << c);
      // A best update can only come from our own subtree, whose strings all
      // share our prefix: our state relative to the new best is "equal".
      if (generation_ != gen) lt = false;
    }
  }

  // Fills cur_ at ranks [C(d,w), C(d+1,w)); updates lt, returns false when
  // the block compares greater while the prefix was equal.
  bool fill_block(int d, bool& lt) {
    if (d < w_ - 1) return true;  // no w-subset of {0..d} has maximum d yet
    std::size_t idx = static_cast<std::size_t>(binomial(d, w_));
    const std::uint64_t top = std::uint64_t{1}
                              << q_[static_cast<std::size_t>(d)];
    if (w_ == 1) return put_char(idx, top, lt);

    // (w-1)-subsets of {0..d-1} in colex order via Gosper iteration.
    const std::uint64_t limit = std::uint64_t{1} << d;
    std::uint64_t s = (std::uint64_t{1} << (w_ - 1)) - 1;
    while (s < limit) {
      std::uint64_t orig = top, bits = s;
      while (bits) {
        orig |= std::uint64_t{1}
                << q_[static_cast<std::size_t>(std::countr_zero(bits))];
        bits &= bits - 1;
      }
      if (!put_char(idx++, orig, lt)) return false;
      const std::uint64_t u = s & (~s + 1);
      const std::uint64_t y = s + u;
      s = y | (((s ^ y) >> 2) / u);
    }
    return true;
  }

  bool put_char(std::size_t idx, std::uint64_t orig_mask, bool& lt) {
    const char ch = (*src_)[g_.rank(Vertex{orig_mask})];
    cur_[idx] = ch;
    if (!lt) {
      if (ch > best_[idx]) return false;
      if (ch < best_[idx]) lt = true;
    }
    return true;
  }

  const JohnsonGraph& g_;
  int n_, w_;
  const std::vector<int>& block_id_;
  std::string cur_;
  std::vector<int> q_;
  std::uint64_t used_ = 0;
  const std::string* src_ = nullptr;
  bool swap_ = false;
  int first_choice_ = -1;

  std::string best_;
  std::vector<int> best_perm_;
  bool best_swapped_ = false;
  std::uint64_t generation_ = 0;
};

std::vector<int> identity_perm(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
  return id;
}

}  // namespace

CanonicalForm canonical_form(const TwoPartition& p, int n_guard, int threads) {
  validate_partition(p);
  const int n = p.params.n;
  if (n > n_guard)
    throw std::invalid_argument(
        "canonical_form: n = " + std::to_string(n) + " exceeds the guard (" +
        std::to_string(n_guard) + "); exact canonicalization refused");

  const JohnsonGraph g(p.params);

  // Interchangeability classes: coordinates i,j with membership invariant
  // under the transposition (i j), i.e. zero partial difference.
  VertexFunction m{p.params, std::vector<std::int64_t>(p.cell.begin(),
                                                       p.cell.end())};
  const BlockDecomposition bd = block_decomposition(m);
  std::vector<int> block_id(static_cast<std::size_t>(n), 0);
  for (std::size_t b = 0; b < bd.blocks.size(); ++b)
    for (int c : bd.blocks[b])
      block_id[static_cast<std::size_t>(c - 1)] = static_cast<int>(b);

  const std::string base = membership_string(p);
  const std::string flipped = flip_labels(base);

  // Identity images seed the bound.
  std::string seed = base;
  bool seed_swap = false;
  if (flipped < seed) {
    seed = flipped;
    seed_swap = true;
  }

  if (threads <= 1) {
    Minimizer mz(g, block_id);
    mz.seed(seed, identity_perm(n), seed_swap);
    mz.run(base, false);
    mz.run(flipped, true);
    return {mz.best(), mz.best_perm(), mz.best_swapped()};
  }

  // Parallel: independent minimizers per (swap, depth-0 block representative),
  // merged in task order for a deterministic certificate.
  struct Task {
    bool swapped;
    int first;
  };
  std::vector<Task> tasks;
  for (int s = 0; s < 2; ++s) {
    std::uint32_t seen = 0;
    for (int c = 0; c < n; ++c) {
      const int b = block_id[static_cast<std::size_t>(c)];
      if (seen >> b & 1) continue;
      seen |= std::uint32_t{1} << b;
      tasks.push_back({s == 1, c});
    }
  }
  std::vector<std::future<CanonicalForm>> futures;
  futures.reserve(tasks.size());
  for (const Task& t : tasks) {
    futures.push_back(std::async(std::launch::async, [&, t] {
      Minimizer mz(g, block_id);
      mz.seed(seed, identity_perm(n), seed_swap);
      mz.run(t.swapped ? flipped : base, t.swapped, t.first);
      return CanonicalForm{mz.best(), mz.best_perm(), mz.best_swapped()};
    }));
  }
  CanonicalForm best{seed, identity_perm(n), seed_swap};
  for (auto& f : futures) {
    CanonicalForm r = f.get();
    if (r.membership < best.membership) best = std::move(r);
  }
  return best;
}

bool equivalent(const TwoPartition& p, const TwoPartition& q, int n_guard) {
  if (p.params != q.params)
    throw std::invalid_argument("equivalent: mismatched (n,w)");
  validate_partition(p);
  validate_partition(q);

  // Cheap invariants first.
  auto sizes = [](const TwoPartition& t) {
    auto [n1, n2] = cell_sizes(t);
    return std::pair{std::min(n1, n2), std::max(n1, n2)};
  };
  if (sizes(p) != sizes(q)) return false;

  const EquitableResult ep = verify_equitable(p);
  const EquitableResult eq = verify_equitable(q);
  if (ep.equitable != eq.equitable) return false;
  if (ep.equitable &&
      !(ep.matrix == eq.matrix || ep.matrix == eq.matrix.swapped()))
    return false;

  auto sbd = [](const TwoPartition& t) {
    VertexFunction m{t.params,
                     std::vector<std::int64_t>(t.cell.begin(), t.cell.end())};
    return block_decomposition(m).sbd();
  };
  if (sbd(p) != sbd(q)) return false;

  return canonical_form(p, n_guard).membership ==
         canonical_form(q, n_guard).membership;
}

TwoPartition apply_permutation(const TwoPartition& p,
                               const std::vector<int>& perm, bool swap_cells) {
  validate_partition(p);
  const int n = p.params.n;
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("apply_permutation: permutation size != n");
  std::uint64_t seen = 0;
  for (int im : perm) {
    if (im < 0 || im >= n || (seen >> im & 1))
      throw std::invalid_argument("apply_permutation: not a permutation");
    seen |= std::uint64_t{1} << im;
  }
  const JohnsonGraph g(p.params);
  TwoPartition out{p.params, std::vector<std::uint8_t>(p.cell.size())};
  Vertex v = g.first();
  std::uint64_t r = 0;
  do {
    std::uint64_t image = 0, bits = v.bits;
    while (bits) {
      image |= std::uint64_t{1}
               << perm[static_cast<std::size_t>(std::countr_zero(bits))];
      bits &= bits - 1;
    }
    const std::uint8_t c = p.cell[r];
    out.cell[g.rank(Vertex{image})] =
        swap_cells ? static_cast<std::uint8_t>(3 - c) : c;
    ++r;
  } while (g.next(v));
  return out;
}

std::string perm_cycles_one_based(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)] ||
        perm[static_cast<std::size_t>(i)] == i)
      continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = perm[static_cast<std::size_t>(j)];
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

}  // namespace jeqp
