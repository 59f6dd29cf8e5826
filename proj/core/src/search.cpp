#include "jeqp/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

#include "jeqp/canon.hpp"
#include "jeqp/constructions.hpp"
#include "jeqp/eigenfn.hpp"

namespace jeqp {

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t node_budget;
  Clock::time_point deadline;
  std::atomic<bool> exhausted{false};
};

// One depth-first searcher over membership assignments. Counts per vertex
// how many neighbors sit in each cell; a branch dies as soon as some vertex
// can no longer reach its row of the quotient matrix, and assignments are
// forced when only one cell stays feasible or a row/cell-size bound becomes
// tight.
class Searcher {
 public:
  Searcher(const JohnsonGraph& g, const QuotientMatrix& m, bool antipodal,
           Shared& shared)
      : g_(g),
        n_vertices_(static_cast<std::uint32_t>(g.num_vertices())),
        deg_(g.degree()),
        a_(m.a),
        b_(m.b),
        c_(m.c),
        d_(m.d),
        antipodal_(antipodal),
        shared_(shared) {
    size1_ = static_cast<std::uint64_t>(m.c) * g.num_vertices() /
             (static_cast<std::uint64_t>(m.b) + m.c);
    size2_ = g.num_vertices() - size1_;

    adj_.resize(static_cast<std::size_t>(n_vertices_) * deg_);
    const std::vector<Vertex> verts = g.all_vertices();
    for (std::uint32_t v = 0; v < n_vertices_; ++v) {
      const auto nbrs = g.neighbors(verts[v]);
      for (int t = 0; t < deg_; ++t)
        adj_[static_cast<std::size_t>(v) * deg_ + t] =
            static_cast<std::uint32_t>(g.rank(nbrs[static_cast<std::size_t>(t)]));
    }
    if (antipodal_) {
      comp_.resize(n_vertices_);
      for (std::uint32_t v = 0; v < n_vertices_; ++v)
        comp_[v] = static_cast<std::uint32_t>(
            g.rank(antipode(verts[v], g.n())));
    }
    cell_.assign(n_vertices_, 0);
    cnt1_.assign(n_vertices_, 0);
    cnt2_.assign(n_vertices_, 0);
  }

  // Restores a snapshot (used by parallel subtree tasks).
  void load(const std::vector<std::uint8_t>& cells) {
    cell_ = cells;
    std::fill(cnt1_.begin(), cnt1_.end(), 0);
    std::fill(cnt2_.begin(), cnt2_.end(), 0);
    count1_ = count2_ = 0;
    trail_.clear();
    pending_.clear();
    for (std::uint32_t v = 0; v < n_vertices_; ++v) {
      if (cell_[v] == 0) continue;
      (cell_[v] == 1 ? count1_ : count2_)++;
      for (int t = 0; t < deg_; ++t) {
        const std::uint32_t u = adj_[static_cast<std::size_t>(v) * deg_ + t];
        (cell_[v] == 1 ? cnt1_ : cnt2_)[u]++;
      }
    }
  }

  // Assign the root reductions. Returns false when already contradictory.
  bool root_assign(std::uint32_t v, std::uint8_t k) {
    pending_.clear();
    return do_assign(v, k) && propagate();
  }

  void search(std::vector<std::string>* solutions) {
    solutions_ = solutions;
    dfs(0);
  }

  // Bounded DFS that stops branching after `depth` decisions and snapshots
  // the propagated states instead.
  void gather(int depth, std::vector<std::vector<std::uint8_t>>* out) {
    snapshots_ = out;
    gather_dfs(0, depth);
    snapshots_ = nullptr;
  }

 private:
  bool feasible1(std::uint32_t u) const {
    return cnt1_[u] <= a_ && cnt2_[u] <= b_;
  }
  bool feasible2(std::uint32_t u) const {
    return cnt1_[u] <= c_ && cnt2_[u] <= d_;
  }

  bool recheck(std::uint32_t u) {
    const int und = deg_ - cnt1_[u] - cnt2_[u];
    switch (cell_[u]) {
      case 1:
        if (cnt1_[u] > a_ || cnt2_[u] > b_) return false;
        if (und > 0) {
          if (cnt1_[u] + und == a_)
            force_undecided_neighbors(u, 1);
          else if (cnt2_[u] + und == b_)
            force_undecided_neighbors(u, 2);
        }
        return true;
      case 2:
        if (cnt1_[u] > c_ || cnt2_[u] > d_) return false;
        if (und > 0) {
          if (cnt1_[u] + und == c_)
            force_undecided_neighbors(u, 1);
          else if (cnt2_[u] + und == d_)
            force_undecided_neighbors(u, 2);
        }
        return true;
      default: {
        const bool f1 = feasible1(u), f2 = feasible2(u);
        if (!f1 && !f2) return false;
        if (!f1)
          pending_.push_back({u, 2});
        else if (!f2)
          pending_.push_back({u, 1});
        return true;
      }
    }
  }

  void force_undecided_neighbors(std::uint32_t u, std::uint8_t k) {
    const std::size_t base = static_cast<std::size_t>(u) * deg_;
    for (int t = 0; t < deg_; ++t) {
      const std::uint32_t x = adj_[base + t];
      if (cell_[x] == 0) pending_.push_back({x, k});
    }
  }

  // All state mutations happen before any check can fail, so undo_to can
  // always reverse a full assignment. An early return between the counter
  // updates and the checks would leave the trail inconsistent.
  bool do_assign(std::uint32_t v, std::uint8_t k) {
    if (cell_[v] != 0) return cell_[v] == k;
    cell_[v] = k;
    trail_.push_back(v);
    (k == 1 ? count1_ : count2_)++;
    const std::size_t base = static_cast<std::size_t>(v) * deg_;
    auto& cnt = k == 1 ? cnt1_ : cnt2_;
    for (int t = 0; t < deg_; ++t) cnt[adj_[base + t]]++;

    if (count1_ > size1_ || count2_ > size2_) return false;
    if (antipodal_) pending_.push_back({comp_[v], k});
    for (int t = 0; t < deg_; ++t)
      if (!recheck(adj_[base + t])) return false;
    return recheck(v);
  }

  bool propagate() {
    for (;;) {
      while (!pending_.empty()) {
        const auto [v, k] = pending_.back();
        pending_.pop_back();
        if (cell_[v] != 0) {
          if (cell_[v] != k) return false;
          continue;
        }
        if (!do_assign(v, k)) return false;
      }
      if (count1_ == size1_ && count1_ + count2_ < n_vertices_) {
        for (std::uint32_t v = 0; v < n_vertices_; ++v)
          if (cell_[v] == 0) pending_.push_back({v, 2});
        continue;
      }
      if (count2_ == size2_ && count1_ + count2_ < n_vertices_) {
        for (std::uint32_t v = 0; v < n_vertices_; ++v)
          if (cell_[v] == 0) pending_.push_back({v, 1});
        continue;
      }
      return true;
    }
  }

  bool budget_ok() {
    const std::uint64_t nodes =
        shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (nodes > shared_.node_budget) {
      shared_.exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    if ((nodes & 1023) == 0 && Clock::now() > shared_.deadline) {
      shared_.exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void record_solution() {
    for (std::uint32_t v = 0; v < n_vertices_; ++v) {
      const std::size_t base = static_cast<std::size_t>(v) * deg_;
      std::int64_t own = 0;
      for (int t = 0; t < deg_; ++t)
        if (cell_[adj_[base + t]] == cell_[v]) ++own;
      const std::int64_t want = cell_[v] == 1 ? a_ : d_;
      if (own != want)
        throw std::logic_error(
            "search: fully propagated assignment violates the matrix");
    }
    std::string s(n_vertices_, '0');
    for (std::uint32_t v = 0; v < n_vertices_; ++v)
      s[v] = static_cast<char>('0' + cell_[v]);
    solutions_->push_back(std::move(s));
  }

  void dfs(std::uint32_t from) {
    if (shared_.exhausted.load(std::memory_order_relaxed)) return;
    if (!budget_ok()) return;
    while (from < n_vertices_ && cell_[from] != 0) ++from;
    if (from == n_vertices_) {
      record_solution();
      return;
    }
    for (std::uint8_t k : {std::uint8_t{1}, std::uint8_t{2}}) {
      const std::size_t mark = trail_.size();
      pending_.clear();
      if (do_assign(from, k) && propagate()) dfs(from + 1);
      pending_.clear();
      undo_to(mark);
      if (shared_.exhausted.load(std::memory_order_relaxed)) return;
    }
  }

  void gather_dfs(std::uint32_t from, int depth) {
    if (shared_.exhausted.load(std::memory_order_relaxed)) return;
    while (from < n_vertices_ && cell_[from] != 0) ++from;
    if (from == n_vertices_ || depth == 0) {
      snapshots_->push_back(cell_);
      return;
    }
    for (std::uint8_t k : {std::uint8_t{1}, std::uint8_t{2}}) {
      const std::size_t mark = trail_.size();
      pending_.clear();
      if (do_assign(from, k) && propagate()) gather_dfs(from + 1, depth - 1);
      pending_.clear();
      undo_to(mark);
    }
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::uint32_t v = trail_.back();
      trail_.pop_back();
      const std::uint8_t k = cell_[v];
      cell_[v] = 0;
      (k == 1 ? count1_ : count2_)--;
      const std::size_t base = static_cast<std::size_t>(v) * deg_;
      for (int t = 0; t < deg_; ++t) (k == 1 ? cnt1_ : cnt2_)[adj_[base + t]]--;
    }
  }

  const JohnsonGraph& g_;
  std::uint32_t n_vertices_;
  int deg_;
  std::int64_t a_, b_, c_, d_;
  bool antipodal_;
  Shared& shared_;
  std::uint64_t size1_ = 0, size2_ = 0;

  std::vector<std::uint32_t> adj_;
  std::vector<std::uint32_t> comp_;
  std::vector<std::uint8_t> cell_;
  std::vector<std::int16_t> cnt1_, cnt2_;
  std::uint64_t count1_ = 0, count2_ = 0;
  std::vector<std::uint32_t> trail_;
  std::vector<std::pair<std::uint32_t, std::uint8_t>> pending_;

  std::vector<std::string>* solutions_ = nullptr;
  std::vector<std::vector<std::uint8_t>>* snapshots_ = nullptr;
};

}  // namespace

SearchOutcome enumerate_partitions(const SearchSpec& spec) {
  const auto start = Clock::now();
  const JohnsonGraph g(spec.params);
  const QuotientMatrix& m = spec.matrix;
  SearchOutcome out;

  bool antipodal = false;
  if (spec.antipodal.has_value()) {
    antipodal = *spec.antipodal;
    if (antipodal && spec.params.n != 2 * spec.params.w)
      throw std::invalid_argument("search: antipodal forcing requires n = 2w");
  } else {
    antipodal = spec.params.n == 2 * spec.params.w && spec.params.w >= 2 &&
                m.a - m.c == eigenvalue(spec.params, 2);
  }

  // Structural infeasibility: wrong row sums, nonpositive cross degrees, or
  // a non-integral implied cell size certify emptiness without search.
  const std::int64_t deg = g.degree();
  const bool shape_ok = m.a >= 0 && m.d >= 0 && m.b >= 1 && m.c >= 1 &&
                        m.a + m.b == deg && m.c + m.d == deg;
  const bool size_ok =
      shape_ok && (static_cast<std::uint64_t>(m.c) * g.num_vertices()) %
                          (static_cast<std::uint64_t>(m.b) + m.c) ==
                      0;
  if (!shape_ok || !size_ok) {
    out.wall_secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    return out;
  }

  Shared shared;
  shared.node_budget = spec.node_budget;
  shared.deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(spec.time_budget_secs));

  // Class-complete for any matrix: S_n is vertex-transitive and C1 is
  // nonempty, so every equivalence class has a representative whose colex
  // first vertex lies in C1 (for b = c the cell swap gives one as well).
  const bool pin_vertex0 = spec.symmetry;
  std::vector<std::string> solutions;

  const int threads =
      std::max(1, std::min(spec.threads,
                           static_cast<int>(std::thread::hardware_concurrency()
                                                ? std::thread::hardware_concurrency()
                                                : 1)));
  if (threads == 1) {
    Searcher s(g, m, antipodal, shared);
    bool root_ok = true;
    if (pin_vertex0) root_ok = s.root_assign(0, 1);
    if (root_ok) s.search(&solutions);
  } else {
    Searcher root(g, m, antipodal, shared);
    bool root_ok = true;
    if (pin_vertex0) root_ok = root.root_assign(0, 1);
    std::vector<std::vector<std::uint8_t>> snapshots;
    if (root_ok) {
      int depth = spec.split_depth;
      if (depth <= 0) {
        depth = 2;
        while ((1 << depth) < 4 * threads && depth < 12) ++depth;
      }
      root.gather(depth, &snapshots);
    }
    std::vector<std::vector<std::string>> sols(snapshots.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      Searcher s(g, m, antipodal, shared);
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= snapshots.size()) break;
        s.load(snapshots[i]);
        s.search(&sols[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& v : sols)
      for (auto& s : v) solutions.push_back(std::move(s));
  }

  out.nodes = shared.nodes.load();
  out.status = shared.exhausted.load() ? SearchStatus::BudgetExhausted
                                       : SearchStatus::Complete;
  out.raw_solutions = solutions.size();

  // Soundness: re-verify every emitted solution against the exact matrix.
  std::map<std::string, TwoPartition> by_canon;
  for (const std::string& s : solutions) {
    TwoPartition p = partition_from_membership(spec.params, s);
    const EquitableResult eq = verify_equitable(p);
    if (!eq.equitable || !(eq.matrix == m))
      throw std::logic_error("search: emitted solution fails re-verification");
    if (spec.collect_raw) out.raw.push_back(p);
    if (spec.params.n <= 14) {
      std::string canon = canonical_form(p).membership;
      by_canon.emplace(std::move(canon), std::move(p));
    } else {
      by_canon.emplace(membership_string(p), std::move(p));
    }
  }
  for (auto& [canon, p] : by_canon) {
    out.class_canon.push_back(canon);
    out.classes.push_back(std::move(p));
  }

  out.wall_secs = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

bool ClassifyReport::complete() const {
  for (const auto& row : rows)
    if (row.searched && row.status != SearchStatus::Complete) return false;
  return true;
}

ClassifyReport classify_n_eq_2w(int w, bool exhaustive,
                                std::uint64_t node_budget,
                                double time_budget_secs, int threads) {
  if (w < 4)
    throw std::invalid_argument("classify_n_eq_2w: requires w >= 4");
  const GraphParams params{2 * w, w};
  const MatrixFamily family = admissible_matrices(params);

  // Construction representatives and their matrices.
  std::vector<std::pair<std::string, TwoPartition>> cons;
  cons.emplace_back("construction1", construction1(w));
  cons.emplace_back("construction2", construction2(w));
  if (w >= 5) cons.emplace_back("construction3", construction3(w));
  cons.emplace_back("construction4", construction4(w));

  ClassifyReport report;
  report.w = w;
  report.exhaustive = exhaustive;
  for (const QuotientMatrix& m : family) {
    MatrixClassification row;
    row.matrix = m;
    if (exhaustive) {
      SearchSpec spec;
      spec.params = params;
      spec.matrix = m;
      spec.node_budget = node_budget;
      spec.time_budget_secs = time_budget_secs;
      spec.threads = threads;
      SearchOutcome o = enumerate_partitions(spec);
      row.searched = true;
      row.status = o.status;
      row.nodes = o.nodes;
      row.wall_secs = o.wall_secs;
      row.classes = std::move(o.classes);
      for (const TwoPartition& p : row.classes) {
        std::string label = "new";
        for (const auto& [name, cp] : cons) {
          const EquitableResult eq = verify_equitable(cp);
          if (eq.matrix == m && equivalent(p, cp)) {
            label = name;
            break;
          }
        }
        row.labels.push_back(std::move(label));
      }
    } else {
      for (const auto& [name, cp] : cons) {
        const EquitableResult eq = verify_equitable(cp);
        if (eq.matrix == m) {
          row.classes.push_back(cp);
          row.labels.push_back(name);
        }
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

// The case-2 partition of the F3 analysis: the pair (1,2), the special
// coordinate 3 and a fourth structural coordinate. Equitable for every
// w >= 4 and equivalent to construction3(w) for w >= 5.
TwoPartition case2_pattern(int w) {
  return pattern_partition({2 * w, w},
                           pattern_from_strings({"1010", "1011", "0101",
                                                 "0100", "1101", "1111",
                                                 "0010", "0000"}));
}

}  // namespace

bool f3_class_check(const TwoPartition& p) {
  const int n = p.params.n, w = p.params.w;
  if (n != 2 * w || w < 4)
    throw std::invalid_argument("f3_class_check: requires n = 2w, w >= 4");
  const EquitableResult eq = verify_equitable(p);
  if (!eq.equitable || eq.matrix.a - eq.matrix.c != eigenvalue(p.params, 2))
    throw std::invalid_argument(
        "f3_class_check: requires an equitable lambda_2 partition");

  const VertexFunction f = from_partition(p, eq.matrix);
  bool f3_found = false;
  for (int i = 1; i <= n && !f3_found; ++i)
    for (int j = i + 1; j <= n && !f3_found; ++j)
      f3_found =
          classify_form(partial_difference(f, i, j)).kind == FormKind::F3;
  if (!f3_found) return true;  // nothing to assert

  if (equivalent(p, construction2(w))) return true;
  if (equivalent(p, construction1(w))) return true;
  return equivalent(p, w >= 5 ? construction3(w) : case2_pattern(w));
}

bool large_block_check(const TwoPartition& p) {
  const int n = p.params.n, w = p.params.w;
  if (n != 2 * w)
    throw std::invalid_argument("large_block_check: requires n = 2w");
  if (w < 5) throw std::invalid_argument("large_block_check: requires w >= 5");
  const EquitableResult eq = verify_equitable(p);
  if (!eq.equitable || eq.matrix.a - eq.matrix.c != eigenvalue(p.params, 2))
    throw std::invalid_argument(
        "large_block_check: requires an equitable lambda_2 partition");

  const VertexFunction f = from_partition(p, eq.matrix);
  const BlockDecomposition bd = block_decomposition(f);
  int largest = 0;
  for (const auto& b : bd.blocks)
    largest = std::max(largest, static_cast<int>(b.size()));
  if (largest < 2 * w - 5) return true;  // no large block: nothing to assert

  if (equivalent(p, construction1(w))) return true;
  if (equivalent(p, construction2(w))) return true;
  if (w >= 5 && equivalent(p, construction3(w))) return true;
  return equivalent(p, construction4(w));
}

}  // namespace jeqp
