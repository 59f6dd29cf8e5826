// jeqp.cpp
//
// Command-line surface over the library: spectra, admissible matrices,
// construction generators, verification, partial differences, three-valued
// form classification, block decompositions, exhaustive search, canonical forms,
// and the composite audit.
//
// Exit codes: 0 pass, 1 check failure, 2 usage/format error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jeqp/canon.hpp"
#include "jeqp/constructions.hpp"
#include "jeqp/eigenfn.hpp"
#include "jeqp/io.hpp"
#include "jeqp/report.hpp"
#include "jeqp/search.hpp"

using namespace jeqp;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

double default_budget_secs() {
  if (const char* env = std::getenv("JEQP_BUDGET_SECS")) {
    try {
      return std::stod(env);
    } catch (...) {
      throw std::invalid_argument("JEQP_BUDGET_SECS is not a number");
    }
  }
  return 3600.0;
}

TwoPartition load_partition(const std::string& path, bool binary, int n,
                            int w) {
  if (binary) {
    if (n <= 0 || w <= 0)
      throw std::invalid_argument("binary partitions need --n and --w");
    return partition_from_bits({n, w}, read_binary_file(path));
  }
  return partition_from_json(read_file(path));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_file(out_path, text);
  }
}

json matrix_json(const QuotientMatrix& m) {
  return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

int cmd_spectrum(int n, int w, bool as_json) {
  const auto rows = spectrum_table({n, w});
  if (as_json) {
    json j;
    j["n"] = n;
    j["w"] = w;
    j["spectrum"] = json::array();
    for (const auto& [i, lambda] : rows)
      j["spectrum"].push_back(json::array({i, lambda}));
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "i  lambda_i(" << n << "," << w << ")\n";
    for (const auto& [i, lambda] : rows)
      std::cout << i << "  " << lambda << "\n";
  }
  return kExitPass;
}

int cmd_matrices(int n, int w, bool as_json) {
  const MatrixFamily family = admissible_matrices({n, w});
  if (as_json) {
    json j = json::array();
    for (const QuotientMatrix& m : family)
      j.push_back({{"b", m.b}, {"matrix", matrix_json(m)}});
    std::cout << j.dump() << "\n";
  } else {
    for (const QuotientMatrix& m : family)
      std::cout << "b=" << m.b << "  " << m.str() << "\n";
  }
  return kExitPass;
}

int cmd_construct(const std::string& kind, int w, int n, int coord,
                  const std::string& pattern_path, const std::string& out_path,
                  bool binary) {
  TwoPartition p{{0, 0}, {}};
  if (kind == "c1")
    p = construction1(w);
  else if (kind == "c2")
    p = construction2(w);
  else if (kind == "c3")
    p = construction3(w);
  else if (kind == "c4")
    p = construction4(w);
  else if (kind == "coord")
    p = coordinate_partition({n, w}, coord);
  else if (kind == "pattern")
    p = pattern_partition({n, w}, pattern_from_json(read_file(pattern_path)));
  else
    throw std::invalid_argument("unknown construction kind: " + kind);

  if (binary) {
    if (out_path.empty())
      throw std::invalid_argument("--binary requires --out");
    write_binary_file(out_path, partition_to_bits(p));
  } else {
    emit(partition_to_json(p), out_path);
  }
  return kExitPass;
}

int cmd_verify(const TwoPartition& p, bool as_json) {
  const EquitableResult eq = verify_equitable(p);
  if (as_json) {
    json j;
    j["equitable"] = eq.equitable;
    if (eq.equitable) {
      j["matrix"] = matrix_json(eq.matrix);
      const auto [k, s] = quotient_eigenvalues(eq.matrix);
      j["eigenvalues"] = json::array({k, s});
    } else {
      const Vertex v = JohnsonGraph(p.params).unrank(eq.witness);
      j["witness_rank"] = eq.witness;
      j["witness"] = format_vertex_bits(v, p.params.n);
      j["witness_support"] = support_of(v, p.params.n);
    }
    std::cout << j.dump() << "\n";
  } else if (eq.equitable) {
    const auto [k, s] = quotient_eigenvalues(eq.matrix);
    std::cout << "equitable with matrix " << eq.matrix.str()
              << ", eigenvalues (" << k << ", " << s << ")\n";
  } else {
    std::cout << "not equitable; witness rank " << eq.witness << " = "
              << format_vertex_bits(JohnsonGraph(p.params).unrank(eq.witness),
                                    p.params.n)
              << "\n";
  }
  return eq.equitable ? kExitPass : kExitCheckFailed;
}

int cmd_search(int n, int w, std::optional<std::int64_t> b, bool all_b,
               std::uint64_t budget_nodes, double budget_secs, int threads,
               bool symmetry, const std::string& antipodal,
               const std::string& out_path, bool with_timing) {
  MatrixFamily family;
  if (all_b) {
    family = admissible_matrices({n, w});
  } else {
    if (!b.has_value())
      throw std::invalid_argument("search needs --b or --all-b");
    const std::int64_t deg = static_cast<std::int64_t>(w) * (n - w);
    const std::int64_t c = 2 * n - 2 - *b;
    family.push_back({deg - *b, *b, c, deg - c});
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open " + out_path);
    os = &file;
  }

  for (const QuotientMatrix& m : family) {
    SearchSpec spec;
    spec.params = {n, w};
    spec.matrix = m;
    spec.node_budget = budget_nodes;
    spec.time_budget_secs = budget_secs;
    spec.threads = threads;
    spec.symmetry = symmetry;
    if (antipodal == "on")
      spec.antipodal = true;
    else if (antipodal == "off")
      spec.antipodal = false;
    const SearchOutcome o = enumerate_partitions(spec);

    for (const TwoPartition& p : o.classes)
      (*os) << partition_to_json(p) << "\n";
    json summary;
    summary["b"] = m.b;
    summary["matrix"] = matrix_json(m);
    summary["status"] =
        o.status == SearchStatus::Complete ? "Complete" : "BudgetExhausted";
    summary["nodes"] = o.nodes;
    summary["classes"] = o.classes.size();
    summary["raw_solutions"] = o.raw_solutions;
    if (with_timing) summary["wall_secs"] = o.wall_secs;
    (*os) << summary.dump() << "\n";
  }
  return kExitPass;
}

int cmd_classify2w(int w, const std::string& mode, std::uint64_t budget_nodes,
                   double budget_secs, int threads) {
  const bool exhaustive = mode == "exhaustive" || (mode == "auto" && w <= 5);
  const ClassifyReport report =
      classify_n_eq_2w(w, exhaustive, budget_nodes, budget_secs, threads);
  for (const auto& row : report.rows) {
    json j;
    j["b"] = row.matrix.b;
    j["matrix"] = matrix_json(row.matrix);
    j["searched"] = row.searched;
    if (row.searched) {
      j["status"] = row.status == SearchStatus::Complete ? "Complete"
                                                         : "BudgetExhausted";
      j["nodes"] = row.nodes;
    }
    j["classes"] = json::array();
    for (std::size_t i = 0; i < row.classes.size(); ++i)
      j["classes"].push_back(
          {{"label", row.labels[i]},
           {"membership", membership_string(row.classes[i])}});
    std::cout << j.dump() << "\n";
  }
  return report.complete() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equitable 2-partitions of Johnson graphs with second "
               "eigenvalue: constructions, verification, search"};
  app.set_version_flag("--version", std::string("jeqp ") + kVersion);
  app.require_subcommand(1);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue table of J(n,w)");
  int sp_n = 0, sp_w = 0;
  bool sp_json = false;
  spectrum->add_option("--n", sp_n)->required();
  spectrum->add_option("--w", sp_w)->required();
  spectrum->add_flag("--json", sp_json);

  // matrices
  auto* matrices =
      app.add_subcommand("matrices", "admissible lambda_2 quotient matrices");
  int ma_n = 0, ma_w = 0;
  bool ma_json = false;
  matrices->add_option("--n", ma_n)->required();
  matrices->add_option("--w", ma_w)->required();
  matrices->add_flag("--json", ma_json);

  // construct
  auto* construct = app.add_subcommand(
      "construct", "generate a partition (c1|c2|c3|c4|coord|pattern)");
  std::string co_kind, co_pattern, co_out;
  int co_w = 0, co_n = 0, co_i = 1;
  bool co_binary = false;
  construct->add_option("kind", co_kind)->required();
  construct->add_option("--w", co_w);
  construct->add_option("--n", co_n);
  construct->add_option("--i", co_i);
  construct->add_option("--pattern", co_pattern);
  construct->add_option("--out", co_out);
  construct->add_flag("--binary", co_binary);

  // verify
  auto* verify = app.add_subcommand("verify", "equitability check");
  std::string ve_in;
  bool ve_binary = false, ve_json = false;
  int ve_n = 0, ve_w = 0;
  verify->add_option("--in", ve_in)->required();
  verify->add_flag("--binary", ve_binary);
  verify->add_option("--n", ve_n);
  verify->add_option("--w", ve_w);
  verify->add_flag("--json", ve_json);

  // diff
  auto* diff = app.add_subcommand("diff", "partial difference f_{j1,j2}");
  std::string di_in, di_out;
  int di_j1 = 0, di_j2 = 0;
  bool di_partition = false;
  diff->add_option("--in", di_in)->required();
  diff->add_option("--j1", di_j1)->required();
  diff->add_option("--j2", di_j2)->required();
  diff->add_flag("--partition", di_partition,
                 "input is a partition; differentiate b*chi1 - c*chi2");
  diff->add_option("--out", di_out);

  // classify
  auto* classify =
      app.add_subcommand("classify", "three-valued eigenfunction form");
  std::string cl_in;
  classify->add_option("--in", cl_in)->required();

  // blocks
  auto* blocks = app.add_subcommand("blocks", "coordinate block decomposition");
  std::string bl_in;
  bool bl_partition = false;
  blocks->add_option("--in", bl_in)->required();
  blocks->add_flag("--partition", bl_partition);

  // search
  auto* search = app.add_subcommand("search", "exhaustive enumeration");
  int se_n = 0, se_w = 0, se_threads = 1;
  std::int64_t se_b = -1;
  bool se_all = false, se_no_sym = false, se_no_timing = false;
  std::uint64_t se_nodes = 1'000'000'000;
  double se_secs = default_budget_secs();
  std::string se_antipodal = "auto", se_out;
  search->add_option("--n", se_n)->required();
  search->add_option("--w", se_w)->required();
  search->add_option("--b", se_b);
  search->add_flag("--all-b", se_all);
  search->add_option("--budget-nodes", se_nodes);
  search->add_option("--budget-secs", se_secs);
  search->add_option("--threads", se_threads);
  search->add_flag("--no-symmetry", se_no_sym);
  search->add_option("--antipodal", se_antipodal)
      ->check(CLI::IsMember({"auto", "on", "off"}));
  search->add_option("--out", se_out);
  search->add_flag("--no-timing", se_no_timing);

  // canon
  auto* canon = app.add_subcommand("canon", "canonical form of a partition");
  std::string ca_in;
  bool ca_cert = false;
  int ca_guard = 14, ca_threads = 1;
  canon->add_option("--in", ca_in)->required();
  canon->add_flag("--cert", ca_cert);
  canon->add_option("--guard", ca_guard);
  canon->add_option("--threads", ca_threads);

  // audit
  auto* audit = app.add_subcommand("audit", "composite partition audit");
  std::string au_in;
  bool au_binary = false, au_json = false, au_no_timing = false;
  int au_n = 0, au_w = 0;
  audit->add_option("--in", au_in)->required();
  audit->add_flag("--binary", au_binary);
  audit->add_option("--n", au_n);
  audit->add_option("--w", au_w);
  audit->add_flag("--json", au_json);
  audit->add_flag("--no-timing", au_no_timing);

  // classify2w
  auto* c2w = app.add_subcommand(
      "classify2w", "per-matrix classification of J(2w,w)");
  int cw_w = 0, cw_threads = 1;
  std::string cw_mode = "auto";
  std::uint64_t cw_nodes = 1'000'000'000;
  double cw_secs = default_budget_secs();
  c2w->add_option("--w", cw_w)->required();
  c2w->add_option("--mode", cw_mode)
      ->check(CLI::IsMember({"auto", "exhaustive", "audit"}));
  c2w->add_option("--budget-nodes", cw_nodes);
  c2w->add_option("--budget-secs", cw_secs);
  c2w->add_option("--threads", cw_threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(sp_n, sp_w, sp_json);
    if (*matrices) return cmd_matrices(ma_n, ma_w, ma_json);
    if (*construct)
      return cmd_construct(co_kind, co_w, co_n, co_i, co_pattern, co_out,
                           co_binary);
    if (*verify)
      return cmd_verify(load_partition(ve_in, ve_binary, ve_n, ve_w), ve_json);
    if (*diff) {
      VertexFunction f{{0, 0}, {}};
      if (di_partition) {
        const TwoPartition p = partition_from_json(read_file(di_in));
        const EquitableResult eq = verify_equitable(p);
        if (!eq.equitable) {
          std::cerr << "diff --partition: input is not equitable\n";
          return kExitCheckFailed;
        }
        f = from_partition(p, eq.matrix);
      } else {
        f = function_from_json(read_file(di_in));
      }
      emit(function_to_json(partial_difference(f, di_j1, di_j2)), di_out);
      return kExitPass;
    }
    if (*classify) {
      const VertexFunction f = function_from_json(read_file(cl_in));
      std::cout << classification_to_json(classify_form(f)) << "\n";
      return kExitPass;
    }
    if (*blocks) {
      VertexFunction f{{0, 0}, {}};
      if (bl_partition) {
        const TwoPartition p = partition_from_json(read_file(bl_in));
        const EquitableResult eq = verify_equitable(p);
        if (!eq.equitable) {
          std::cerr << "blocks --partition: input is not equitable\n";
          return kExitCheckFailed;
        }
        f = from_partition(p, eq.matrix);
      } else {
        f = function_from_json(read_file(bl_in));
      }
      const BlockDecomposition bd = block_decomposition(f);
      json j;
      j["blocks"] = bd.blocks;
      j["sbd"] = bd.sbd();
      std::cout << j.dump() << "\n";
      return kExitPass;
    }
    if (*search)
      return cmd_search(se_n, se_w,
                        se_b >= 0 ? std::optional<std::int64_t>(se_b)
                                  : std::nullopt,
                        se_all, se_nodes, se_secs, se_threads, !se_no_sym,
                        se_antipodal, se_out, !se_no_timing);
    if (*canon) {
      const TwoPartition p = partition_from_json(read_file(ca_in));
      const CanonicalForm cf = canonical_form(p, ca_guard, ca_threads);
      std::cout << cf.membership << "\n";
      if (ca_cert)
        std::cout << "perm " << perm_cycles_one_based(cf.perm) << "\nswap "
                  << (cf.swapped ? "yes" : "no") << "\n";
      return kExitPass;
    }
    if (*audit) {
      const TwoPartition p = load_partition(au_in, au_binary, au_n, au_w);
      std::ostringstream cmdline;
      cmdline << "audit --in " << au_in;
      const RunReport r = audit_partition(p, cmdline.str(), !au_no_timing);
      std::cout << (au_json ? r.to_json() + "\n" : r.to_text());
      return r.all_pass() ? kExitPass : kExitCheckFailed;
    }
    if (*c2w)
      return cmd_classify2w(cw_w, cw_mode, cw_nodes, cw_secs, cw_threads);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
