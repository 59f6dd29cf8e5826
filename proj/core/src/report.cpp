#include "jeqp/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "jeqp/canon.hpp"
#include "jeqp/eigenfn.hpp"
#include "jeqp/search.hpp"

namespace jeqp {

using nlohmann::json;

bool RunReport::all_pass() const {
  for (const auto& c : checks)
    if (c.applicable && !c.pass) return false;
  return true;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "jeqp " << version << " — " << command << "\n";
  if (!info.empty()) os << "  note: " << info << "\n";
  for (const auto& c : checks) {
    os << "  " << c.name;
    for (std::size_t i = c.name.size(); i < 27; ++i) os << ' ';
    os << (c.applicable ? (c.pass ? "PASS" : "FAIL") : "SKIP");
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << "RESULT: " << (all_pass() ? "PASS" : "FAIL");
  if (with_timing) os << "  (" << wall_secs << " s)";
  os << "\n";
  return os.str();
}

std::string RunReport::to_json() const {
  json j;
  j["command"] = command;
  j["version"] = version;
  if (!info.empty()) j["note"] = info;
  j["checks"] = json::array();
  for (const auto& c : checks) {
    json row;
    row["name"] = c.name;
    row["applicable"] = c.applicable;
    if (c.applicable) row["pass"] = c.pass;
    if (!c.detail.empty()) row["detail"] = c.detail;
    j["checks"].push_back(row);
  }
  j["pass"] = all_pass();
  if (with_timing) j["wall_secs"] = wall_secs;
  return j.dump();
}

RunReport audit_partition(const TwoPartition& p, const std::string& command,
                          bool with_timing) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = command;
  report.with_timing = with_timing;

  const int n = p.params.n, w = p.params.w;
  const EquitableResult eq = verify_equitable(p);
  {
    CheckRow row{"equitable", true, eq.equitable, ""};
    if (eq.equitable)
      row.detail = "matrix " + eq.matrix.str();
    else
      row.detail = "witness vertex " +
                   format_vertex_bits(JohnsonGraph(p.params).unrank(eq.witness),
                                      n) +
                   " (rank " + std::to_string(eq.witness) + ")";
    report.checks.push_back(row);
  }
  if (!eq.equitable) {
    report.wall_secs = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return report;
  }

  const std::int64_t second = eq.matrix.a - eq.matrix.c;
  const bool is_lambda2 = w >= 2 && second == eigenvalue(p.params, 2);
  if (!is_lambda2)
    report.info = "not a lambda_2 partition (second quotient eigenvalue " +
                  std::to_string(second) + ")";

  const bool half = n == 2 * w;

  {
    CheckRow row{"antipodal", is_lambda2 && half, false, ""};
    if (row.applicable) {
      const AntipodalResult ar = antipodal_closed(p);
      row.pass = ar.closed;
      if (!ar.closed)
        row.detail = "witness rank " + std::to_string(ar.witness);
    } else {
      row.detail = half ? "needs a lambda_2 partition" : "needs n = 2w";
    }
    report.checks.push_back(row);
  }

  {
    // Every partial difference of b*chi1 - c*chi2 must be a
    // lambda_1(n-2,w-1)-eigenfunction or zero.
    CheckRow row{"difference_eigenfunctions", is_lambda2 && w >= 2 && n >= w + 2,
                 false, ""};
    if (row.applicable) {
      const VertexFunction f = from_partition(p, eq.matrix);
      const std::int64_t l1 = eigenvalue({n - 2, w - 1}, 1);
      bool ok = true;
      int checked = 0;
      for (int i = 1; i <= n && ok; ++i)
        for (int j = i + 1; j <= n && ok; ++j) {
          const EigenCheck ec = is_eigenfunction(partial_difference(f, i, j), l1);
          ok = ec.status != EigenStatus::NotEigenfunction;
          ++checked;
        }
      row.pass = ok;
      row.detail = std::to_string(checked) + " differences";
    }
    report.checks.push_back(row);
  }

  {
    CheckRow row{"cross_edge_identity", true, false, ""};
    const CrossEdgeAudit audit = cross_edge_audit(p);
    row.pass = audit.equal;
    row.detail = "cross edges " + audit.lhs.str() + ", support sum " +
                 std::to_string(audit.rhs);
    report.checks.push_back(row);
  }

  {
    CheckRow row{"difference_census", is_lambda2 && half && w >= 2, false, ""};
    if (row.applicable) {
      const DiffCensus census = difference_census(p);
      if (census.status == CensusStatus::F3Route) {
        row.pass = true;
        row.detail = "F3-type difference: covered by the F3 class check";
      } else {
        row.pass = census.counts_complete && census.counting_identity_holds;
        row.detail = "k0=" + std::to_string(census.k0) +
                     " k1=" + std::to_string(census.k1) +
                     " k2=" + std::to_string(census.k2);
      }
    }
    report.checks.push_back(row);
  }

  {
    CheckRow row{"f3_classes", is_lambda2 && half && w >= 4, false, ""};
    if (row.applicable)
      row.pass = f3_class_check(p);
    else if (is_lambda2 && half)
      row.detail = "needs w >= 4";
    report.checks.push_back(row);
  }

  {
    CheckRow row{"large_blocks", is_lambda2 && half && w >= 5, false, ""};
    if (row.applicable)
      row.pass = large_block_check(p);
    else if (is_lambda2 && half)
      row.detail = "needs w >= 5";
    report.checks.push_back(row);
  }

  report.wall_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::vector<std::pair<int, std::int64_t>> spectrum_table(const GraphParams& p) {
  validate_params(p);
  std::vector<std::pair<int, std::int64_t>> rows;
  rows.reserve(static_cast<std::size_t>(p.w) + 1);
  for (int i = 0; i <= p.w; ++i) rows.emplace_back(i, eigenvalue(p, i));
  return rows;
}

}  // namespace jeqp
