#include "CLI11.hpp"
#include "json.hpp"

#include "tansec/moments.hpp"
#include "tansec/series_check.hpp"
#include "tansec/sturm.hpp"
#include "tansec/triangles.hpp"
#include "tansec/verify.hpp"
#include "tansec/yz_poly.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace tansec;

Family family_or_throw(const std::string& name) {
  std::optional<Family> f = family_from_name(name);
  if (!f) throw std::invalid_argument("unknown family: " + name);
  return *f;
}

FaultSpec parse_fault(const std::string& text) {
  auto c1 = text.find(':');
  auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("fault spec must look like FAMILY:n:k");
  FaultSpec f;
  f.family = family_or_throw(text.substr(0, c1));
  f.n = std::stoi(text.substr(c1 + 1, c2 - c1 - 1));
  f.k = std::stoi(text.substr(c2 + 1));
  return f;
}

int run_verify(const std::string& suite, int max_n, const std::string& fault_text) {
  VerifyOptions opts;
  opts.max_n = max_n;
  if (!fault_text.empty()) opts.fault = parse_fault(fault_text);
  VerifyTotals totals = run_suite(suite, opts, [](const CheckResult& res) {
    nlohmann::json j;
    j["check"] = res.check;
    j["family"] = res.family;
    if (res.n >= 0)
      j["n"] = res.n;
    else
      j["n"] = nullptr;
    j["status"] = check_status_name(res.status);
    j["detail"] = res.detail;
    std::cout << j.dump() << "\n";
  });
  std::cerr << "suite " << suite << ": " << totals.passed << " passed, " << totals.failed
            << " failed, " << totals.skipped << " skipped\n";
  return totals.ok() ? 0 : 1;
}

std::vector<TriangleRow> collect_rows(const std::string& family, int rows) {
  if (rows < 1) throw std::invalid_argument("rows must be >= 1");
  if (family == "J") {
    std::vector<TriangleRow> out;
    out.reserve(static_cast<std::size_t>(rows));
    for (int n = 1; n <= rows; ++n) out.push_back(interleave_J(n));
    return out;
  }
  return generate_triangle(named_spec(family_or_throw(family)), rows);
}

int run_triangle(const std::string& family, int rows, const std::string& format) {
  std::vector<TriangleRow> table = collect_rows(family, rows);
  if (format == "csv") {
    for (const TriangleRow& row : table) {
      for (std::size_t i = 0; i < row.entries.size(); ++i)
        std::cout << (i ? "," : "") << row.entries[i].str();
      std::cout << "\n";
    }
  } else if (format == "json") {
    nlohmann::json doc;
    doc["family"] = family;
    doc["rows"] = nlohmann::json::array();
    for (const TriangleRow& row : table) {
      nlohmann::json jr;
      jr["n"] = row.n;
      jr["k_min"] = row.k_offset;
      jr["entries"] = nlohmann::json::array();
      for (const BigInt& e : row.entries) jr["entries"].push_back(e.str());
      doc["rows"].push_back(std::move(jr));
    }
    std::cout << doc.dump(2) << "\n";
  } else if (format == "oeis") {
    for (const TriangleRow& row : table)
      for (const BigInt& e : row.entries) std::cout << e.str() << "\n";
  } else {
    throw std::invalid_argument("unknown format: " + format);
  }
  return 0;
}

int run_poly(const std::string& name, int n) {
  if (name == "P") {
    std::cout << derivative_poly_p(n).str("u") << "\n";
  } else if (name == "Q") {
    std::cout << derivative_poly_q(n).str("u") << "\n";
  } else if (name == "F") {
    std::cout << f_big_recurrence(n).str("y") << "\n";
  } else if (name == "J") {
    std::cout << j_poly(n).str("x") << "\n";
  } else if (name == "W") {
    std::cout << family_poly(Family::LittleA, n).str("x") << "\n";
  } else {
    Family f = family_or_throw(name);
    std::cout << family_poly(f, n).str(family_variable(f)) << "\n";
  }
  return 0;
}

int run_series(const std::string& kind, int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  std::size_t ord = static_cast<std::size_t>(order);
  if (kind == "tan") {
    std::cout << tan_sec_series(ord).tan.str("t") << "\n";
  } else if (kind == "sec") {
    std::cout << tan_sec_series(ord).sec.str("t") << "\n";
  } else if (kind == "eulerian") {
    TruncSeries s = eulerian_egf_series(ord);
    for (std::size_t n = 0; n <= ord; ++n)
      std::cout << n << ": " << s.egf_coeff(n).str("x") << "\n";
  } else {
    throw std::invalid_argument("unknown series: " + kind);
  }
  return 0;
}

int run_roots(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  UniPoly p = family_poly(Family::N, n);
  SturmChain chain = sturm_chain(p);
  std::vector<RootInterval> roots = isolate_real_roots(p);
  Rational width = make_rational(1, 1024);
  std::cout << roots.size() << " real roots, intervals (lo, hi]:\n";
  for (RootInterval iv : roots) {
    iv = refine_interval(chain, iv, width);
    std::cout << "(" << rational_str(iv.lo) << ", " << rational_str(iv.hi) << "]\n";
  }
  return 0;
}

int run_stats(int max_n) {
  if (max_n < 1) throw std::invalid_argument("max-n must be >= 1");
  for (int n = 1; n <= max_n; ++n) {
    MomentReport m = moment_stats(Family::N, n);
    std::cout << "n=" << n << " total=" << m.total.str() << " mean=" << rational_str(m.mean)
              << " variance=" << rational_str(m.variance) << " modes=";
    for (std::size_t i = 0; i < m.mode_indices.size(); ++i)
      std::cout << (i ? "," : "") << m.mode_indices[i];
    std::cout << "\n";
  }
  return 0;
}

int run_clt(const std::vector<int>& ns) {
  std::cout.precision(6);
  for (int n : ns) {
    CltPoint p = clt_report(n);
    std::cout << "n=" << p.n << " mu=" << p.mu << " sigma=" << p.sigma
              << " sup_gap=" << p.sup_gap << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checker for the tangent/secant derivative-polynomial families"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run a verification suite (JSONL on stdout)");
  std::string suite = "all";
  int max_n = 0;
  std::string fault_text;
  verify->add_option("--suite", suite, "one of: all algebra triangles oracle operator series analytic");
  verify->add_option("--max-n", max_n, "clamp per-check bounds; 0 keeps defaults")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--inject-fault", fault_text, "perturb one triangle entry, FAMILY:n:k");

  auto* triangle = app.add_subcommand("triangle", "Print rows of a triangle family");
  std::string tri_family;
  int tri_rows = 10;
  std::string tri_format = "csv";
  triangle->add_option("family", tri_family, "A B S E H J a G f M N R T")->required();
  triangle->add_option("--rows", tri_rows, "number of rows, starting at the family's first");
  triangle->add_option("--format", tri_format, "csv, json or oeis");

  auto* poly = app.add_subcommand("poly", "Print one row polynomial");
  std::string poly_family;
  int poly_n = 0;
  poly->add_option("family", poly_family, "family id, plus P Q F W J")->required();
  poly->add_option("n", poly_n, "row index")->required()->check(CLI::NonNegativeNumber);

  auto* series = app.add_subcommand("series", "Print a truncated series");
  std::string series_kind;
  int series_order = 16;
  series->add_option("kind", series_kind, "tan, sec or eulerian")->required();
  series->add_option("--order", series_order, "truncation order");

  auto* roots = app.add_subcommand("roots", "Isolate the real roots of N_n");
  int roots_n = 0;
  roots->add_option("n", roots_n, "row index")->required();

  auto* stats = app.add_subcommand("stats", "Exact moments and modes of the N rows");
  int stats_max_n = 12;
  stats->add_option("--max-n", stats_max_n, "largest row");

  auto* clt = app.add_subcommand("clt", "Normal-approximation sup-CDF distances for N rows");
  std::vector<int> clt_ns = {10, 20, 40};
  clt->add_option("--ns", clt_ns, "row indices")->delimiter(',');

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return run_verify(suite, max_n, fault_text);
    if (triangle->parsed()) return run_triangle(tri_family, tri_rows, tri_format);
    if (poly->parsed()) return run_poly(poly_family, poly_n);
    if (series->parsed()) return run_series(series_kind, series_order);
    if (roots->parsed()) return run_roots(roots_n);
    if (stats->parsed()) return run_stats(stats_max_n);
    if (clt->parsed()) return run_clt(clt_ns);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
