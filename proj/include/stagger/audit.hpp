#pragma once

// Cross-checks of the O(M) solver against the dense exact oracle over a range
// of grid sizes, and text/JSON renderings of the results.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "stagger/grid.hpp"
#include "stagger/oracle.hpp"

namespace stagger {

inline constexpr std::size_t audit_max_edges = oracle_max_unknowns + 2;

struct AuditRecord {
  SolvabilityReport report;
  BigInt oracle_determinant;
  std::size_t oracle_rank = 0;
  Rational echelon_bottom_right;
  bool echelon_bottom_row_zero = false;
  bool residual_agrees = false;  // echelon last rhs matches expected_last_rhs
  bool solutions_agree = false;  // recurrence and dense solve give the same solution set
  bool pass = false;
};

struct AuditReport {
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::vector<AuditRecord> records;

  std::size_t passed() const {
    std::size_t k = 0;
    for (const auto& r : records) k += r.pass ? 1 : 0;
    return k;
  }
  bool pass() const { return passed() == records.size(); }
};

// True when both outcomes describe the same solution set: same class, equal
// unique solutions or residuals, and for families particulars differing by a
// multiple of the (parallel) kernel vectors.
inline bool same_solution_set(const SolveOutcome<Rational>& a, const SolveOutcome<Rational>& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case OutcomeKind::unique:
      return a.unique().edges == b.unique().edges;
    case OutcomeKind::inconsistent:
      return a.inconsistent().residual == b.inconsistent().residual;
    case OutcomeKind::family: {
      const auto& fa = a.family();
      const auto& fb = b.family();
      const std::size_t m = fa.particular.size();
      if (fb.particular.size() != m) return false;
      const Rational ratio = fb.null_direction[0] / fa.null_direction[0];
      const Rational t = (fb.particular[0] - fa.particular[0]) / fa.null_direction[0];
      for (std::size_t i = 0; i < m; ++i) {
        if (fb.null_direction[i] != ratio * fa.null_direction[i]) return false;
        if (fb.particular[i] - fa.particular[i] != t * fa.null_direction[i]) return false;
      }
      return true;
    }
  }
  return false;
}

namespace detail {

// c_i = i: inconsistent for every even M (alternating sum M/2).
inline CenterField1D<Rational> ramp_probe(std::size_t m) {
  std::vector<Rational> c(m);
  for (std::size_t i = 0; i < m; ++i) c[i] = Rational(static_cast<long long>(i + 1));
  return CenterField1D<Rational>(std::move(c));
}

// Averages of e_i = i^2: consistent for every M.
inline CenterField1D<Rational> square_probe(std::size_t m) {
  std::vector<Rational> e(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto k = static_cast<long long>(i + 1);
    e[i] = Rational(k * k);
  }
  return centers_from_edges(EdgeField1D<Rational>(std::move(e)));
}

}  // namespace detail

// Last echelon rhs entry: 2 S for even M (the consistency residual), and
// 2 (2 c_M - S) = 2 e_M for odd M, where S is the alternating residual.
inline Rational expected_last_rhs(const CenterField1D<Rational>& centers) {
  const Rational s = alternating_residual(centers);
  if (centers.grid().is_odd()) return 2 * (2 * centers[centers.size() - 1] - s);
  return 2 * s;
}

inline AuditRecord audit_grid(const PeriodicStagger1D& grid) {
  AuditRecord rec;
  rec.report = classify(grid);
  const std::size_t m = grid.n_unknowns();

  const DenseSystem matrix_only = build_system(grid);
  rec.oracle_determinant = determinant_exact(matrix_only);
  const EchelonResult ech = row_echelon(matrix_only);
  rec.oracle_rank = ech.rank;
  rec.echelon_bottom_right = ech.at(m - 1, m - 1);
  rec.echelon_bottom_row_zero = true;
  for (std::size_t c = 0; c < m; ++c) rec.echelon_bottom_row_zero &= ech.at(m - 1, c) == 0;

  rec.residual_agrees = true;
  rec.solutions_agree = true;
  for (const auto& probe : {detail::ramp_probe(m), detail::square_probe(m)}) {
    const DenseSystem sys = build_system(probe);
    const EchelonResult probe_ech = row_echelon(sys);
    rec.residual_agrees &= probe_ech.reduced_rhs[m - 1] == expected_last_rhs(probe);
    rec.solutions_agree &= same_solution_set(edges_from_centers(probe), solve_dense(sys));
  }

  const Rational expected_corner = m % 2 == 1 ? 2 : 0;
  rec.pass = rec.oracle_determinant == rec.report.determinant &&
             rec.oracle_rank == rec.report.rank && rec.echelon_bottom_right == expected_corner &&
             rec.echelon_bottom_row_zero == !grid.is_odd() && rec.residual_agrees &&
             rec.solutions_agree;
  return rec;
}

inline AuditReport run_audit(std::size_t n_min, std::size_t n_max) {
  if (n_min < 3 || n_min > n_max || n_max > audit_max_edges) {
    throw std::invalid_argument("audit range must satisfy 3 <= n_min <= n_max <= " +
                                std::to_string(audit_max_edges));
  }
  AuditReport report;
  report.n_min = n_min;
  report.n_max = n_max;
  for (std::size_t n = n_min; n <= n_max; ++n) report.records.push_back(audit_grid(PeriodicStagger1D(n)));
  return report;
}

inline std::string render_classify(const SolvabilityReport& r) {
  std::ostringstream os;
  os << "n_edges: " << r.n_edges << '\n'
     << "n_unknowns: " << r.n_unknowns << '\n'
     << "parity: " << to_string(r.parity) << '\n'
     << "determinant: " << r.determinant << '\n'
     << "rank: " << r.rank << '\n'
     << "outcome_class: " << to_string(r.outcome_class) << '\n';
  return os.str();
}

inline std::string render_text(const AuditReport& report) {
  std::ostringstream os;
  os << "audit N=" << report.n_min << ".." << report.n_max << '\n';
  for (const auto& rec : report.records) {
    const auto& r = rec.report;
    os << "N=" << r.n_edges << " M=" << r.n_unknowns << " parity=" << to_string(r.parity)
       << " det=" << r.determinant << " rank=" << r.rank << " class=" << to_string(r.outcome_class)
       << " | oracle det=" << rec.oracle_determinant << " rank=" << rec.oracle_rank
       << " echelon_corner=" << rec.echelon_bottom_right
       << " bottom_row_zero=" << (rec.echelon_bottom_row_zero ? "yes" : "no")
       << " residual=" << (rec.residual_agrees ? "agree" : "DIFFER")
       << " solutions=" << (rec.solutions_agree ? "agree" : "DIFFER") << " | "
       << (rec.pass ? "PASS" : "FAIL") << '\n';
  }
  os << "records=" << report.records.size() << " passed=" << report.passed()
     << " status=" << (report.pass() ? "PASS" : "FAILED") << '\n';
  return os.str();
}

inline std::string render_structured(const AuditReport& report) {
  nlohmann::ordered_json doc;
  doc["n_min"] = report.n_min;
  doc["n_max"] = report.n_max;
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : report.records) {
    const auto& r = rec.report;
    nlohmann::ordered_json j;
    j["n_edges"] = r.n_edges;
    j["n_unknowns"] = r.n_unknowns;
    j["parity"] = to_string(r.parity);
    j["determinant"] = r.determinant;
    j["rank"] = r.rank;
    j["outcome_class"] = to_string(r.outcome_class);
    j["oracle"] = {{"determinant", rec.oracle_determinant.str()},
                   {"rank", rec.oracle_rank},
                   {"echelon_corner", rec.echelon_bottom_right.str()},
                   {"bottom_row_zero", rec.echelon_bottom_row_zero},
                   {"residual_agrees", rec.residual_agrees},
                   {"solutions_agree", rec.solutions_agree}};
    j["status"] = rec.pass ? "PASS" : "FAIL";
    doc["records"].push_back(std::move(j));
  }
  doc["passed"] = report.passed();
  doc["status"] = report.pass() ? "PASS" : "FAILED";
  return doc.dump(2) + "\n";
}

}  // namespace stagger
