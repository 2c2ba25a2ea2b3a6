#pragma once

// Weak Lefschetz checks for R/I with L = x0 + ... + xn. For monomial ideals
// this particular L is a Lefschetz element whenever one exists, so the
// verdicts below are exact, not generic-sample heuristics.

#include <optional>
#include <vector>

#include <json.hpp>

#include "togliatti/exact_linalg.hpp"
#include "togliatti/monomial.hpp"

namespace togliatti {

struct DegreeRecord {
  int j = 0;
  std::size_t dim_source = 0;
  std::size_t dim_target = 0;
  std::size_t rank = 0;
  bool maximal = true;
};

struct WlpReport {
  std::vector<DegreeRecord> degrees;
  std::vector<int> failing_degrees;
  bool has_wlp = true;
};

/// Monomials of degree j outside I, descending.
std::vector<Monomial> quotient_basis(const MonomialIdeal& ideal, int j);

/// Matrix of x(x0+...+xn): (R/I)_j -> (R/I)_{j+1}. Rows index the target
/// basis, columns the source basis.
linalg::IntMatrix multiplication_matrix(const MonomialIdeal& ideal, int j);

DegreeRecord degree_record(const MonomialIdeal& ideal, int j);

/// Scans j = 0 .. top socle degree - 1, where the top degree is at most
/// (n+1)(d-1).
WlpReport wlp_report(const MonomialIdeal& ideal);

bool fails_wlp_in_degree(const MonomialIdeal& ideal, int j);

/// Substitutes x0 = -(x1+...+xn) into every generator and returns a
/// primitive integer dependence among the restricted forms, if any.
std::optional<linalg::IntVector> hyperplane_dependence(const MonomialIdeal& ideal);

nlohmann::json to_json(const WlpReport& report);

}  // namespace togliatti
