#include "togliatti/lefschetz.hpp"

#include <algorithm>
#include <unordered_map>

#include "togliatti/errors.hpp"

namespace togliatti {

using linalg::IntMatrix;
using linalg::IntVector;

std::vector<Monomial> quotient_basis(const MonomialIdeal& ideal, int j) {
  if (j < 0) throw InputError(InputErrorKind::invalid_argument, "degree must be >= 0");
  auto all = monomials_of_degree(ideal.num_variables(), j);
  if (j < ideal.d()) return all;
  std::vector<Monomial> out;
  for (auto& m : all) {
    const bool in_ideal = std::any_of(ideal.generators().begin(), ideal.generators().end(),
                                      [&m](const Monomial& g) { return g.divides(m); });
    if (!in_ideal) out.push_back(std::move(m));
  }
  return out;
}

IntMatrix multiplication_matrix(const MonomialIdeal& ideal, int j) {
  const auto source = quotient_basis(ideal, j);
  const auto target = quotient_basis(ideal, j + 1);
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t i = 0; i < target.size(); ++i) row_of.emplace(target[i], i);
  IntMatrix m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    for (std::size_t v = 0; v < ideal.num_variables(); ++v) {
      auto it = row_of.find(source[c].times_variable(v));
      if (it != row_of.end()) m(it->second, c) = 1;
    }
  }
  return m;
}

DegreeRecord degree_record(const MonomialIdeal& ideal, int j) {
  auto m = multiplication_matrix(ideal, j);
  DegreeRecord rec;
  rec.j = j;
  rec.dim_source = m.cols();
  rec.dim_target = m.rows();
  rec.rank = linalg::rank(m);
  rec.maximal = rec.rank == std::min(rec.dim_source, rec.dim_target);
  return rec;
}

WlpReport wlp_report(const MonomialIdeal& ideal) {
  WlpReport report;
  const int top = static_cast<int>(ideal.num_variables()) * (ideal.d() - 1);
  for (int j = 0; j < top; ++j) {
    auto rec = degree_record(ideal, j);
    if (rec.dim_target == 0) break;
    if (!rec.maximal) report.failing_degrees.push_back(j);
    report.degrees.push_back(rec);
  }
  report.has_wlp = report.failing_degrees.empty();
  return report;
}

bool fails_wlp_in_degree(const MonomialIdeal& ideal, int j) { return !degree_record(ideal, j).maximal; }

namespace {

// Coefficients of (x1+...+xn)^a as a map over exponent vectors in n variables.
std::vector<std::pair<std::vector<int>, mpz_class>> power_of_sum(std::size_t n, int a) {
  std::vector<std::pair<std::vector<int>, mpz_class>> out;
  mpz_class fact_a;
  mpz_fac_ui(fact_a.get_mpz_t(), static_cast<unsigned long>(a));
  for (const auto& m : monomials_of_degree(n, a)) {
    mpz_class coeff = fact_a;
    for (int e : m.exponents()) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
      coeff /= f;
    }
    out.emplace_back(std::vector<int>(m.exponents().begin(), m.exponents().end()), coeff);
  }
  return out;
}

}  // namespace

std::optional<IntVector> hyperplane_dependence(const MonomialIdeal& ideal) {
  const std::size_t n = static_cast<std::size_t>(ideal.n());
  const auto targets = monomials_of_degree(n, ideal.d());
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t i = 0; i < targets.size(); ++i) row_of.emplace(targets[i], i);

  const auto& gens = ideal.generators();
  IntMatrix m(targets.size(), gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c) {
    const int a = gens[c][0];
    const mpz_class sign = (a % 2 == 0) ? 1 : -1;
    for (const auto& [exps, coeff] : power_of_sum(n, a)) {
      std::vector<int> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = exps[i] + gens[c][i + 1];
      m(row_of.at(Monomial(std::move(e))), c) += sign * coeff;
    }
  }
  auto ker = linalg::kernel_basis(m);
  if (ker.empty()) return std::nullopt;
  return ker.front();
}

nlohmann::json to_json(const WlpReport& report) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& r : report.degrees) {
    degrees.push_back({{"j", r.j},
                       {"rank", r.rank},
                       {"dim_source", r.dim_source},
                       {"dim_target", r.dim_target},
                       {"maximal", r.maximal}});
  }
  return {{"has_wlp", report.has_wlp}, {"failing_degrees", report.failing_degrees}, {"degrees", degrees}};
}

}  // namespace togliatti
