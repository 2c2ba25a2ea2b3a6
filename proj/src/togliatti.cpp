#include "togliatti/togliatti.hpp"

#include <stdexcept>

#include "togliatti/errors.hpp"
#include "togliatti/lefschetz.hpp"

namespace togliatti {

using linalg::IntVector;

std::uint64_t generator_bound(int n, int d) {
  return binomial(static_cast<std::uint64_t>(n + d - 1), static_cast<std::uint64_t>(n - 1));
}

HypersurfaceSpace togliatti_kernel(const MonomialIdeal& ideal) {
  HypersurfaceSpace space;
  space.n = ideal.n();
  space.d = ideal.d();
  space.degree = ideal.d() - 1;
  space.monomials = monomials_of_degree(ideal.num_variables(), space.degree);
  const auto points = inverse_system(ideal);
  space.basis = linalg::kernel_basis(linalg::evaluation_matrix(points.points, space.monomials));
  return space;
}

std::string to_string(TogliattiStatus status) {
  switch (status) {
    case TogliattiStatus::togliatti: return "togliatti";
    case TogliattiStatus::not_togliatti: return "not togliatti";
    case TogliattiStatus::exceeds_generator_bound: return "exceeds generator bound";
  }
  return "unknown";
}

namespace {

bool kernel_verdict_checked(const MonomialIdeal& ideal, std::size_t kernel_dim) {
  const bool by_kernel = kernel_dim > 0;
  const bool by_wlp = fails_wlp_in_degree(ideal, ideal.d() - 1);
  if (by_kernel != by_wlp) {
    throw std::logic_error("kernel and Lefschetz verdicts disagree for " + ideal.to_string());
  }
  return by_kernel;
}

}  // namespace

TogliattiStatus togliatti_status(const MonomialIdeal& ideal) {
  if (ideal.num_generators() > generator_bound(ideal.n(), ideal.d())) {
    return TogliattiStatus::exceeds_generator_bound;
  }
  const auto space = togliatti_kernel(ideal);
  return kernel_verdict_checked(ideal, space.dimension()) ? TogliattiStatus::togliatti
                                                          : TogliattiStatus::not_togliatti;
}

bool is_togliatti(const MonomialIdeal& ideal) { return togliatti_status(ideal) == TogliattiStatus::togliatti; }

mpz_class evaluate_form(const std::vector<Monomial>& monomials, const IntVector& coeffs, const Monomial& point) {
  mpz_class total = 0;
  mpz_class term;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    term = coeffs[k];
    for (std::size_t i = 0; i < point.num_vars(); ++i) {
      const int e = monomials[k][i];
      if (e == 0) continue;
      if (point[i] == 0) {
        term = 0;
        break;
      }
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(point[i]), static_cast<unsigned long>(e));
      term *= p;
    }
    total += term;
  }
  return total;
}

namespace {

TogliattiReport report_from_space(const MonomialIdeal& ideal, const HypersurfaceSpace& space) {
  TogliattiReport report;
  report.satisfies_generator_bound = ideal.num_generators() <= generator_bound(ideal.n(), ideal.d());
  report.kernel_dimension = space.dimension();
  if (!report.satisfies_generator_bound) return report;
  report.is_togliatti = kernel_verdict_checked(ideal, space.dimension());
  if (space.dimension() == 1) report.certificate = space.basis.front();
  if (!report.is_togliatti) return report;

  // Adding p to A_I cuts the kernel down to {v : v(p) = 0}, which stays
  // nonzero iff the basis values at p are all zero or the kernel has
  // dimension at least two.
  for (const auto& p : ideal.extra_generators()) {
    bool all_zero = true;
    for (const auto& v : space.basis) {
      if (sgn(evaluate_form(space.monomials, v, p)) != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero || space.dimension() >= 2) report.blocking_points.push_back(p);
  }
  report.is_minimal = report.blocking_points.empty();
  return report;
}

}  // namespace

TogliattiReport togliatti_report(const MonomialIdeal& ideal) {
  return report_from_space(ideal, togliatti_kernel(ideal));
}

TogliattiReport is_minimal(const MonomialIdeal& ideal) {
  auto report = togliatti_report(ideal);
  if (!report.is_togliatti) throw StateError("minimality requires a Togliatti system: " + ideal.to_string());
  return report;
}

bool minimality_oracle(const MonomialIdeal& ideal) {
  if (ideal.num_generators() > 16) throw GuardError("minimality oracle limited to 16 generators");
  if (!is_togliatti(ideal)) throw StateError("minimality requires a Togliatti system: " + ideal.to_string());
  for (const auto& g : ideal.extra_generators()) {
    if (is_togliatti(ideal.without(g))) return false;
  }
  return true;
}

IntVector certificate_polynomial(const MonomialIdeal& ideal) {
  auto space = togliatti_kernel(ideal);
  if (space.dimension() != 1) {
    throw StateError("certificate requires a one-dimensional kernel, found dimension " +
                     std::to_string(space.dimension()));
  }
  return space.basis.front();
}

std::string polynomial_text(const std::vector<Monomial>& monomials, const IntVector& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    mpz_class c = coeffs[k];
    if (sgn(c) < 0) {
      out += '-';
      c = -c;
    } else if (!out.empty()) {
      out += '+';
    }
    const bool unit_monomial = monomials[k].degree() == 0;
    if (c != 1 || unit_monomial) {
      out += c.get_str();
      if (!unit_monomial) out += '*';
    }
    if (!unit_monomial) out += monomials[k].to_string();
  }
  return out.empty() ? "0" : out;
}

namespace {

nlohmann::json exponents_json(const Monomial& m) {
  return std::vector<int>(m.exponents().begin(), m.exponents().end());
}

nlohmann::json vector_json(const IntVector& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) out.push_back(x.get_si());
    else out.push_back(x.get_str());
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const TogliattiReport& report, const HypersurfaceSpace& space) {
  nlohmann::json j;
  j["satisfies_generator_bound"] = report.satisfies_generator_bound;
  j["is_togliatti"] = report.is_togliatti;
  j["kernel_dimension"] = report.kernel_dimension;
  j["is_minimal"] = report.is_minimal;
  auto blocking = nlohmann::json::array();
  for (const auto& p : report.blocking_points) blocking.push_back(exponents_json(p));
  j["blocking_points"] = blocking;
  if (report.certificate) {
    j["certificate"] = {{"coefficients", vector_json(*report.certificate)},
                        {"polynomial", polynomial_text(space.monomials, *report.certificate)}};
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

}  // namespace togliatti
