#pragma once

// Togliatti detection through degree-(d-1) hypersurfaces containing the
// inverse-system points A_I, minimality by single-point augmentation, and
// certificate extraction.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "togliatti/exact_linalg.hpp"
#include "togliatti/monomial.hpp"

namespace togliatti {

struct HypersurfaceSpace {
  int n = 0;
  int d = 0;
  int degree = 0;                       // d - 1
  std::vector<Monomial> monomials;      // degree-(d-1) monomials, descending
  std::vector<linalg::IntVector> basis;  // coprime integer coefficient vectors

  std::size_t dimension() const noexcept { return basis.size(); }
};

/// C(n+d-1, n-1), the largest r for which failing WLP in degree d-1 is
/// equivalent to a Laplace equation.
std::uint64_t generator_bound(int n, int d);

HypersurfaceSpace togliatti_kernel(const MonomialIdeal& ideal);

enum class TogliattiStatus { togliatti, not_togliatti, exceeds_generator_bound };

std::string to_string(TogliattiStatus status);

/// Decides via the kernel and cross-checks against the Lefschetz map in
/// degree d-1; throws std::logic_error if the two disagree.
TogliattiStatus togliatti_status(const MonomialIdeal& ideal);
bool is_togliatti(const MonomialIdeal& ideal);

struct TogliattiReport {
  bool satisfies_generator_bound = false;
  bool is_togliatti = false;
  std::size_t kernel_dimension = 0;
  bool is_minimal = false;
  std::vector<Monomial> blocking_points;
  std::optional<linalg::IntVector> certificate;
};

/// Full report; never throws for non-Togliatti input (is_minimal is false).
TogliattiReport togliatti_report(const MonomialIdeal& ideal);

/// Requires a Togliatti ideal (StateError otherwise). A non-vertex point p
/// outside A_I blocks minimality when some nonzero certificate also vanishes
/// at p.
TogliattiReport is_minimal(const MonomialIdeal& ideal);

/// Deletes each non-pure-power generator in turn and re-tests. Refuses
/// (GuardError) above 16 generators.
bool minimality_oracle(const MonomialIdeal& ideal);

/// The unique primitive certificate; StateError unless the kernel is
/// one-dimensional.
linalg::IntVector certificate_polynomial(const MonomialIdeal& ideal);

mpz_class evaluate_form(const std::vector<Monomial>& monomials, const linalg::IntVector& coeffs,
                        const Monomial& point);

/// "2*x0^2+4*x0*x1-5*x0*x2"; zero terms skipped.
std::string polynomial_text(const std::vector<Monomial>& monomials, const linalg::IntVector& coeffs);

nlohmann::json to_json(const TogliattiReport& report, const HypersurfaceSpace& space);

}  // namespace togliatti
