#pragma once

// Slope (semi)stability of the syzygy bundle of a monomial ideal through
// Brenner's subset criterion: E is semistable (stable) iff for every proper
// subset J of s >= 2 generators whose gcd has degree d_J,
//   (d_J - sum_{j in J} d_j) / (s-1) <= (resp. <) -sum_i d_i / (r-1).
// For generators of a single degree d this is (d - d_J) r + d_J - s d >= 0
// (resp. > 0).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "togliatti/monomial.hpp"

namespace togliatti {

enum class StabilityVerdict { stable, properly_semistable, unstable };

std::string to_string(StabilityVerdict v);

struct SubsetWitness {
  std::vector<Monomial> subset;  // descending
  std::size_t s = 0;
  int d_J = 0;
  mpq_class value;
};

struct StabilityReport {
  mpq_class slope;
  StabilityVerdict verdict = StabilityVerdict::stable;
  /// Subset with the smallest value (first in scan order on ties).
  std::optional<SubsetWitness> witness;
  /// First subset reaching value 0, for properly semistable verdicts.
  std::optional<SubsetWitness> equality_witness;
};

/// Degree of the gcd of J. Throws InputError for empty J.
int gcd_degree(std::span<const Monomial> J);

/// (d - d_J) r + d_J - s d. J must be a subset of the generators with
/// |J| >= 2 (InputError otherwise).
mpq_class subset_value(const MonomialIdeal& ideal, std::span<const Monomial> J);

/// -sum(degrees) / (r - 1); r >= 2.
mpq_class slope_of_degrees(std::span<const int> degrees);
mpq_class slope(std::size_t r, int d);
mpq_class slope(const MonomialIdeal& ideal);

/// (d_J - sum(subset_degrees)) / (s - 1), the slope of the subsheaf of
/// syzygies among the generators in J.
mpq_class subsheaf_slope(std::span<const int> subset_degrees, int d_J);

/// slope(E) - slope(F) for arbitrary generator degrees; positive for every
/// J iff stable.
mpq_class brenner_margin(std::span<const int> all_degrees, std::span<const int> subset_degrees, int d_J);

/// Scans the subsets S_g of generators divisible by g for every monomial g
/// of degree 1..d-1, plus one subset of size r-1: for fixed gcd the value
/// drops as J grows, so these dominate every other subset. Requires r >= 3.
StabilityReport stability_class(const MonomialIdeal& ideal);

/// Every proper subset with at least two elements. Requires 3 <= r <= 14.
StabilityReport stability_oracle(const MonomialIdeal& ideal);

nlohmann::json to_json(const StabilityReport& report);

}  // namespace togliatti
