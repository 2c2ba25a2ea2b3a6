#pragma once

// Exponent-vector monomials, single-degree artinian monomial ideals and
// their degree-d inverse systems viewed as lattice points of the dilated
// simplex.
//
// Ordering convention: graded lexicographic with x0 > x1 > ... > xn.
// Generator and point lists are always kept in descending order, so the
// pure power x0^d comes first.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace togliatti {

using Permutation = std::vector<std::size_t>;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial pure_power(std::size_t num_vars, std::size_t var, int degree);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  int degree() const noexcept { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;
  bool is_pure_power() const;
  /// Number of variables with a positive exponent.
  std::size_t support_size() const;

  Monomial times_variable(std::size_t var) const;
  Monomial gcd(const Monomial& other) const;
  /// Renames x_i to x_perm[i].
  Monomial permuted(std::span<const std::size_t> perm) const;

  /// "x0^3*x1*x2"; the unit monomial prints as "1".
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of the given degree in num_vars variables, descending.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree);

/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All permutations of {0..k-1} in lexicographic order (identity first).
std::vector<Permutation> all_permutations(std::size_t k);

/// A set of degree-d lattice points of the simplex d*Delta_n.
struct LatticePointSet {
  int n = 0;
  int d = 0;
  std::vector<Monomial> points;  // descending, distinct

  std::size_t size() const noexcept { return points.size(); }
  bool contains(const Monomial& m) const;
};

/// Artinian monomial ideal generated in a single degree d >= 2 that
/// contains every pure power x_i^d. Immutable value type.
class MonomialIdeal {
 public:
  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  std::size_t num_variables() const noexcept { return static_cast<std::size_t>(n_) + 1; }
  std::size_t num_generators() const noexcept { return gens_.size(); }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }

  bool has_generator(const Monomial& m) const;
  /// Generators other than the pure powers, descending.
  std::vector<Monomial> extra_generators() const;

  MonomialIdeal permuted(std::span<const std::size_t> perm) const;
  /// Removes one non-pure-power generator.
  MonomialIdeal without(const Monomial& generator) const;
  /// Comma separated inline form, e.g. "x0^3,x1^3,x2^3,x0*x1*x2".
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal make_ideal(int n, int d, std::vector<Monomial> generators);
  MonomialIdeal(int n, int d, std::vector<Monomial> gens)
      : n_(n), d_(d), gens_(std::move(gens)) {}

  int n_ = 0;
  int d_ = 0;
  std::vector<Monomial> gens_;
};

/// Deterministic output order for ideals of equal shape: lexicographically
/// larger (descending) generator lists first.
struct IdealOrder {
  bool operator()(const MonomialIdeal& a, const MonomialIdeal& b) const;
};

std::vector<Monomial> simplex_points_list(int n, int d);
LatticePointSet simplex_points(int n, int d);

/// Validates and builds an ideal. Throws InputError with kind malformed,
/// inhomogeneous, duplicate or not_artinian.
MonomialIdeal make_ideal(int n, int d, const std::vector<std::vector<int>>& generators);
MonomialIdeal make_ideal(int n, int d, std::vector<Monomial> generators);

/// Degree-d monomials not in I.
LatticePointSet inverse_system(const MonomialIdeal& ideal);

/// Representative of the S_{n+1}-orbit of I: the coordinate permutation whose
/// descending generator list is lexicographically largest.
MonomialIdeal canonical_form(const MonomialIdeal& ideal);

/// A degree-(d-1) monomial F with x_i*F a generator for every i, if any.
/// The largest such F is returned.
std::optional<Monomial> is_trivial(const MonomialIdeal& ideal);

/// Smallest variable index dividing every non-pure-power generator.
std::optional<std::size_t> is_trivial_type_b(const MonomialIdeal& ideal);

/// (x0,...,xn)*m + (x0^d,...,xn^d) with d = deg(m) + 1.
MonomialIdeal trivial_system(int n, const Monomial& m);

}  // namespace togliatti
