#pragma once

// Orbit-pruned enumeration of single-degree artinian monomial ideals,
// per-(n, d, mu) survey tables, the mu/rho bounds, named families and the
// reproduction targets.
//
// Candidates are the pure powers plus `extra` further degree-d monomials.
// The non-vertex points of dΔ_n are indexed in descending order and a
// candidate is a strictly increasing index vector. The orbit representative
// is the lexicographically smallest index vector among all coordinate
// permutations, which is exactly canonical_form() of the ideal. Being
// smallest is inherited by prefixes, so the search backtracks as soon as a
// prefix is not minimal.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "togliatti/monomial.hpp"
#include "togliatti/togliatti.hpp"

namespace togliatti {

enum class Filter { togliatti, minimal, smooth, trivial, nontrivial };

std::string to_string(Filter f);
/// "minimal,smooth" -> {minimal, smooth}. InputError on unknown names.
std::vector<Filter> parse_filters(std::string_view text);
/// minimal and smooth imply togliatti; smooth alone tests only the polytope.
bool passes_filters(const MonomialIdeal& ideal, const std::vector<Filter>& filters);

struct EnumerationOptions {
  std::vector<Filter> filters;
  bool up_to_symmetry = true;
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
};

/// C(C(n+d,n) - (n+1), extra), saturating at UINT64_MAX.
std::uint64_t raw_subset_count(int n, int d, int extra);

/// Degree-d monomials other than the pure powers, descending.
std::vector<Monomial> non_vertex_points(int n, int d);

/// Ideals in deterministic order (ascending index vectors, i.e. descending
/// generator lists), independent of the thread count. Throws BudgetError
/// when raw_subset_count exceeds the budget.
std::vector<MonomialIdeal> enumerate(int n, int d, int extra, const EnumerationOptions& options);

/// Runs fn(i) for i in [0, count) on a small pool; fn must only write to
/// slot i of its own output.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

unsigned default_threads();

// ---------------------------------------------------------------------------
// Census: every orbit of one (n, d, extra) with its classification and the
// oracle agreement counts gathered along the way.

struct OrbitRecord {
  MonomialIdeal ideal;
  TogliattiStatus status = TogliattiStatus::not_togliatti;
  bool minimal = false;
  bool smooth = false;  // only computed for minimal systems
  bool trivial = false;
  bool trivial_type_b = false;
};

struct OracleTally {
  std::uint64_t three_way_checked = 0;
  std::uint64_t three_way_agree = 0;
  std::uint64_t minimality_checked = 0;
  std::uint64_t minimality_agree = 0;
  std::uint64_t stability_checked = 0;
  std::uint64_t stability_agree = 0;
  bool all_agree() const {
    return three_way_checked == three_way_agree && minimality_checked == minimality_agree &&
           stability_checked == stability_agree;
  }
};

struct Census {
  int n = 0;
  int d = 0;
  int extra = 0;
  std::uint64_t raw_subsets = 0;
  std::vector<OrbitRecord> orbits;
  OracleTally tally;

  std::vector<const OrbitRecord*> minimal() const;
  std::vector<const OrbitRecord*> minimal_smooth() const;
};

/// Classifies every orbit. For each ideal within the generator bound the
/// kernel, Lefschetz and hyperplane-restriction verdicts are compared; each
/// Togliatti ideal with r <= 16 has is_minimal compared to the deletion
/// oracle; every ideal with 3 <= r <= 14 has stability_class compared to
/// the subset oracle. Results are memoized per process.
const Census& census(int n, int d, int extra, unsigned threads = default_threads(),
                     std::uint64_t budget = 10'000'000);

// ---------------------------------------------------------------------------

struct SurveyRow {
  int n = 0;
  int d = 0;
  int mu = 0;
  std::uint64_t raw_subsets = 0;
  std::uint64_t total = 0;
  std::uint64_t togliatti = 0;
  std::uint64_t minimal = 0;
  std::uint64_t minimal_smooth = 0;
  std::uint64_t trivial = 0;          // among minimal
  std::uint64_t trivial_type_b = 0;   // among minimal
  std::vector<MonomialIdeal> minimal_representatives;
  std::vector<MonomialIdeal> minimal_smooth_representatives;
};

SurveyRow survey(int n, int d, int mu, const EnumerationOptions& options);
std::string survey_csv_header();
std::string to_csv(const SurveyRow& row);
nlohmann::json to_json(const SurveyRow& row);

// ---------------------------------------------------------------------------

struct BoundEntry {
  std::optional<std::uint64_t> value;
  bool paper_asserted = false;
  bool verified = false;
  bool empty = false;  // the underlying set of systems is empty
  std::string note;
};

struct MuBounds {
  int n = 0;
  int d = 0;
  std::uint64_t generator_bound = 0;
  BoundEntry mu, mu_s, rho, rho_s;
};

/// Known closed forms, flagged paper-asserted. With a positive budget the
/// values reachable by enumeration within it are confirmed and flagged
/// verified (or reported in the note when enumeration disagrees).
MuBounds mu_bounds(int n, int d, std::uint64_t verify_budget = 0);
nlohmann::json to_json(const MuBounds& bounds);

/// d = 2, n >= 3: the lambda formula for the smallest smooth minimal system.
/// d = 3, n >= 4: minimum over partitions n+1 = a_1+...+a_s with
/// 1 <= a_i <= n-1 of sum C(a_i+2,3) + sum_{i<j<k} a_i a_j a_k.
/// InputError otherwise.
std::uint64_t closed_form_mu_s(int n, int d);

// ---------------------------------------------------------------------------

struct FamilyParams {
  int n = 0;
  int d = 0;
  int r = 0;
  int h = 0;
  std::vector<int> m;  // exponent vector, family dependent
};

struct FamilyMember {
  MonomialIdeal ideal;
  std::optional<bool> togliatti;
  std::optional<bool> minimal;
  std::optional<bool> smooth;
};

/// Named constructions:
///   interval  n=2, d>=4, 5<=r<=d+1
///   rho-max   n>=2, d>=4; r = C(n+d-1, n-1)
///   two-block d>n>=3, 2<=h<=d-n+1, m of degree h in x0..x_{n-2} (length n-1)
///   type-b    n>=3, d>=3: pure powers + x0*(x1,...,xn)^{d-1}
///   trivial   n, m of degree d-1 (or x0^{d-1} when m is empty)
///   d4-r10    (x0,x1)^4 + (x2,x3)^4
///   n3-range  n=3, d>=4, 7<=r<=C(d+2,2)
/// InputError for unknown names or invalid parameters.
FamilyMember family(std::string_view name, const FamilyParams& params);
std::vector<std::string> family_names();

// ---------------------------------------------------------------------------

struct TargetResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> lines;  // deterministic report lines
};

struct TargetInfo {
  std::string name;
  std::string description;
};

class UnknownTarget : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<TargetInfo> list_targets();
/// Throws UnknownTarget for unregistered names.
TargetResult reproduce(std::string_view name, unsigned threads = default_threads());

/// Canonical forms of the ideals stored in the fixture file under key.
std::vector<MonomialIdeal> fixture_ideals(std::string_view key);
const nlohmann::json& fixtures();

}  // namespace togliatti
