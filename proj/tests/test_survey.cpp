#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "support.hpp"
#include "togliatti/errors.hpp"
#include "togliatti/io.hpp"
#include "togliatti/survey.hpp"

using namespace togliatti;
using namespace testing_support;

namespace {

// Every subset of the non-vertex points, canonicalized, with no pruning.
std::multiset<std::string> brute_force_orbits(int n, int d, int extra) {
  const auto pool = non_vertex_points(n, d);
  std::multiset<std::string> out;
  std::set<std::string> seen;
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.end() - extra, pick.end(), true);
  do {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pick[i]) gens.push_back(pool[i]);
    }
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
      gens.push_back(Monomial::pure_power(static_cast<std::size_t>(n) + 1, i, d));
    }
    auto key = canonical_form(make_ideal(n, d, gens)).to_string();
    if (seen.insert(key).second) out.insert(key);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

std::multiset<std::string> keys(const std::vector<MonomialIdeal>& v) {
  std::multiset<std::string> out;
  for (const auto& I : v) out.insert(I.to_string());
  return out;
}

}  // namespace

TEST_CASE("raw subset counts") {
  CHECK(raw_subset_count(2, 5, 2) == 153);
  CHECK(raw_subset_count(3, 4, 5) == 169911);
  CHECK(raw_subset_count(6, 9, 40) == UINT64_MAX);
}

TEST_CASE("orbit pruning matches brute force") {
  for (auto [d, extra] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {4, 3}, {5, 2}, {5, 3}}) {
    CAPTURE(d);
    CAPTURE(extra);
    EnumerationOptions opt;
    const auto pruned = enumerate(2, d, extra, opt);
    CHECK(keys(pruned) == brute_force_orbits(2, d, extra));
    for (const auto& I : pruned) CHECK(canonical_form(I) == I);

    opt.up_to_symmetry = false;
    const auto raw = enumerate(2, d, extra, opt);
    CHECK(raw.size() == raw_subset_count(2, d, extra));
    std::set<std::string> canon;
    for (const auto& I : raw) canon.insert(canonical_form(I).to_string());
    CHECK(std::multiset<std::string>(canon.begin(), canon.end()) == keys(pruned));
  }
}

TEST_CASE("enumeration output does not depend on thread count") {
  EnumerationOptions one;
  EnumerationOptions four;
  four.threads = 4;
  CHECK(enumerate(3, 4, 3, one) == enumerate(3, 4, 3, four));
}

TEST_CASE("budget refusal") {
  EnumerationOptions opt;
  opt.budget = 100;
  CHECK_THROWS_AS(enumerate(2, 5, 2, opt), BudgetError);
  opt.budget = 153;
  CHECK_NOTHROW(enumerate(2, 5, 2, opt));
}

TEST_CASE("minimal filter output passes both minimality routes") {
  EnumerationOptions opt;
  opt.filters = {Filter::minimal};
  for (int extra = 2; extra <= 4; ++extra) {
    for (const auto& I : enumerate(2, 5, extra, opt)) {
      CHECK(is_minimal(I).is_minimal);
      CHECK(minimality_oracle(I));
    }
  }
}

TEST_CASE("(2,4) minimal systems with five generators") {
  EnumerationOptions opt;
  opt.filters = {Filter::minimal};
  auto found = enumerate(2, 4, 2, opt);
  auto trivial = canonical_form(trivial_system(2, Monomial({3, 0, 0})));
  CHECK(keys(found) == keys({trivial, canonical_form(exception_2_4())}));
}

TEST_CASE("(4,3) with nine generators: only the trivial system") {
  EnumerationOptions opt;
  opt.filters = {Filter::togliatti, Filter::minimal};
  auto found = enumerate(4, 3, 4, opt);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == canonical_form(parse_inline_ideal("x0^3,x1^3,x2^3,x3^3,x4^3,x0^2*x1,x0^2*x2,x0^2*x3,x0^2*x4")));
}

TEST_CASE("filter names") {
  auto f = parse_filters("minimal, smooth,nontrivial");
  CHECK(f == std::vector<Filter>{Filter::minimal, Filter::smooth, Filter::nontrivial});
  CHECK_THROWS_AS(parse_filters("minimal,shiny"), InputError);
}

TEST_CASE("census tallies agree") {
  const auto& c = census(2, 5, 3, 1);
  CHECK(c.tally.all_agree());
  CHECK(c.tally.three_way_checked == c.orbits.size());
  CHECK(c.tally.minimality_checked > 0);
  CHECK(c.tally.stability_checked > 0);
  CHECK(&census(2, 5, 3, 1) == &c);
}

TEST_CASE("survey row invariants and csv") {
  EnumerationOptions opt;
  auto row = survey(2, 5, 6, opt);
  CHECK(row.minimal_smooth <= row.minimal);
  CHECK(row.minimal <= row.togliatti);
  CHECK(row.togliatti <= row.total);
  CHECK(row.minimal_smooth_representatives.size() == row.minimal_smooth);
  const auto header = survey_csv_header();
  const auto line = to_csv(row);
  CHECK(line.substr(0, 6) == "2,5,6,");
  CHECK(std::count(header.begin(), header.end(), ',') == std::count(line.begin(), line.end(), ','));
  CHECK(to_json(row).at("minimal").get<std::uint64_t>() == row.minimal);
}

TEST_CASE("closed form for mu_s") {
  // independent partition minimum for d = 3
  auto partition_min = [](int n) {
    std::uint64_t best = UINT64_MAX;
    std::vector<int> parts;
    std::function<void(int, int)> go = [&](int left, int max_part) {
      if (left == 0) {
        if (parts.size() < 2) return;
        std::uint64_t v = 0;
        for (int a : parts) v += static_cast<std::uint64_t>(a * (a + 1) * (a + 2) / 6);
        for (std::size_t i = 0; i < parts.size(); ++i)
          for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (std::size_t k = j + 1; k < parts.size(); ++k) v += static_cast<std::uint64_t>(parts[i] * parts[j] * parts[k]);
        best = std::min(best, v);
        return;
      }
      for (int a = std::min(left, max_part); a >= 1; --a) {
        parts.push_back(a);
        go(left - a, a);
        parts.pop_back();
      }
    };
    go(n + 1, n - 1);
    return best;
  };
  CHECK(closed_form_mu_s(4, 3) == 13);
  for (int n = 4; n <= 9; ++n) CHECK(closed_form_mu_s(n, 3) == partition_min(n));
  CHECK(closed_form_mu_s(3, 2) == 6);
  CHECK(closed_form_mu_s(4, 2) == 9);
  CHECK_THROWS_AS(closed_form_mu_s(3, 3), InputError);
  CHECK_THROWS_AS(closed_form_mu_s(2, 2), InputError);
}

TEST_CASE("asserted bounds") {
  auto b = mu_bounds(2, 5);
  CHECK(b.mu.value == 5u);
  CHECK(b.mu_s.value == 5u);
  CHECK(b.rho.value == 6u);
  CHECK(b.rho_s.value == 6u);
  CHECK(b.mu.paper_asserted);
  CHECK_FALSE(b.mu.verified);
  auto c = mu_bounds(3, 4);
  CHECK(c.mu.value == 7u);
  CHECK(c.rho.value == 15u);
  auto v = mu_bounds(2, 4, 1'000'000);
  CHECK(v.mu.verified);
  CHECK(v.rho.verified);
  CHECK(to_json(v).at("mu").at("status") == "paper-asserted, verified");
}
