#include <doctest.h>

#include <numeric>
#include <random>

#include "support.hpp"
#include "togliatti/errors.hpp"
#include "togliatti/stability.hpp"

using namespace togliatti;
using namespace testing_support;

namespace {

std::vector<MonomialIdeal> classification_ideals() {
  return {
      exception_2_5(),
      ideal(2, 7, {{3, 3, 1}, {3, 1, 3}, {1, 3, 3}}),
      ideal(2, 7, {{5, 1, 1}, {1, 5, 1}, {1, 1, 5}}),
      ideal(2, 7, {{1, 1, 5}, {3, 3, 1}, {2, 2, 3}}),
      ideal(2, 5, {{3, 1, 1}, {1, 3, 1}, {1, 1, 3}}),
      ideal(2, 5, {{3, 1, 1}, {2, 2, 1}, {1, 3, 1}}),
      ideal(2, 5, {{2, 2, 1}, {2, 1, 2}, {1, 2, 2}}),
  };
}

}  // namespace

TEST_CASE("gcd degree") {
  std::vector<Monomial> a{Monomial({5, 0, 0}), Monomial({4, 1, 0})};
  CHECK(gcd_degree(a) == 4);
  std::vector<Monomial> b{Monomial({3, 1, 1}), Monomial({1, 2, 2})};
  CHECK(gcd_degree(b) == 3);
  std::vector<Monomial> c{Monomial({6, 0, 0}), Monomial({0, 6, 0})};
  CHECK(gcd_degree(c) == 0);
  CHECK_THROWS_AS(gcd_degree(std::vector<Monomial>{}), InputError);
}

TEST_CASE("subset values and slopes") {
  auto I = ideal(2, 5, {{4, 1, 0}});
  std::vector<Monomial> J{Monomial({5, 0, 0}), Monomial({4, 1, 0})};
  CHECK(subset_value(I, J) == -2);
  CHECK(slope(I) == mpq_class(-20, 3));
  std::vector<int> jdeg{5, 5};
  CHECK(subsheaf_slope(jdeg, 4) == -6);
  CHECK(slope(2, 1) == -2);

  auto I6 = ideal(2, 5, {{3, 1, 1}, {2, 2, 1}, {1, 3, 1}});
  std::vector<Monomial> J6{Monomial({3, 1, 1}), Monomial({2, 2, 1})};
  CHECK(subset_value(I6, J6) == 0);

  for (int d = 4; d <= 7; ++d) {
    Monomial m({d - 3, 1, 1});
    auto T = trivial_system(2, m);
    std::vector<Monomial> JT{m.times_variable(0), m.times_variable(1), m.times_variable(2)};
    std::sort(JT.begin(), JT.end(), std::greater<>());
    CHECK(subset_value(T, JT) == static_cast<long>(T.num_generators()) - 2 * d - 1);
  }
  CHECK_THROWS_AS(subset_value(I, std::vector<Monomial>{Monomial({5, 0, 0})}), InputError);
}

TEST_CASE("worked examples") {
  auto stable = ideal(2, 5, {{2, 2, 1}});
  CHECK(stability_class(stable).verdict == StabilityVerdict::stable);
  auto unstable = ideal(2, 5, {{4, 1, 0}});
  auto r = stability_class(unstable);
  CHECK(r.verdict == StabilityVerdict::unstable);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->subset == std::vector<Monomial>{Monomial({5, 0, 0}), Monomial({4, 1, 0})});
  CHECK(r.witness->value == -2);
  auto o = stability_oracle(unstable);
  CHECK(o.verdict == StabilityVerdict::unstable);
  CHECK(o.witness->value == -2);
}

TEST_CASE("classification ideals") {
  auto ideals = classification_ideals();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    auto expected = i < 4 ? StabilityVerdict::stable : StabilityVerdict::properly_semistable;
    CAPTURE(i);
    CHECK(stability_class(ideals[i]).verdict == expected);
    CHECK(stability_oracle(ideals[i]).verdict == expected);
  }
  for (int d = 4; d <= 7; ++d) {
    CHECK(stability_class(trivial_system(2, Monomial({d - 1, 0, 0}))).verdict == StabilityVerdict::unstable);
    CHECK(stability_class(trivial_system(2, Monomial({d - 3, 1, 1}))).verdict == StabilityVerdict::unstable);
  }
  CHECK_THROWS_AS(stability_class(make_ideal(1, 3, {{3, 0}, {0, 3}})), InputError);
}

TEST_CASE("pruned scan matches the oracle on random ideals") {
  std::mt19937 rng(8080);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 2;
    const int d = 3 + t % 4;
    std::vector<Monomial> gens;
    for (const auto& p : simplex_points_list(n, d)) {
      if (p.is_pure_power() || rng() % 6 == 0) gens.push_back(p);
    }
    if (gens.size() > 14) gens.resize(14);
    bool pure_missing = false;
    for (int i = 0; i <= n; ++i) {
      pure_missing |= std::find(gens.begin(), gens.end(), Monomial::pure_power(n + 1, i, d)) == gens.end();
    }
    if (pure_missing) continue;
    auto I = make_ideal(n, d, gens);
    auto a = stability_class(I);
    auto b = stability_oracle(I);
    CAPTURE(I.to_string());
    CHECK(a.verdict == b.verdict);
    CHECK(a.witness->value == b.witness->value);
    if (std::gcd(static_cast<long>(I.num_generators()) * d, static_cast<long>(I.num_generators()) - 1) == 1) {
      CHECK(a.verdict != StabilityVerdict::properly_semistable);
    }
  }
}

TEST_CASE("general and equal-degree forms agree") {
  std::mt19937 rng(5);
  auto I = ideal(3, 4, {{2, 1, 1, 0}, {2, 1, 0, 1}, {1, 1, 1, 1}, {0, 2, 2, 0}, {3, 1, 0, 0}});
  const auto& gens = I.generators();
  const std::size_t r = gens.size();
  std::vector<int> all(r, 4);
  for (std::uint32_t mask = 1; mask < (1u << r) - 1; ++mask) {
    std::vector<Monomial> J;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1u) J.push_back(gens[i]);
    }
    if (J.size() < 2) continue;
    std::vector<int> sub(J.size(), 4);
    const int dJ = gcd_degree(J);
    const mpq_class margin = brenner_margin(all, sub, dJ);
    CHECK(margin * static_cast<long>((r - 1) * (J.size() - 1)) == subset_value(I, J));
  }
}

TEST_CASE("verdicts are permutation invariant") {
  for (const auto& I : classification_ideals()) {
    auto base = stability_class(I).verdict;
    for (const auto& p : all_permutations(3)) CHECK(stability_class(I.permuted(p)).verdict == base);
  }
}

TEST_CASE("oracle guard") {
  auto big = make_ideal(2, 4, simplex_points_list(2, 4));
  CHECK_THROWS_AS(stability_oracle(big), GuardError);
}
