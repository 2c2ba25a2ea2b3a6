#include <doctest.h>

#include <random>

#include "support.hpp"
#include "togliatti/lefschetz.hpp"
#include "togliatti/togliatti.hpp"

using namespace togliatti;
using namespace testing_support;

TEST_CASE("multiplication matrix examples") {
  auto I = make_ideal(1, 2, {{2, 0}, {0, 2}});
  auto m = multiplication_matrix(I, 1);
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 2);
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 1);
  CHECK(linalg::rank(m) == 1);

  auto cubic = togliatti_cubic();
  auto m2 = multiplication_matrix(cubic, 2);
  CHECK(m2.rows() == 6);
  CHECK(m2.cols() == 6);
  CHECK(linalg::rank(m2) == 5);

  // beyond the socle degree the target is empty
  auto m3 = multiplication_matrix(cubic, 6);
  CHECK(m3.rows() == 0);
  CHECK(degree_record(cubic, 6).maximal);
}

TEST_CASE("wlp report") {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 2; d <= 4; ++d) {
      std::vector<std::vector<int>> none;
      auto report = wlp_report(ideal(n, d, none));
      CHECK(report.has_wlp);
      CHECK(report.failing_degrees.empty());
      CHECK(report.degrees.size() == static_cast<std::size_t>((n + 1) * (d - 1)));
    }
  }
  auto r = wlp_report(ideal(3, 3, {{2, 1, 0, 0}, {2, 0, 1, 0}, {2, 0, 0, 1}}));
  CHECK_FALSE(r.has_wlp);
  CHECK(r.failing_degrees == std::vector<int>{2});

  // dimension identity in degrees below d and at d
  auto I = exception_2_5();
  auto rep = wlp_report(I);
  for (const auto& rec : rep.degrees) {
    if (rec.j < 5) CHECK(rec.dim_source == binomial(rec.j + 2, 2));
    if (rec.j == 5) CHECK(rec.dim_source == 21 - 5);
  }
}

TEST_CASE("fails wlp in a given degree") {
  auto cubic = togliatti_cubic();
  CHECK(fails_wlp_in_degree(cubic, 2));
  CHECK_FALSE(fails_wlp_in_degree(cubic, 1));
  CHECK(fails_wlp_in_degree(exception_2_5(), 4));
}

namespace {

// Evaluates sum_c coeff_c * g_c(-(x1+..+xn), x1, .., xn) at an integer point.
mpz_class restricted_combination(const MonomialIdeal& I, const linalg::IntVector& c, const std::vector<long>& x) {
  mpz_class x0 = 0;
  for (long v : x) x0 -= v;
  mpz_class total = 0;
  for (std::size_t k = 0; k < I.num_generators(); ++k) {
    const auto& g = I.generators()[k];
    mpz_class term = c[k], p;
    mpz_pow_ui(p.get_mpz_t(), x0.get_mpz_t(), g[0]);
    term *= p;
    for (std::size_t i = 0; i < x.size(); ++i) {
      mpz_class xi = x[i];
      mpz_pow_ui(p.get_mpz_t(), xi.get_mpz_t(), g[i + 1]);
      term *= p;
    }
    total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("hyperplane dependence") {
  auto cubic = togliatti_cubic();
  auto dep = hyperplane_dependence(cubic);
  REQUIRE(dep.has_value());
  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) {
    std::vector<long> x{static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 11) - 5};
    CHECK(restricted_combination(cubic, *dep, x) == 0);
  }
  std::vector<std::vector<int>> none;
  CHECK_FALSE(hyperplane_dependence(ideal(2, 4, none)).has_value());
  CHECK_FALSE(hyperplane_dependence(ideal(3, 3, none)).has_value());

  for (int d = 3; d <= 6; ++d) {
    auto T = trivial_system(2, Monomial({d - 2, 1, 0}));
    auto dt = hyperplane_dependence(T);
    REQUIRE(dt.has_value());
    for (int t = 0; t < 5; ++t) {
      std::vector<long> x{static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3};
      CHECK(restricted_combination(T, *dt, x) == 0);
    }
  }
}

TEST_CASE("three-way agreement on random ideals") {
  std::mt19937 rng(77);
  int togliatti_count = 0;
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + t % 2;
    const int d = 3 + t % 3;
    std::vector<Monomial> gens;
    for (const auto& p : simplex_points_list(n, d)) {
      if (p.is_pure_power() || rng() % 9 == 0) gens.push_back(p);
    }
    auto I = make_ideal(n, d, gens);
    if (I.num_generators() > generator_bound(n, d)) continue;
    const bool wlp = fails_wlp_in_degree(I, d - 1);
    const bool hyp = hyperplane_dependence(I).has_value();
    const bool ker = togliatti_kernel(I).dimension() > 0;
    CHECK(wlp == hyp);
    CHECK(wlp == ker);
    togliatti_count += ker;
  }
  CHECK(togliatti_count > 0);
}

TEST_CASE("wlp flags are permutation invariant") {
  auto I = exception_2_4();
  auto base = wlp_report(I);
  for (const auto& perm : all_permutations(3)) {
    auto r = wlp_report(I.permuted(perm));
    CHECK(r.failing_degrees == base.failing_degrees);
    CHECK(r.has_wlp == base.has_wlp);
  }
}
