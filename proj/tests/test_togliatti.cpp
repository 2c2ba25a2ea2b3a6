#include <doctest.h>

#include <random>

#include "support.hpp"
#include "togliatti/errors.hpp"
#include "togliatti/togliatti.hpp"

using namespace togliatti;
using namespace testing_support;

namespace {

Poly term(std::vector<int> e, long c) { return Poly{{std::move(e), mpz_class(c)}}; }

Poly sum(std::initializer_list<Poly> parts) {
  Poly out;
  for (const auto& p : parts) {
    for (const auto& [e, c] : p) out[e] += c;
  }
  return out;
}

}  // namespace

TEST_CASE("hyperquadric certificate") {
  auto space = togliatti_kernel(hyperquadric_ideal());
  REQUIRE(space.dimension() == 1);
  linalg::IntVector q{2, 4, -5, -5, 2, -5, -5, 2, 4, 2};
  CHECK(space.basis[0] == q);
  for (const auto& p : inverse_system(hyperquadric_ideal()).points) {
    CHECK(evaluate_form(space.monomials, space.basis[0], p) == 0);
  }
}

TEST_CASE("cubic surface certificate") {
  auto space = togliatti_kernel(togliatti_cubic());
  REQUIRE(space.dimension() == 1);
  CHECK(space.basis[0] == linalg::IntVector{2, -5, -5, 2, -5, 2});
  CHECK(polynomial_text(space.monomials, space.basis[0]) ==
        "2*x0^2-5*x0*x1-5*x0*x2+2*x1^2-5*x1*x2+2*x2^2");
}

TEST_CASE("pure powers have no certificate") {
  for (int n = 2; n <= 3; ++n) {
    for (int d = 3; d <= 5; ++d) {
      std::vector<std::vector<int>> none;
      auto I = ideal(n, d, none);
      CHECK(togliatti_kernel(I).dimension() == 0);
      CHECK(togliatti_status(I) == TogliattiStatus::not_togliatti);
    }
  }
}

TEST_CASE("exception certificates") {
  // (x0+x1-3x2)(3x0^2-10x0x1+3x1^2-4x0x2-4x1x2+x2^2)
  Poly linear = sum({term({1, 0, 0}, 1), term({0, 1, 0}, 1), term({0, 0, 1}, -3)});
  Poly quad = sum({term({2, 0, 0}, 3), term({1, 1, 0}, -10), term({0, 2, 0}, 3), term({1, 0, 1}, -4),
                   term({0, 1, 1}, -4), term({0, 0, 2}, 1)});
  auto I4 = exception_2_4();
  auto space4 = togliatti_kernel(I4);
  REQUIRE(space4.dimension() == 1);
  CHECK(proportional(to_poly(space4.monomials, certificate_polynomial(I4)), poly_mul(linear, quad)));

  auto I5 = exception_2_5();
  auto space5 = togliatti_kernel(I5);
  REQUIRE(space5.dimension() == 1);
  Poly f4 = sum({term({4, 0, 0}, 24), term({0, 4, 0}, 24), term({0, 0, 4}, 24), term({3, 1, 0}, -154),
                 term({1, 3, 0}, -154), term({3, 0, 1}, -154), term({1, 0, 3}, -154), term({0, 3, 1}, -154),
                 term({0, 1, 3}, -154), term({2, 2, 0}, 269), term({2, 0, 2}, 269), term({0, 2, 2}, 269),
                 term({1, 2, 1}, 288), term({1, 1, 2}, 288), term({2, 1, 1}, -337)});
  CHECK(proportional(to_poly(space5.monomials, space5.basis[0]), f4));
}

TEST_CASE("togliatti status") {
  CHECK(is_togliatti(exception_2_5()));
  CHECK(is_togliatti(exception_2_4()));
  CHECK(is_togliatti(togliatti_cubic()));
  CHECK(is_togliatti(hyperquadric_ideal()));
  // 2n generators: pure powers plus n-1 extra never suffice
  for (const auto& p : simplex_points_list(2, 4)) {
    if (p.is_pure_power()) continue;
    CHECK_FALSE(is_togliatti(ideal(2, 4, {{p[0], p[1], p[2]}})));
  }
  // above the generator bound (r > d+1 for n=2)
  auto big = ideal(2, 3, {{2, 1, 0}, {1, 1, 1}});
  CHECK(togliatti_status(big) == TogliattiStatus::exceeds_generator_bound);
  CHECK_FALSE(is_togliatti(big));
}

TEST_CASE("minimality") {
  auto rep = is_minimal(hyperquadric_ideal());
  CHECK(rep.is_minimal);
  CHECK(rep.kernel_dimension == 1);
  CHECK(minimality_oracle(hyperquadric_ideal()));
  CHECK(is_minimal(exception_2_5()).is_minimal);
  CHECK(minimality_oracle(exception_2_5()));

  auto padded = ideal(3, 3, {{2, 1, 0, 0}, {2, 0, 1, 0}, {2, 0, 0, 1}, {0, 2, 1, 0}});
  auto r = is_minimal(padded);
  CHECK_FALSE(r.is_minimal);
  CHECK(r.blocking_points == std::vector<Monomial>{Monomial({0, 2, 1, 0})});
  CHECK_FALSE(minimality_oracle(padded));

  std::vector<std::vector<int>> none;
  CHECK_THROWS_AS(is_minimal(ideal(2, 4, none)), StateError);
  CHECK_THROWS_AS(certificate_polynomial(ideal(2, 4, none)), StateError);
}

TEST_CASE("minimality agrees with the deletion oracle on random ideals") {
  std::mt19937 rng(4242);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 40; ++t) {
    const int n = 2 + t % 2;
    const int d = 3 + t % 2;
    std::vector<Monomial> gens;
    for (const auto& p : simplex_points_list(n, d)) {
      if (p.is_pure_power() || rng() % 5 == 0) gens.push_back(p);
    }
    auto I = make_ideal(n, d, gens);
    if (I.num_generators() > 16 || !is_togliatti(I)) continue;
    auto rep = is_minimal(I);
    CHECK(rep.is_minimal == minimality_oracle(I));
    if (rep.is_minimal) CHECK(rep.kernel_dimension == 1);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("minimal certificates avoid every extra point") {
  for (const auto& I : {exception_2_4(), exception_2_5(), hyperquadric_ideal()}) {
    auto space = togliatti_kernel(I);
    for (const auto& p : I.extra_generators()) {
      CHECK(evaluate_form(space.monomials, space.basis[0], p) != 0);
    }
  }
}
