#include <doctest.h>

#include "togliatti/errors.hpp"
#include "togliatti/io.hpp"
#include "togliatti/smoothness.hpp"
#include "togliatti/survey.hpp"

using namespace togliatti;

namespace {

FamilyParams p(int n, int d, int r = 0, int h = 0, std::vector<int> m = {}) {
  FamilyParams out;
  out.n = n;
  out.d = d;
  out.r = r;
  out.h = h;
  out.m = std::move(m);
  return out;
}

}  // namespace

TEST_CASE("interval family") {
  auto f = family("interval", p(2, 6, 5));
  CHECK(f.ideal == parse_inline_ideal("x0^6,x1^6,x2^6,x0^5*x1,x0^5*x2"));
  for (int r = 5; r <= 7; ++r) {
    auto g = family("interval", p(2, 6, r));
    CHECK(g.ideal.num_generators() == static_cast<std::size_t>(r));
    auto t = togliatti_report(g.ideal);
    CHECK(t.is_togliatti);
    CHECK(t.is_minimal);
    CHECK(is_smooth(g.ideal).is_smooth);
  }
  CHECK_THROWS_AS(family("interval", p(2, 6, 8)), InputError);
}

TEST_CASE("rho-max family reaches the generator bound") {
  auto f = family("rho-max", p(3, 4));
  CHECK(f.ideal.num_generators() == 15);
  CHECK(generator_bound(3, 4) == 15);
  auto t = togliatti_report(f.ideal);
  CHECK(t.is_togliatti);
  CHECK(t.is_minimal);
}

TEST_CASE("d4-r10") {
  auto f = family("d4-r10", p(3, 4));
  CHECK(f.ideal.num_generators() == 10);
  CHECK(togliatti_report(f.ideal).is_minimal);
  CHECK(is_smooth(f.ideal).is_smooth);
  CHECK(f.smooth == true);
}

TEST_CASE("type-b") {
  auto f = family("type-b", p(3, 4));
  CHECK(f.ideal.num_generators() == 14);
  CHECK(is_trivial_type_b(f.ideal) == 0u);
  CHECK_THROWS_AS(family("type-b", p(2, 4)), InputError);
}

TEST_CASE("trivial family") {
  auto f = family("trivial", p(2, 5));
  CHECK(f.ideal == trivial_system(2, Monomial({4, 0, 0})));
  CHECK(f.togliatti == true);
  auto g = family("trivial", p(2, 5, 0, 0, {2, 1, 1}));
  CHECK(g.ideal.num_generators() == 6);
  CHECK_THROWS_AS(family("trivial", p(2, 5, 0, 0, {2, 1})), InputError);
}

TEST_CASE("two-block family sizes") {
  auto f = family("two-block", p(3, 5, 0, 2, {1, 1}));
  CHECK(f.ideal.num_generators() == 12);
  CHECK(togliatti_report(f.ideal).is_minimal);
  auto g = family("two-block", p(4, 5, 0, 2, {1, 1, 0}));
  CHECK(g.ideal.num_generators() == 27);
  CHECK(togliatti_report(g.ideal).is_togliatti);
  CHECK_THROWS_AS(family("two-block", p(3, 5, 0, 2, {1, 0})), InputError);
}

TEST_CASE("n3-range sizes") {
  for (int r = 7; r <= 21; ++r) {
    auto f = family("n3-range", p(3, 5, r));
    CHECK(f.ideal.num_generators() == static_cast<std::size_t>(r));
    CHECK(is_togliatti(f.ideal));
  }
}

TEST_CASE("unknown family") { CHECK_THROWS_AS(family("nope", p(2, 4)), InputError); }
