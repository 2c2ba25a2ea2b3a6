#include <doctest.h>

#include <chrono>

#include "support.hpp"
#include "togliatti/errors.hpp"
#include "togliatti/smoothness.hpp"

using namespace togliatti;
using namespace testing_support;

namespace {

bool has_condition(const SmoothnessReport& r, SmoothnessCondition c) {
  for (const auto& f : r.failures) {
    if (f.condition == c) return true;
  }
  return false;
}

int boundary_euler(const LatticePolytope& P) {
  int chi = 0;
  for (const auto& f : P.faces) {
    if (f.dim < P.dim) chi += (f.dim % 2 == 0) ? 1 : -1;
  }
  return chi;
}

// Degree-(d-1) monomials in n+1 variables with descending exponents.
std::vector<Monomial> sorted_monomials(int n, int e) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(n + 1, e)) {
    auto ex = m.exponents();
    if (std::is_sorted(ex.begin(), ex.end(), std::greater<>())) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("hexagon of the cubic surface") {
  auto P = polytope_of(togliatti_cubic());
  CHECK(P.dim == 2);
  CHECK(P.vertices.size() == 6);
  CHECK(P.faces_of_dim(1).size() == 6);
  CHECK(is_smooth(P).is_smooth);
}

TEST_CASE("degenerate polytopes") {
  auto point = trivial_system(2, Monomial({1, 0, 0}));
  auto P = polytope_of(point);
  CHECK(P.dim == 0);
  CHECK(P.vertices.size() == 1);
  CHECK(is_smooth(P).is_smooth);

  auto tri = trivial_system(3, Monomial({1, 0, 0, 0}));
  auto T = polytope_of(tri);
  CHECK(T.dim == 2);
  CHECK(T.vertices.size() == 3);
  CHECK(is_smooth(T).is_smooth);

  // all of R_2 except x0x1 in two variables leaves one segment-free point
  auto all = make_ideal(2, 2, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}});
  CHECK(polytope_of(all).dim == 0);
  auto none_left = make_ideal(1, 2, {{2, 0}, {0, 2}, {1, 1}});
  CHECK_THROWS_AS(polytope_of(none_left), InputError);
}

TEST_CASE("known smoothness verdicts") {
  CHECK(is_smooth(exception_2_5()).is_smooth);
  auto r4 = is_smooth(exception_2_4());
  CHECK_FALSE(r4.is_smooth);
  for (int d = 4; d <= 6; ++d) {
    for (int n = 2; n <= 3; ++n) {
      std::vector<int> e(n + 1, 0);
      e[0] = d - 1;
      CHECK(is_smooth(trivial_system(n, Monomial(e))).is_smooth);
    }
  }
  for (int d = 4; d <= 7; ++d) {
    auto I = ideal(2, d, {{d - 2, 2, 0}, {d - 2, 1, 1}, {d - 2, 0, 2}});
    auto r = is_smooth(I);
    CHECK_FALSE(r.is_smooth);
    CHECK(has_condition(r, SmoothnessCondition::edge_saturation));
  }
  std::vector<std::vector<int>> gens;
  for (const auto& p : simplex_points_list(3, 4)) {
    if (p[0] + p[1] == 4 || p[2] + p[3] == 4) gens.emplace_back(p.exponents().begin(), p.exponents().end());
  }
  CHECK(is_smooth(make_ideal(3, 4, gens)).is_smooth);
  CHECK(is_smooth(hyperquadric_ideal()).is_smooth);
}

TEST_CASE("caveat flag above n = 3") {
  auto I = trivial_system(4, Monomial({3, 0, 0, 0, 0}));
  auto r = is_smooth(I);
  CHECK(r.criterion_caveat);
  CHECK_FALSE(is_smooth(exception_2_5()).criterion_caveat);
}

TEST_CASE("closed-form classifier agrees with the polytope test") {
  for (int n = 2; n <= 3; ++n) {
    for (int d = 2; d <= 7; ++d) {
      for (const auto& m : sorted_monomials(n, d - 1)) {
        auto I = trivial_system(n, m);
        CAPTURE(I.to_string());
        CHECK(trivial_smoothness_classifier(n, d, m) == is_smooth(I).is_smooth);
      }
    }
  }
  CHECK(trivial_smoothness_classifier(2, 5, Monomial({4, 0, 0})));
  CHECK_FALSE(trivial_smoothness_classifier(2, 5, Monomial({3, 1, 0})));
  CHECK(trivial_smoothness_classifier(3, 5, Monomial({2, 1, 1, 0})));
}

TEST_CASE("euler characteristic of the boundary") {
  for (const auto& I : {togliatti_cubic(), exception_2_4(), exception_2_5(), hyperquadric_ideal(),
                        trivial_system(3, Monomial({2, 1, 0, 0})), trivial_system(4, Monomial({2, 0, 0, 0, 0}))}) {
    auto P = polytope_of(I);
    CAPTURE(I.to_string());
    CHECK(boundary_euler(P) == 1 - ((P.dim % 2 == 0) ? 1 : -1));
  }
}

TEST_CASE("face lattice is closed under intersection") {
  auto P = polytope_of(hyperquadric_ideal());
  for (const auto& a : P.faces) {
    for (const auto& b : P.faces) {
      std::vector<std::size_t> inter;
      std::set_intersection(a.point_indices.begin(), a.point_indices.end(), b.point_indices.begin(),
                            b.point_indices.end(), std::back_inserter(inter));
      if (inter.empty()) continue;
      bool found = false;
      for (const auto& f : P.faces) found = found || f.point_indices == inter;
      CHECK(found);
    }
  }
  for (const auto& f : P.faces) {
    CHECK(f.vertex_indices.size() >= static_cast<std::size_t>(f.dim) + 1);
  }
}

TEST_CASE("smoothness is permutation invariant") {
  for (const auto& I : {exception_2_4(), exception_2_5(), ideal(2, 5, {{3, 2, 0}, {3, 1, 1}, {3, 0, 2}})}) {
    const bool base = is_smooth(I).is_smooth;
    for (const auto& p : all_permutations(3)) CHECK(is_smooth(I.permuted(p)).is_smooth == base);
  }
}

TEST_CASE("vertex osculation") {
  auto I = exception_2_5();
  auto P = polytope_of(I);
  bool some_flex = false;
  for (auto v : P.vertices) {
    CHECK_FALSE(vertex_osculation_defect(I, P.points[v], 4));
    CHECK(vertex_osculation_defect(I, P.points[v], 1));
    some_flex = some_flex || !vertex_osculation_defect(I, P.points[v], 2) || !vertex_osculation_defect(I, P.points[v], 3);
  }
  CHECK(some_flex);
  CHECK_FALSE(vertex_osculation_defect(I, Monomial({4, 1, 0}), 2));

  auto T5 = trivial_system(2, Monomial({4, 0, 0}));
  CHECK(vertex_osculation_defect(T5, Monomial({3, 2, 0}), 2));
  for (int d = 4; d <= 7; ++d) {
    auto T = trivial_system(2, Monomial({d - 1, 0, 0}));
    CHECK_FALSE(vertex_osculation_defect(T, Monomial({d - 2, 2, 0}), d - 1));
  }
  CHECK_THROWS_AS(vertex_osculation_defect(I, Monomial({2, 2, 1}), 2), InputError);
  CHECK_THROWS_AS(vertex_osculation_defect(hyperquadric_ideal(), Monomial({2, 0, 1, 0}), 1), InputError);
}

TEST_CASE("svg output") {
  auto svg = polygon_svg(exception_2_5());
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK_THROWS_AS(polygon_svg(hyperquadric_ideal()), InputError);
}
