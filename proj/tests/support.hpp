#pragma once

// Small helpers shared by the test files: ideal builders and a sparse
// polynomial type used to expand printed factorizations independently of
// the library.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "togliatti/exact_linalg.hpp"
#include "togliatti/monomial.hpp"

namespace testing_support {

using togliatti::Monomial;
using togliatti::MonomialIdeal;

using Poly = std::map<std::vector<int>, mpz_class>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Poly to_poly(const std::vector<Monomial>& monos, const togliatti::linalg::IntVector& coeffs) {
  Poly out;
  for (std::size_t k = 0; k < monos.size(); ++k) {
    if (sgn(coeffs[k]) != 0) out[std::vector<int>(monos[k].exponents().begin(), monos[k].exponents().end())] = coeffs[k];
  }
  return out;
}

/// a == lambda * b for some nonzero rational lambda.
inline bool proportional(const Poly& a, const Poly& b) {
  if (a.size() != b.size() || a.empty()) return false;
  const auto& [e0, a0] = *a.begin();
  auto it = b.find(e0);
  if (it == b.end()) return false;
  const mpz_class b0 = it->second;
  for (const auto& [e, ca] : a) {
    auto jt = b.find(e);
    if (jt == b.end() || ca * b0 != jt->second * a0) return false;
  }
  return true;
}

inline MonomialIdeal ideal(int n, int d, const std::vector<std::vector<int>>& extras) {
  std::vector<std::vector<int>> gens = extras;
  for (int i = 0; i <= n; ++i) {
    std::vector<int> e(n + 1, 0);
    e[i] = d;
    gens.push_back(e);
  }
  return togliatti::make_ideal(n, d, gens);
}

/// (x0,x1)^3 + (x2,x3)^3
inline MonomialIdeal hyperquadric_ideal() {
  std::vector<std::vector<int>> gens;
  for (const auto& p : togliatti::simplex_points_list(3, 3)) {
    if (p[0] + p[1] == 3 || p[2] + p[3] == 3) gens.emplace_back(p.exponents().begin(), p.exponents().end());
  }
  return togliatti::make_ideal(3, 3, gens);
}

inline MonomialIdeal exception_2_5() { return ideal(2, 5, {{3, 1, 1}, {1, 2, 2}}); }
inline MonomialIdeal exception_2_4() { return ideal(2, 4, {{1, 1, 2}, {2, 2, 0}}); }
inline MonomialIdeal togliatti_cubic() { return ideal(2, 3, {{1, 1, 1}}); }

}  // namespace testing_support
