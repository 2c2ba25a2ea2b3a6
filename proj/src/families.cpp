#include <algorithm>
#include <set>

#include "togliatti/errors.hpp"
#include "togliatti/smoothness.hpp"
#include "togliatti/survey.hpp"

namespace togliatti {

namespace {

using Gens = std::set<Monomial, std::greater<>>;

[[noreturn]] void invalid(const std::string& message) { throw InputError(InputErrorKind::invalid_argument, message); }

std::size_t nv_of(int n) { return static_cast<std::size_t>(n) + 1; }

Monomial mono(int n, std::initializer_list<std::pair<std::size_t, int>> factors) {
  std::vector<int> e(nv_of(n), 0);
  for (auto [v, k] : factors) e[v] += k;
  return Monomial(std::move(e));
}

Monomial times(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
  return Monomial(std::move(e));
}

// All degree-k monomials in the listed variables, embedded in n+1 variables.
std::vector<Monomial> power_of(int n, const std::vector<std::size_t>& vars, int k) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(vars.size(), k)) {
    std::vector<int> e(nv_of(n), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) e[vars[i]] = m[i];
    out.emplace_back(std::move(e));
  }
  return out;
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {  // [lo, hi]
  std::vector<std::size_t> v;
  for (std::size_t i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

void add_pure(Gens& g, int n, int d) {
  for (std::size_t i = 0; i < nv_of(n); ++i) g.insert(Monomial::pure_power(nv_of(n), i, d));
}

MonomialIdeal build(int n, int d, const Gens& g) { return make_ideal(n, d, std::vector<Monomial>(g.begin(), g.end())); }

MonomialIdeal interval(int d, int r) {
  if (d < 4 || r < 5 || r > d + 1) invalid("interval needs d >= 4 and 5 <= r <= d+1");
  Gens g;
  add_pure(g, 2, d);
  if (r == 5) {
    g.insert(mono(2, {{0, d - 1}, {1, 1}}));
    g.insert(mono(2, {{0, d - 1}, {2, 1}}));
  } else {
    const auto head = mono(2, {{0, d - r + 3}, {1, 1}, {2, 1}});
    for (const auto& m : power_of(2, {0, 1}, r - 5)) g.insert(times(head, m));
    g.insert(times(head, mono(2, {{2, r - 5}})));
  }
  return build(2, d, g);
}

MonomialIdeal rho_max(int n, int d) {
  if (n < 2 || d < 4) invalid("rho-max needs n >= 2 and d >= 4");
  const std::size_t N = static_cast<std::size_t>(n);
  Gens g;
  add_pure(g, n, d);
  for (std::size_t i = 1; i + 2 <= N; ++i) {
    const auto xi = mono(n, {{i, 1}});
    for (const auto& m : power_of(n, range(i, N), d - 1)) g.insert(times(xi, m));
  }
  const auto head = mono(n, {{0, 3}});
  for (const auto& m : power_of(n, {N - 1, N}, d - 3)) g.insert(times(head, m));
  return build(n, d, g);
}

MonomialIdeal two_block(int n, int d, int h, const std::vector<int>& m) {
  if (n < 3 || d <= n) invalid("two-block needs d > n >= 3");
  if (h < 2 || h > d - n + 1) invalid("two-block needs 2 <= h <= d-n+1");
  const std::size_t N = static_cast<std::size_t>(n);
  if (m.size() != N - 1) invalid("two-block needs m over x0..x_{n-2}");
  std::vector<int> e(m);
  e.resize(N + 1, 0);
  const Monomial mp(e);
  if (mp.degree() != h) invalid("two-block needs deg m = h");
  Gens g;
  add_pure(g, n, d);
  for (const auto& x : power_of(n, range(0, N - 2), d)) g.insert(x);
  for (const auto& x : power_of(n, {N - 1, N}, d - h)) g.insert(times(x, mp));
  return build(n, d, g);
}

MonomialIdeal type_b(int n, int d) {
  if (n < 3 || d < 3) invalid("type-b needs n >= 3 and d >= 3");
  Gens g;
  add_pure(g, n, d);
  const auto x0 = mono(n, {{0, 1}});
  for (const auto& m : power_of(n, range(1, static_cast<std::size_t>(n)), d - 1)) g.insert(times(x0, m));
  if (g.size() > generator_bound(n, d)) invalid("type-b exceeds the generator bound for these n, d");
  return build(n, d, g);
}

MonomialIdeal d4_r10() {
  Gens g;
  for (const auto& m : power_of(3, {0, 1}, 4)) g.insert(m);
  for (const auto& m : power_of(3, {2, 3}, 4)) g.insert(m);
  return build(3, 4, g);
}

MonomialIdeal n3_range(int d, int r) {
  const int top = static_cast<int>(binomial(static_cast<std::uint64_t>(d + 2), 2));
  if (d < 4 || r < 7 || r > top) invalid("n3-range needs d >= 4 and 7 <= r <= C(d+2,2)");
  Gens g;
  add_pure(g, 3, d);
  auto x0k = [&](int k) { return mono(3, {{0, k}}); };
  if (r == 7) {
    for (std::size_t i = 1; i <= 3; ++i) g.insert(times(x0k(d - 1), mono(3, {{i, 1}})));
    return build(3, d, g);
  }
  if (r == 8) {
    const auto head = mono(3, {{0, d - 2}, {1, 1}});
    for (std::size_t i = 0; i <= 3; ++i) g.insert(times(head, mono(3, {{i, 1}})));
    return build(3, d, g);
  }
  if (r == 9) {
    for (const auto& q : {mono(3, {{1, 2}}), mono(3, {{0, 1}, {1, 1}}), mono(3, {{2, 2}}), mono(3, {{2, 1}, {3, 1}}),
                          mono(3, {{3, 2}})}) {
      g.insert(times(x0k(d - 2), q));
    }
    return build(3, d, g);
  }
  if (d == 4) {
    if (r == 14) return type_b(3, 4);
    if (r == 15) return rho_max(3, 4);
    Gens h;
    for (const auto& m : power_of(3, {0, 1}, 4)) h.insert(m);
    const std::vector<std::vector<std::vector<int>>> tails = {
        {{0, 0, 4, 0}, {0, 0, 0, 4}, {0, 0, 3, 1}, {0, 0, 1, 3}, {0, 0, 2, 2}},
        {{0, 0, 4, 0}, {0, 0, 3, 1}, {0, 0, 2, 2}, {0, 0, 0, 4}, {1, 0, 1, 2}, {0, 1, 1, 2}},
        {{0, 0, 4, 0}, {0, 0, 3, 1}, {0, 0, 1, 3}, {0, 0, 0, 4}, {2, 0, 0, 2}, {1, 1, 0, 2}, {0, 2, 0, 2}},
        {{0, 0, 4, 0}, {0, 0, 3, 1}, {0, 0, 1, 3}, {0, 0, 0, 4}, {3, 0, 0, 1}, {2, 1, 0, 1}, {1, 2, 0, 1}, {0, 3, 0, 1}},
    };
    for (const auto& e : tails[static_cast<std::size_t>(r - 10)]) h.insert(Monomial(e));
    return build(3, 4, h);
  }
  const int mid = static_cast<int>(binomial(static_cast<std::uint64_t>(d + 1), 2));
  if (r <= mid + 3) {
    const auto J = n3_range(d - 1, r - 3);
    Gens h;
    for (std::size_t i = 0; i < 3; ++i) h.insert(Monomial::pure_power(4, i, d));
    for (const auto& m : J.generators()) h.insert(m.times_variable(3));
    return build(3, d, h);
  }
  if (r == mid + 4) return type_b(3, d);
  const int i = top + 3 - r;
  for (const auto& m : power_of(3, {1, 2, 3}, d)) {
    if (m[1] >= 1 && m[1] < d) g.insert(m);
  }
  for (const auto& m : power_of(3, {2, 3}, d - i)) g.insert(times(x0k(i), m));
  return build(3, d, g);
}

}  // namespace

std::vector<std::string> family_names() {
  return {"interval", "rho-max", "two-block", "type-b", "trivial", "d4-r10", "n3-range"};
}

FamilyMember family(std::string_view name, const FamilyParams& p) {
  if (name == "interval") {
    if (p.n != 0 && p.n != 2) invalid("interval is defined for n = 2");
    return {interval(p.d, p.r), true, true, true};
  }
  if (name == "rho-max") return {rho_max(p.n, p.d), true, true, std::nullopt};
  if (name == "two-block") return {two_block(p.n, p.d, p.h, p.m), true, true, true};
  if (name == "type-b") return {type_b(p.n, p.d), true, true, std::nullopt};
  if (name == "d4-r10") return {d4_r10(), true, true, true};
  if (name == "n3-range") {
    if (p.n != 0 && p.n != 3) invalid("n3-range is defined for n = 3");
    std::optional<bool> smooth;
    if (p.d == 4 && p.r == 10) smooth = true;
    return {n3_range(p.d, p.r), true, true, smooth};
  }
  if (name == "trivial") {
    if (p.n < 2) invalid("trivial needs n >= 2");
    Monomial m;
    if (p.m.empty()) {
      if (p.d < 2) invalid("trivial needs d >= 2 or an explicit m");
      m = Monomial::pure_power(nv_of(p.n), 0, p.d - 1);
    } else {
      if (p.m.size() != nv_of(p.n)) invalid("trivial needs m with n+1 exponents");
      m = Monomial(p.m);
      if (p.d != 0 && m.degree() != p.d - 1) invalid("trivial needs deg m = d-1");
    }
    auto ideal = trivial_system(p.n, m);
    std::optional<bool> togliatti;
    if (ideal.num_generators() <= generator_bound(ideal.n(), ideal.d())) togliatti = true;
    return {ideal, togliatti, std::nullopt, trivial_smoothness_classifier(p.n, ideal.d(), m)};
  }
  invalid("unknown family '" + std::string(name) + "'");
}

}  // namespace togliatti
