#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "togliatti/errors.hpp"
#include "togliatti/io.hpp"
#include "togliatti/smoothness.hpp"
#include "togliatti/stability.hpp"
#include "togliatti/survey.hpp"

namespace togliatti {

namespace {

struct Report {
  TargetResult result;
  explicit Report(std::string name) {
    result.name = std::move(name);
    result.passed = true;
  }
  void line(std::string s) { result.lines.push_back(std::move(s)); }
  // Records a check; failing checks are marked so they stand out in the log.
  bool check(bool ok, const std::string& what) {
    line((ok ? "ok    " : "FAIL  ") + what);
    if (!ok) result.passed = false;
    return ok;
  }
};

FamilyParams params(int n, int d, int r = 0, int h = 0, std::vector<int> m = {}) {
  FamilyParams p;
  p.n = n;
  p.d = d;
  p.r = r;
  p.h = h;
  p.m = std::move(m);
  return p;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string key_of(const MonomialIdeal& I) { return canonical_form(I).to_string(); }

std::set<std::string> keys(const std::vector<MonomialIdeal>& v) {
  std::set<std::string> out;
  for (const auto& I : v) out.insert(key_of(I));
  return out;
}

std::set<std::string> keys(const std::vector<const OrbitRecord*>& v) {
  std::set<std::string> out;
  for (const auto* o : v) out.insert(key_of(o->ideal));
  return out;
}

// Orbit representatives are already canonical, so string sets compare orbits.
bool same_orbits(Report& rep, const std::string& label, const std::set<std::string>& found,
                 const std::set<std::string>& expected) {
  bool ok = found == expected;
  rep.check(ok, label + ": " + std::to_string(found.size()) + " orbit(s), expected " +
                    std::to_string(expected.size()));
  for (const auto& k : expected) {
    if (!found.count(k)) rep.line("        missing    " + k);
  }
  for (const auto& k : found) {
    if (!expected.count(k)) rep.line("        unexpected " + k);
  }
  if (ok) {
    for (const auto& k : found) rep.line("        " + k);
  }
  return ok;
}

// ---------------------------------------------------------------------------
// Polynomial helpers for certificate comparison.

Polynomial from_certificate(const std::vector<Monomial>& monomials, const linalg::IntVector& coeffs,
                            std::size_t num_vars) {
  Polynomial p;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    std::vector<int> e(monomials[k].exponents().begin(), monomials[k].exponents().end());
    e.resize(num_vars, 0);
    p[e] = coeffs[k];
  }
  return p;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

// p = scale * q for some nonzero rational scale.
std::optional<mpq_class> proportional(const Polynomial& p, const Polynomial& q) {
  if (p.empty() || q.empty() || p.size() != q.size()) return std::nullopt;
  const mpq_class scale(p.begin()->second, q.begin()->second);
  mpq_class s = scale;
  s.canonicalize();
  for (const auto& [e, c] : p) {
    auto it = q.find(e);
    if (it == q.end()) return std::nullopt;
    if (mpq_class(c) != s * mpq_class(it->second)) return std::nullopt;
  }
  return s;
}

// Renames x_i to x_perm[i] on the first perm.size() variables.
Polynomial renamed(const Polynomial& p, const Permutation& perm) {
  Polynomial out;
  for (const auto& [e, c] : p) {
    std::vector<int> f(e);
    for (std::size_t i = 0; i < perm.size(); ++i) f[perm[i]] = e[i];
    out[f] = c;
  }
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

mpz_class evaluate(const Polynomial& p, const Monomial& point) {
  mpz_class total = 0;
  for (const auto& [e, c] : p) {
    mpz_class term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const int x = i < point.num_vars() ? point[i] : 0;
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(e[i]));
      term *= pw;
    }
    total += term;
  }
  return total;
}

std::string monomial_text(const std::vector<int>& e) { return Monomial(e).to_string(); }

std::size_t zeros_on(const Polynomial& p, const LatticePointSet& A) {
  std::size_t zeros = 0;
  for (const auto& pt : A.points) zeros += sgn(evaluate(p, pt)) == 0;
  return zeros;
}

// ---------------------------------------------------------------------------

TargetResult certificate_hyperquadric() {
  Report rep("certificate-hyperquadric");
  const auto& fx = fixtures().at("hyperquadric");
  const auto I = parse_inline_ideal(fx.at("ideal").get<std::string>());
  const auto space = togliatti_kernel(I);
  rep.check(space.dimension() == 1, "kernel dimension " + std::to_string(space.dimension()) + " (expected 1)");
  if (space.dimension() != 1) return rep.result;
  const auto cert = from_certificate(space.monomials, space.basis[0], 4);
  const auto printed = parse_polynomial(fx.at("certificate").get<std::string>(), 4);
  rep.line("      computed " + polynomial_text(space.monomials, space.basis[0]));
  const auto scale = proportional(cert, printed);
  rep.check(scale.has_value(), "proportional to the printed quadric" + (scale ? " (scale " + scale->get_str() + ")" : ""));
  std::size_t nonzero = 0;
  for (const auto& g : I.generators()) nonzero += sgn(evaluate(printed, g)) != 0;
  rep.check(nonzero == I.num_generators(), "nonzero at all " + std::to_string(I.num_generators()) +
                                               " removed points (" + std::to_string(nonzero) + ")");
  return rep.result;
}

TargetResult certificate_plane_curves() {
  Report rep("certificate-plane-curves");
  {
    const auto& fx = fixtures().at("plane-quartic");
    const auto I = parse_inline_ideal(fx.at("ideal").get<std::string>());
    const auto space = togliatti_kernel(I);
    rep.check(space.dimension() == 1, "(2,4) exception: kernel dimension " + std::to_string(space.dimension()));
    if (space.dimension() == 1) {
      Polynomial product{{{0, 0, 0}, 1}};
      for (const auto& f : fx.at("factors")) product = multiply(product, parse_polynomial(f.get<std::string>(), 3));
      const auto cert = from_certificate(space.monomials, space.basis[0], 3);
      rep.line("      computed " + polynomial_text(space.monomials, space.basis[0]));
      const auto scale = proportional(cert, product);
      rep.check(scale.has_value(), "(2,4) certificate proportional to the printed product of a line and a conic");
    }
  }

  const auto& fx = fixtures().at("plane-quintic");
  const auto I = parse_inline_ideal(fx.at("ideal").get<std::string>());
  const auto A = inverse_system(I);
  const auto space = togliatti_kernel(I);
  rep.check(space.dimension() == 1, "(2,5) exception: kernel dimension " + std::to_string(space.dimension()));
  if (space.dimension() != 1) return rep.result;
  const std::size_t nv = fx.at("printed_vars").get<std::size_t>();
  const auto printed = parse_polynomial(fx.at("printed").get<std::string>(), nv);
  const auto cert = from_certificate(space.monomials, space.basis[0], nv);
  rep.line("      computed " + polynomial_text(space.monomials, space.basis[0]));

  // Align coordinates and scale, keeping the alignment with fewest mismatches.
  struct Alignment {
    Permutation perm;
    mpq_class scale;
    std::vector<std::vector<int>> mismatches;
  };
  std::optional<Alignment> best;
  const std::vector<int> lead{4, 0, 0, 0};
  for (const auto& perm : all_permutations(3)) {
    const auto c = renamed(cert, perm);
    if (!c.count(lead) || !printed.count(lead)) continue;
    mpq_class scale(printed.at(lead), c.at(lead));
    scale.canonicalize();
    Alignment al{perm, scale, {}};
    std::set<std::vector<int>> support;
    for (const auto& [e, _] : c) support.insert(e);
    for (const auto& [e, _] : printed) support.insert(e);
    for (const auto& e : support) {
      const mpq_class lhs = printed.count(e) ? mpq_class(printed.at(e)) : mpq_class(0);
      const mpq_class rhs = c.count(e) ? scale * mpq_class(c.at(e)) : mpq_class(0);
      if (lhs != rhs) al.mismatches.push_back(e);
    }
    if (!best || al.mismatches.size() < best->mismatches.size()) best = std::move(al);
  }
  if (!rep.check(best.has_value(), "printed form aligned with the computed certificate")) return rep.result;

  std::ostringstream perm_text;
  for (std::size_t i = 0; i < 3; ++i) perm_text << (i ? " " : "") << "x" << i << "->x" << best->perm[i];
  rep.line("      alignment " + perm_text.str() + ", scale " + best->scale.get_str());
  const auto aligned = renamed(cert, best->perm);
  for (const auto& e : best->mismatches) {
    const std::string printed_c = printed.count(e) ? printed.at(e).get_str() : "0";
    const std::string computed_c = aligned.count(e) ? mpq_class(best->scale * aligned.at(e)).get_str() : "0";
    rep.line("      mismatch " + monomial_text(e) + ": printed " + printed_c + ", computed " + computed_c);
  }

  const auto typo = parse_monomial(fx.at("suspected_typo").at("printed").get<std::string>(), nv);
  const auto meant = parse_monomial(fx.at("suspected_typo").at("meant").get<std::string>(), nv);
  const std::vector<int> typo_e(typo.exponents().begin(), typo.exponents().end());
  const std::vector<int> meant_e(meant.exponents().begin(), meant.exponents().end());
  const bool typo_reported = std::count(best->mismatches.begin(), best->mismatches.end(), typo_e) == 1 &&
                             printed.count(typo_e) && aligned.count(meant_e) &&
                             mpq_class(printed.at(typo_e)) == best->scale * aligned.at(meant_e);
  rep.check(typo_reported, "suspected typo reported: " + typo.to_string() + " stands for " + meant.to_string());

  // Fix the typo only, then decide each remaining mismatch by direct
  // evaluation of the printed form on A_I.
  Polynomial fixed = printed;
  if (fixed.count(typo_e)) {
    fixed[meant_e] += fixed[typo_e];
    fixed.erase(typo_e);
  }
  const auto back = inverse(best->perm);
  const auto fixed_in_ideal_coords = renamed(fixed, back);
  const std::size_t z_fixed = zeros_on(fixed_in_ideal_coords, A);
  Polynomial corrected = fixed;
  std::size_t others = 0;
  for (const auto& e : best->mismatches) {
    if (e == typo_e || e == meant_e) continue;
    ++others;
    mpq_class v = aligned.count(e) ? best->scale * aligned.at(e) : mpq_class(0);
    if (v.get_den() != 1) continue;
    corrected[e] = v.get_num();
    if (sgn(corrected[e]) == 0) corrected.erase(e);
  }
  const std::size_t z_corrected = zeros_on(renamed(corrected, back), A);
  rep.line("      printed form with typo fixed vanishes at " + std::to_string(z_fixed) + "/" +
           std::to_string(A.size()) + " points of A_I");
  rep.check(z_corrected == A.size(), "with all " + std::to_string(best->mismatches.size()) +
                                         " mismatches replaced it vanishes on all " + std::to_string(A.size()) +
                                         " points of A_I");
  if (others > 0) {
    rep.check(z_fixed < A.size(), std::to_string(others) +
                                      " further mismatch(es) confirmed as printing errors: the typo-fixed form "
                                      "does not vanish on A_I");
  }
  return rep.result;
}

MonomialIdeal trivial_minimum(int n, int d) {
  return canonical_form(trivial_system(n, Monomial::pure_power(static_cast<std::size_t>(n) + 1, 0, d - 1)));
}

TargetResult thm_main_n2d5(unsigned threads) {
  Report rep("thm-3-main-n2d5");
  const auto& c = census(2, 5, 2, threads);
  const auto exceptions = fixture_ideals("minimum-exceptions");
  const auto five = exceptions[1];
  same_orbits(rep, "(2,5) minimal systems with mu=5", keys(c.minimal()), keys({trivial_minimum(2, 5), five}));
  std::vector<const OrbitRecord*> smooth_nontrivial;
  for (const auto* o : c.minimal_smooth()) {
    if (!o->trivial) smooth_nontrivial.push_back(o);
  }
  same_orbits(rep, "smooth non-trivial among them", keys(smooth_nontrivial), keys({five}));
  const auto& c4 = census(2, 5, 1, threads);
  rep.check(std::none_of(c4.orbits.begin(), c4.orbits.end(),
                         [](const OrbitRecord& o) { return o.status == TogliattiStatus::togliatti; }),
            "no Togliatti system with mu=4 (" + std::to_string(c4.orbits.size()) + " orbits)");
  return rep.result;
}

TargetResult minimum_generators(unsigned threads) {
  Report rep("minimum-generators");
  const auto exceptions = fixture_ideals("minimum-exceptions");
  const auto& smooth_flags = fixtures().at("minimum-exceptions").at("smooth");
  const std::vector<std::pair<int, int>> cases{{2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 5}, {4, 4}};
  for (auto [n, d] : cases) {
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
    const auto& below = census(n, d, n - 1, threads);
    std::size_t togliatti = 0;
    for (const auto& o : below.orbits) togliatti += o.status == TogliattiStatus::togliatti;
    rep.check(togliatti == 0, tag + " mu=" + std::to_string(2 * n) + ": " + std::to_string(below.orbits.size()) +
                                  " orbits, " + std::to_string(togliatti) + " Togliatti");

    const auto& at = census(n, d, n, threads);
    std::vector<MonomialIdeal> expected{trivial_minimum(n, d)};
    for (const auto& e : exceptions) {
      if (e.n() == n && e.d() == d) expected.push_back(e);
    }
    same_orbits(rep, tag + " mu=" + std::to_string(2 * n + 1) + " minimal", keys(at.minimal()), keys(expected));
    for (std::size_t k = 0; k < exceptions.size(); ++k) {
      const auto& e = exceptions[k];
      if (e.n() != n || e.d() != d) continue;
      const bool want = smooth_flags[k].get<bool>();
      const bool got = is_smooth(e).is_smooth;
      rep.check(got == want, tag + " exception smooth: " + yes_no(got) + " (expected " + yes_no(want) + ")");
    }
  }
  return rep.result;
}

TargetResult smooth_next_to_minimum(unsigned threads) {
  Report rep("smooth-next-to-minimum");
  const auto listed = fixture_ideals("smooth-next-to-minimum");
  for (int d = 4; d <= 7; ++d) {
    const auto& c = census(2, d, 3, threads);
    std::vector<const OrbitRecord*> nontrivial;
    std::size_t trivial = 0;
    for (const auto* o : c.minimal_smooth()) {
      if (o->trivial) {
        ++trivial;
      } else {
        nontrivial.push_back(o);
      }
    }
    std::vector<MonomialIdeal> expected;
    for (const auto& I : listed) {
      if (I.d() == d) expected.push_back(I);
    }
    same_orbits(rep, "(2," + std::to_string(d) + ") mu=6 smooth minimal non-trivial", keys(nontrivial),
                keys(expected));
    rep.line("        plus " + std::to_string(trivial) + " trivial orbit(s)");
  }
  const auto& c = census(3, 4, 4, threads);
  const auto sm = c.minimal_smooth();
  const auto nontrivial = std::count_if(sm.begin(), sm.end(), [](const OrbitRecord* o) { return !o->trivial; });
  rep.check(nontrivial == 0, "(3,4) mu=8: " + std::to_string(sm.size()) + " smooth minimal orbit(s), " +
                                 std::to_string(nontrivial) + " non-trivial");
  return rep.result;
}

TargetResult interval_family() {
  Report rep("interval-family");
  for (int d = 5; d <= 7; ++d) {
    for (int r = 5; r <= d + 1; ++r) {
      const auto f = family("interval", params(2, d, r));
      const auto t = togliatti_report(f.ideal);
      const bool smooth = t.is_togliatti && is_smooth(f.ideal).is_smooth;
      const bool ok = f.ideal.num_generators() == static_cast<std::size_t>(r) && t.is_togliatti && t.is_minimal &&
                      smooth;
      rep.check(ok, "d=" + std::to_string(d) + " r=" + std::to_string(r) + " " + f.ideal.to_string() +
                        ": togliatti " + yes_no(t.is_togliatti) + ", minimal " + yes_no(t.is_minimal) + ", smooth " +
                        yes_no(smooth));
    }
    rep.check(generator_bound(2, d) == static_cast<std::uint64_t>(d) + 1,
              "d=" + std::to_string(d) + " generator bound is d+1, so no system exceeds mu=d+1");
  }
  return rep.result;
}

TargetResult gap_n3d4(unsigned threads) {
  Report rep("gap-2n3-n3d4");
  const auto& c = census(3, 4, 5, threads);
  rep.line("      (3,4) mu=9: " + std::to_string(c.raw_subsets) + " raw subsets, " + std::to_string(c.orbits.size()) +
           " orbits");
  same_orbits(rep, "minimal", keys(c.minimal()), keys(fixture_ideals("gap-n3d4")));
  rep.check(c.minimal_smooth().empty(), "smooth minimal: " + std::to_string(c.minimal_smooth().size()));
  return rep.result;
}

TargetResult cubic_ladder(unsigned threads) {
  Report rep("cubic-ladder-n4");
  for (int extra = 0; extra <= 6; ++extra) {
    const int mu = 5 + extra;
    const auto& c = census(4, 3, extra, threads);
    const std::string tag = "(4,3) mu=" + std::to_string(mu) + " minimal";
    std::set<std::string> expected;
    if (mu == 9) expected = keys(fixture_ideals("cubic-ladder-n4/mu9"));
    if (mu == 10) expected = keys(fixture_ideals("cubic-ladder-n4/mu10"));
    same_orbits(rep, tag + " (" + std::to_string(c.orbits.size()) + " orbits)", keys(c.minimal()), expected);
    for (const auto* o : c.minimal()) {
      rep.check(o->trivial && !o->smooth, "  trivial and not smooth: " + o->ideal.to_string());
    }
  }
  return rep.result;
}

TargetResult stability_thm(unsigned threads) {
  Report rep("stability-thm");
  const auto stable = keys(fixture_ideals("stability/stable"));
  const auto semistable = keys(fixture_ideals("stability/properly_semistable"));
  const auto& fx = fixtures().at("stability");

  auto verdict_line = [&](const MonomialIdeal& I, StabilityVerdict want, const std::string& label) {
    const auto s = stability_class(I);
    rep.check(s.verdict == want, label + " " + I.to_string() + ": " + to_string(s.verdict) + ", slope " +
                                     s.slope.get_str());
  };
  int k = 1;
  for (const auto& I : fixture_ideals("stability/stable")) verdict_line(I, StabilityVerdict::stable, "I" + std::to_string(k++));
  for (const auto& I : fixture_ideals("stability/properly_semistable")) {
    verdict_line(I, StabilityVerdict::properly_semistable, "I" + std::to_string(k++));
  }

  // equality subset from the proof
  {
    const auto& eq = fx.at("equality_subset");
    const auto I = parse_inline_ideal(eq.at("ideal").get<std::string>());
    std::vector<Monomial> J;
    for (const auto& s : eq.at("subset")) J.push_back(parse_monomial(s.get<std::string>(), 3));
    const auto v = subset_value(I, J);
    rep.check(v == 0, "equality subset value " + v.get_str() + " (expected 0)");
  }
  // worked examples
  {
    const auto I = parse_inline_ideal(fx.at("example_stable").get<std::string>());
    verdict_line(I, StabilityVerdict::stable, "example");
    const auto& ex = fx.at("example_unstable");
    const auto U = parse_inline_ideal(ex.at("ideal").get<std::string>());
    const auto s = stability_class(U);
    std::vector<Monomial> J;
    std::vector<int> degs;
    for (const auto& m : ex.at("subset")) {
      J.push_back(parse_monomial(m.get<std::string>(), 3));
      degs.push_back(J.back().degree());
    }
    const auto sub = subsheaf_slope(degs, gcd_degree(J));
    const mpq_class want_slope(ex.at("slope").get<std::string>());
    const mpq_class want_sub(ex.at("subsheaf_slope").get<std::string>());
    rep.check(s.slope == want_slope && sub == want_sub && s.verdict == StabilityVerdict::unstable,
              "example " + U.to_string() + ": slope " + s.slope.get_str() + ", subsheaf slope " + sub.get_str() +
                  ", " + to_string(s.verdict));
  }

  // every smooth minimal n=2 system with mu <= 6 and 4 <= d <= 7
  std::size_t seen = 0, trivial_unstable = 0, trivial_total = 0;
  for (int d = 4; d <= 7; ++d) {
    for (int extra = 2; extra <= 3; ++extra) {
      const auto& c = census(2, d, extra, threads);
      for (const auto* o : c.minimal_smooth()) {
        ++seen;
        const auto key = key_of(o->ideal);
        const auto v = stability_class(o->ideal).verdict;
        StabilityVerdict want = StabilityVerdict::unstable;
        if (stable.count(key)) want = StabilityVerdict::stable;
        if (semistable.count(key)) want = StabilityVerdict::properly_semistable;
        if (o->trivial) {
          ++trivial_total;
          trivial_unstable += v == StabilityVerdict::unstable;
        }
        if (v != want || (o->trivial && want != StabilityVerdict::unstable)) {
          rep.check(false, "(2," + std::to_string(d) + ") " + o->ideal.to_string() + ": " + to_string(v) +
                               ", expected " + to_string(want));
        }
      }
    }
  }
  rep.check(trivial_unstable == trivial_total,
            "trivial smooth minimal systems unstable: " + std::to_string(trivial_unstable) + "/" +
                std::to_string(trivial_total));
  rep.line("      checked " + std::to_string(seen) + " smooth minimal orbits with n=2, mu<=6, 4<=d<=7");
  return rep.result;
}

TargetResult n3_range_family() {
  Report rep("n3-range");
  for (int d = 4; d <= 5; ++d) {
    const int top = static_cast<int>(binomial(static_cast<std::uint64_t>(d + 2), 2));
    for (int r = 7; r <= top; ++r) {
      const auto f = family("n3-range", params(3, d, r));
      const auto t = togliatti_report(f.ideal);
      const bool ok = f.ideal.num_generators() == static_cast<std::size_t>(r) && t.is_togliatti && t.is_minimal;
      std::string text = "d=" + std::to_string(d) + " r=" + std::to_string(r) + ": togliatti " +
                         yes_no(t.is_togliatti) + ", minimal " + yes_no(t.is_minimal);
      if (!t.blocking_points.empty()) text += " (removable: " + t.blocking_points.front().to_string() + ")";
      rep.check(ok, text);
    }
  }
  return rep.result;
}

TargetResult two_block_family() {
  Report rep("two-block-family");
  auto member = [&](int n, int d, int h, const Monomial& m) {
    std::vector<int> e(static_cast<std::size_t>(n) - 1);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = m[i];
    const auto f = family("two-block", params(n, d, 0, h, e));
    const auto t = togliatti_report(f.ideal);
    const bool smooth = t.is_togliatti && is_smooth(f.ideal).is_smooth;
    const auto base = binomial(static_cast<std::uint64_t>(d + n - 2), static_cast<std::uint64_t>(n - 2));
    const bool ok = f.ideal.num_generators() == base + 2 + static_cast<std::size_t>(d - h + 1) && t.is_togliatti &&
                    t.is_minimal && smooth;
    rep.check(ok, "n=" + std::to_string(n) + " d=" + std::to_string(d) + " m'=" + m.to_string() + " r=" +
                      std::to_string(f.ideal.num_generators()) + ": togliatti " + yes_no(t.is_togliatti) +
                      ", minimal " + yes_no(t.is_minimal) + ", smooth " + yes_no(smooth));
  };
  for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}}) {
    for (int h = 2; h <= d - n + 1; ++h) {
      for (const auto& m : monomials_of_degree(static_cast<std::size_t>(n) - 1, h)) member(n, d, h, m);
    }
  }
  return rep.result;
}

TargetResult generator_bounds() {
  Report rep("generator-bounds");
  rep.check(closed_form_mu_s(4, 3) == 13, "closed form mu_s(4,3) = " + std::to_string(closed_form_mu_s(4, 3)));
  rep.check(closed_form_mu_s(3, 2) == 6, "closed form mu_s(3,2) = " + std::to_string(closed_form_mu_s(3, 2)));
  rep.check(closed_form_mu_s(4, 2) == 9, "closed form mu_s(4,2) = " + std::to_string(closed_form_mu_s(4, 2)));

  const auto b25 = mu_bounds(2, 5);
  rep.check(b25.mu.value == 5u && b25.mu_s.value == 5u && b25.rho.value == 6u && b25.rho_s.value == 6u,
            "bounds (2,5): mu = mu_s = 5, rho = rho_s = 6");
  const auto b34 = mu_bounds(3, 4);
  rep.check(b34.mu.value == 7u && b34.mu_s.value == 7u && b34.rho.value == 15u, "bounds (3,4): mu = mu_s = 7, rho = 15");
  const auto b42 = mu_bounds(4, 2);
  rep.check(b42.mu_s.value == 9u && b42.rho_s.value == 9u, "bounds (4,2): mu_s = rho_s = 9");

  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 4}, {2, 5}, {2, 6}}) {
    const auto b = mu_bounds(n, d, 2'000'000);
    const auto j = to_json(b);
    bool ok = true;
    for (const char* k : {"mu", "mu_s", "rho", "rho_s"}) {
      const auto& e = j.at(k);
      if (e.contains("note") && e.at("note").get<std::string>().find("enumeration") != std::string::npos) ok = false;
    }
    rep.check(ok, "enumeration agrees with asserted bounds (" + std::to_string(n) + "," + std::to_string(d) +
                      "): " + j.dump());
  }
  for (int d = 4; d <= 7; ++d) {
    const auto& c = census(2, d, 1);
    const bool none = std::none_of(c.orbits.begin(), c.orbits.end(),
                                   [](const OrbitRecord& o) { return o.status == TogliattiStatus::togliatti; });
    rep.check(none, "(2," + std::to_string(d) + ") no Togliatti system with mu=4, so mu=5");
  }

  auto family_line = [&](const std::string& name, const FamilyParams& p, std::size_t want_r) {
    const auto f = family(name, p);
    const auto t = togliatti_report(f.ideal);
    bool ok = f.ideal.num_generators() == want_r;
    std::string text = name + " " + f.ideal.to_string() + ": r=" + std::to_string(f.ideal.num_generators());
    if (f.togliatti) ok = ok && t.is_togliatti == *f.togliatti;
    if (f.minimal) ok = ok && t.is_minimal == *f.minimal;
    if (f.smooth) {
      const bool s = is_smooth(f.ideal).is_smooth;
      ok = ok && s == *f.smooth;
      text += ", smooth " + yes_no(s);
    }
    rep.check(ok, text + ", togliatti " + yes_no(t.is_togliatti) + ", minimal " + yes_no(t.is_minimal));
  };
  family_line("d4-r10", params(3, 4), 10);
  for (int d = 4; d <= 6; ++d) family_line("rho-max", params(2, d), static_cast<std::size_t>(d) + 1);
  family_line("rho-max", params(3, 4), 15);
  family_line("rho-max", params(3, 5), 21);
  family_line("type-b", params(3, 4), 14);
  return rep.result;
}

struct Registered {
  TargetInfo info;
  std::function<TargetResult(unsigned)> run;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> r{
      {{"certificate-hyperquadric", "unique quadric through A_I for (x0,x1)^3+(x2,x3)^3"},
       [](unsigned) { return certificate_hyperquadric(); }},
      {{"certificate-plane-curves", "degree d-1 curves for the (2,4) and (2,5) exceptions"},
       [](unsigned) { return certificate_plane_curves(); }},
      {{"thm-3-main-n2d5", "mu=5 minimal systems for n=2, d=5"}, thm_main_n2d5},
      {{"minimum-generators", "mu=2n+1 classification over seven (n,d)"}, minimum_generators},
      {{"smooth-next-to-minimum", "mu=2n+2 smooth minimal systems"}, smooth_next_to_minimum},
      {{"interval-family", "every 5 <= r <= d+1 is attained by a smooth minimal system"},
       [](unsigned) { return interval_family(); }},
      {{"gap-2n3-n3d4", "mu=9 minimal systems for n=3, d=4"}, gap_n3d4},
      {{"cubic-ladder-n4", "minimal systems of cubics in five variables with mu <= 11"}, cubic_ladder},
      {{"stability-thm", "syzygy bundle stability of smooth minimal systems with mu <= 6"}, stability_thm},
      {{"generator-bounds", "closed forms for mu, rho and the named families"},
       [](unsigned) { return generator_bounds(); }},
      {{"n3-range", "n=3 systems for every r from 7 to C(d+2,2)"}, [](unsigned) { return n3_range_family(); }},
      {{"two-block-family", "smooth systems from (x0,...,x_{n-2})^d + (x_{n-1},x_n)^{d-h}m'"},
       [](unsigned) { return two_block_family(); }},
  };
  return r;
}

}  // namespace

std::vector<TargetInfo> list_targets() {
  std::vector<TargetInfo> out;
  for (const auto& r : registry()) out.push_back(r.info);
  return out;
}

TargetResult reproduce(std::string_view name, unsigned threads) {
  for (const auto& r : registry()) {
    if (r.info.name == name) return r.run(threads);
  }
  throw UnknownTarget("unknown target '" + std::string(name) + "'");
}

}  // namespace togliatti
