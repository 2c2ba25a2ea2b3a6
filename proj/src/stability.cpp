#include "togliatti/stability.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "togliatti/errors.hpp"

namespace togliatti {

std::string to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::stable: return "stable";
    case StabilityVerdict::properly_semistable: return "properly_semistable";
    case StabilityVerdict::unstable: return "unstable";
  }
  return "unknown";
}

int gcd_degree(std::span<const Monomial> J) {
  if (J.empty()) throw InputError(InputErrorKind::invalid_argument, "gcd of an empty set");
  Monomial g = J.front();
  for (const auto& m : J.subspan(1)) g = g.gcd(m);
  return g.degree();
}

namespace {

mpq_class value_of(std::size_t r, int d, std::size_t s, int d_J) {
  return mpq_class((d - d_J) * static_cast<long>(r) + d_J - static_cast<long>(s) * d);
}

}  // namespace

mpq_class subset_value(const MonomialIdeal& ideal, std::span<const Monomial> J) {
  if (J.size() < 2) throw InputError(InputErrorKind::invalid_argument, "subset must have at least two generators");
  for (const auto& m : J) {
    if (!ideal.has_generator(m)) throw InputError(InputErrorKind::invalid_argument, m.to_string() + " is not a generator");
  }
  return value_of(ideal.num_generators(), ideal.d(), J.size(), gcd_degree(J));
}

mpq_class slope_of_degrees(std::span<const int> degrees) {
  if (degrees.size() < 2) throw InputError(InputErrorKind::invalid_argument, "slope needs at least two generators");
  const long total = std::accumulate(degrees.begin(), degrees.end(), 0L);
  mpq_class q(-total, static_cast<long>(degrees.size()) - 1);
  q.canonicalize();
  return q;
}

mpq_class slope(std::size_t r, int d) {
  std::vector<int> degrees(r, d);
  return slope_of_degrees(degrees);
}

mpq_class slope(const MonomialIdeal& ideal) { return slope(ideal.num_generators(), ideal.d()); }

mpq_class subsheaf_slope(std::span<const int> subset_degrees, int d_J) {
  if (subset_degrees.size() < 2) throw InputError(InputErrorKind::invalid_argument, "subset must have at least two generators");
  const long total = std::accumulate(subset_degrees.begin(), subset_degrees.end(), 0L);
  mpq_class q(d_J - total, static_cast<long>(subset_degrees.size()) - 1);
  q.canonicalize();
  return q;
}

mpq_class brenner_margin(std::span<const int> all_degrees, std::span<const int> subset_degrees, int d_J) {
  return slope_of_degrees(all_degrees) - subsheaf_slope(subset_degrees, d_J);
}

namespace {

struct Accumulator {
  std::optional<SubsetWitness> best;
  std::optional<SubsetWitness> first_zero;

  void add(SubsetWitness w) {
    if (sgn(w.value) == 0 && !first_zero) first_zero = w;
    if (!best || w.value < best->value) best = std::move(w);
  }

  StabilityReport finish(const MonomialIdeal& ideal) {
    StabilityReport report;
    report.slope = slope(ideal);
    report.witness = best;
    if (best && sgn(best->value) < 0) {
      report.verdict = StabilityVerdict::unstable;
    } else if (first_zero) {
      report.verdict = StabilityVerdict::properly_semistable;
      report.equality_witness = first_zero;
    } else {
      report.verdict = StabilityVerdict::stable;
    }
    return report;
  }
};

void require_rank(const MonomialIdeal& ideal) {
  if (ideal.num_generators() < 3) {
    throw InputError(InputErrorKind::invalid_argument, "stability needs at least three generators (bundle rank >= 2)");
  }
}

}  // namespace

StabilityReport stability_class(const MonomialIdeal& ideal) {
  require_rank(ideal);
  const auto& gens = ideal.generators();
  std::set<std::vector<std::size_t>> seen;
  Accumulator acc;
  for (int k = ideal.d() - 1; k >= 1; --k) {
    for (const auto& g : monomials_of_degree(ideal.num_variables(), k)) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (g.divides(gens[i])) idx.push_back(i);
      }
      if (idx.size() < 2 || !seen.insert(idx).second) continue;
      SubsetWitness w;
      for (auto i : idx) w.subset.push_back(gens[i]);
      w.s = idx.size();
      w.d_J = gcd_degree(w.subset);
      w.value = value_of(gens.size(), ideal.d(), w.s, w.d_J);
      acc.add(std::move(w));
    }
  }
  // Subsets with d_J = 0 have value d (r - s) > 0, smallest when s = r - 1.
  // Dropping the last generator gives such a subset (or a better one).
  SubsetWitness w;
  w.subset.assign(gens.begin(), gens.end() - 1);
  w.s = w.subset.size();
  w.d_J = gcd_degree(w.subset);
  w.value = value_of(gens.size(), ideal.d(), w.s, w.d_J);
  acc.add(std::move(w));
  return acc.finish(ideal);
}

StabilityReport stability_oracle(const MonomialIdeal& ideal) {
  require_rank(ideal);
  const std::size_t r = ideal.num_generators();
  if (r > 14) throw GuardError("stability oracle limited to 14 generators");
  const auto& gens = ideal.generators();
  Accumulator acc;
  const std::uint32_t full = (1u << r) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    SubsetWitness w;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1u) w.subset.push_back(gens[i]);
    }
    w.s = w.subset.size();
    w.d_J = gcd_degree(w.subset);
    w.value = value_of(r, ideal.d(), w.s, w.d_J);
    acc.add(std::move(w));
  }
  return acc.finish(ideal);
}

namespace {

nlohmann::json rational_json(const mpq_class& q) {
  return {{"num", q.get_num().get_si()}, {"den", q.get_den().get_si()}};
}

nlohmann::json witness_json(const SubsetWitness& w) {
  auto subset = nlohmann::json::array();
  for (const auto& m : w.subset) subset.push_back(std::vector<int>(m.exponents().begin(), m.exponents().end()));
  return {{"subset", subset}, {"s", w.s}, {"d_J", w.d_J}, {"value", rational_json(w.value)}};
}

}  // namespace

nlohmann::json to_json(const StabilityReport& report) {
  nlohmann::json j;
  j["verdict"] = to_string(report.verdict);
  j["slope_of_E"] = rational_json(report.slope);
  if (report.witness) {
    j["witness"] = witness_json(*report.witness);
    const auto& w = *report.witness;
    std::vector<int> degs(w.s, 0);
    for (std::size_t i = 0; i < w.s; ++i) degs[i] = w.subset[i].degree();
    j["witness"]["slope_of_F"] = rational_json(subsheaf_slope(degs, w.d_J));
  } else {
    j["witness"] = nullptr;
  }
  j["equality_witness"] = report.equality_witness ? witness_json(*report.equality_witness) : nlohmann::json(nullptr);
  return j;
}

}  // namespace togliatti
