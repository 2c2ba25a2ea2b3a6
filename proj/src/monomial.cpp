#include "togliatti/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "togliatti/errors.hpp"

namespace togliatti {

std::string to_string(InputErrorKind kind) {
  switch (kind) {
    case InputErrorKind::malformed: return "malformed";
    case InputErrorKind::not_artinian: return "not artinian";
    case InputErrorKind::duplicate: return "duplicate";
    case InputErrorKind::inhomogeneous: return "inhomogeneous";
    case InputErrorKind::invalid_argument: return "invalid argument";
  }
  return "unknown";
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw InputError(InputErrorKind::malformed, "negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::pure_power(std::size_t num_vars, std::size_t var, int degree) {
  std::vector<int> e(num_vars, 0);
  e.at(var) = degree;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::is_pure_power() const { return support_size() == 1; }

std::size_t Monomial::support_size() const {
  return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(), [](int e) { return e > 0; }));
}

Monomial Monomial::times_variable(std::size_t var) const {
  Monomial out = *this;
  ++out.exps_.at(var);
  ++out.degree_;
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::permuted(std::span<const std::size_t> perm) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[perm[i]] = exps_[i];
  Monomial out;
  out.exps_ = std::move(e);
  out.degree_ = degree_;
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void fill_degree(std::size_t var, int remaining, std::vector<int>& cur, std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    cur[var] = a;
    fill_degree(var + 1, remaining - a, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree) {
  std::vector<Monomial> out;
  if (num_vars == 0 || degree < 0) return out;
  std::vector<int> cur(num_vars, 0);
  fill_degree(0, degree, cur, out);
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > static_cast<unsigned __int128>(UINT64_MAX)) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<Permutation> all_permutations(std::size_t k) {
  Permutation p(k);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool LatticePointSet::contains(const Monomial& m) const {
  return std::binary_search(points.begin(), points.end(), m, std::greater<>());
}

bool MonomialIdeal::has_generator(const Monomial& m) const {
  return std::binary_search(gens_.begin(), gens_.end(), m, std::greater<>());
}

std::vector<Monomial> MonomialIdeal::extra_generators() const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) {
    if (!g.is_pure_power()) out.push_back(g);
  }
  return out;
}

MonomialIdeal MonomialIdeal::permuted(std::span<const std::size_t> perm) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.permuted(perm));
  std::sort(gens.begin(), gens.end(), std::greater<>());
  return MonomialIdeal(n_, d_, std::move(gens));
}

MonomialIdeal MonomialIdeal::without(const Monomial& generator) const {
  if (generator.is_pure_power()) {
    throw InputError(InputErrorKind::not_artinian, "cannot remove pure power " + generator.to_string());
  }
  std::vector<Monomial> gens;
  for (const auto& g : gens_) {
    if (g != generator) gens.push_back(g);
  }
  if (gens.size() == gens_.size()) {
    throw InputError(InputErrorKind::invalid_argument, generator.to_string() + " is not a generator");
  }
  return MonomialIdeal(n_, d_, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += ',';
    out += g.to_string();
  }
  return out;
}

bool IdealOrder::operator()(const MonomialIdeal& a, const MonomialIdeal& b) const {
  if (a.n() != b.n()) return a.n() < b.n();
  if (a.d() != b.d()) return a.d() < b.d();
  if (a.num_generators() != b.num_generators()) return a.num_generators() < b.num_generators();
  return a.generators() > b.generators();
}

std::vector<Monomial> simplex_points_list(int n, int d) {
  if (n < 1) throw InputError(InputErrorKind::invalid_argument, "n must be >= 1");
  if (d < 1) throw InputError(InputErrorKind::invalid_argument, "d must be >= 1");
  return monomials_of_degree(static_cast<std::size_t>(n) + 1, d);
}

LatticePointSet simplex_points(int n, int d) { return LatticePointSet{n, d, simplex_points_list(n, d)}; }

MonomialIdeal make_ideal(int n, int d, const std::vector<std::vector<int>>& generators) {
  if (n < 1) throw InputError(InputErrorKind::invalid_argument, "n must be >= 1");
  std::vector<Monomial> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(n) + 1) {
      throw InputError(InputErrorKind::malformed, "exponent vector of length " + std::to_string(g.size()) +
                                                      ", expected " + std::to_string(n + 1));
    }
    gens.emplace_back(g);
  }
  return make_ideal(n, d, std::move(gens));
}

MonomialIdeal make_ideal(int n, int d, std::vector<Monomial> generators) {
  if (n < 1) throw InputError(InputErrorKind::invalid_argument, "n must be >= 1");
  if (d < 2) throw InputError(InputErrorKind::invalid_argument, "d must be >= 2");
  const std::size_t nv = static_cast<std::size_t>(n) + 1;
  for (const auto& g : generators) {
    if (g.num_vars() != nv) {
      throw InputError(InputErrorKind::malformed, "monomial " + g.to_string() + " has wrong number of variables");
    }
    if (g.degree() != d) {
      throw InputError(InputErrorKind::inhomogeneous,
                       "generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                           ", expected " + std::to_string(d));
    }
  }
  std::sort(generators.begin(), generators.end(), std::greater<>());
  if (auto it = std::adjacent_find(generators.begin(), generators.end()); it != generators.end()) {
    throw InputError(InputErrorKind::duplicate, "duplicate generator " + it->to_string());
  }
  for (std::size_t i = 0; i < nv; ++i) {
    auto p = Monomial::pure_power(nv, i, d);
    if (!std::binary_search(generators.begin(), generators.end(), p, std::greater<>())) {
      throw InputError(InputErrorKind::not_artinian, "not artinian: missing " + p.to_string());
    }
  }
  return MonomialIdeal(n, d, std::move(generators));
}

LatticePointSet inverse_system(const MonomialIdeal& ideal) {
  LatticePointSet out{ideal.n(), ideal.d(), {}};
  for (auto& p : simplex_points_list(ideal.n(), ideal.d())) {
    if (!ideal.has_generator(p)) out.points.push_back(std::move(p));
  }
  return out;
}

MonomialIdeal canonical_form(const MonomialIdeal& ideal) {
  std::optional<MonomialIdeal> best;
  for (const auto& perm : all_permutations(ideal.num_variables())) {
    auto candidate = ideal.permuted(perm);
    if (!best || candidate.generators() > best->generators()) best = std::move(candidate);
  }
  return *best;
}

std::optional<Monomial> is_trivial(const MonomialIdeal& ideal) {
  for (const auto& f : monomials_of_degree(ideal.num_variables(), ideal.d() - 1)) {
    bool all = true;
    for (std::size_t i = 0; i < ideal.num_variables() && all; ++i) {
      all = ideal.has_generator(f.times_variable(i));
    }
    if (all) return f;
  }
  return std::nullopt;
}

std::optional<std::size_t> is_trivial_type_b(const MonomialIdeal& ideal) {
  const auto extras = ideal.extra_generators();
  for (std::size_t j = 0; j < ideal.num_variables(); ++j) {
    if (std::all_of(extras.begin(), extras.end(), [j](const Monomial& m) { return m[j] >= 1; })) return j;
  }
  return std::nullopt;
}

MonomialIdeal trivial_system(int n, const Monomial& m) {
  const std::size_t nv = static_cast<std::size_t>(n) + 1;
  if (m.num_vars() != nv) throw InputError(InputErrorKind::malformed, "monomial has wrong number of variables");
  const int d = m.degree() + 1;
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < nv; ++i) {
    gens.push_back(Monomial::pure_power(nv, i, d));
    gens.push_back(m.times_variable(i));
  }
  std::sort(gens.begin(), gens.end(), std::greater<>());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return make_ideal(n, d, std::move(gens));
}

}  // namespace togliatti
