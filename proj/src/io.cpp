#include "togliatti/io.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace togliatti {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError(InputErrorKind::malformed,
                 "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                     message),
      line_(line),
      column_(column) {}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// var index -> exponent, before the variable count is known
using RawMonomial = std::map<std::size_t, int>;

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    auto [line, column] = line_column(text_, pos_);
    throw ParseError(line, column, message);
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    if (!at_digit()) fail("expected a number");
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    return out;
  }

  int small_number() {
    const auto s = digits();
    if (s.size() > 6) fail("number too large");
    return std::stoi(s);
  }

  // factor := 'x' index ('^' exponent)?
  void factor(RawMonomial& m) {
    if (!accept('x')) fail("expected a variable such as x0");
    if (!at_digit()) fail("expected a variable index after 'x'");
    const int var = small_number();
    int e = 1;
    if (accept('^')) e = small_number();
    m[static_cast<std::size_t>(var)] += e;
  }

  // monomial := factor ('*' factor)*
  RawMonomial monomial() {
    RawMonomial m;
    factor(m);
    while (accept('*')) factor(m);
    return m;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<int> to_exponents(const RawMonomial& raw, std::size_t num_vars) {
  std::vector<int> e(num_vars, 0);
  for (const auto& [var, exp] : raw) {
    if (var >= num_vars) {
      throw InputError(InputErrorKind::malformed,
                       "variable x" + std::to_string(var) + " out of range for " + std::to_string(num_vars) +
                           " variables");
    }
    e[var] = exp;
  }
  return e;
}

std::size_t required_vars(const RawMonomial& raw) { return raw.empty() ? 0 : raw.rbegin()->first + 1; }

}  // namespace

Monomial parse_monomial(std::string_view text, std::size_t num_vars) {
  Scanner sc(text);
  auto raw = sc.monomial();
  if (!sc.done()) sc.fail("unexpected character");
  return Monomial(to_exponents(raw, num_vars));
}

MonomialIdeal parse_inline_ideal(std::string_view text, std::optional<int> n) {
  Scanner sc(text);
  if (sc.done()) sc.fail("empty ideal");
  std::vector<RawMonomial> raws;
  std::size_t needed = 0;
  do {
    raws.push_back(sc.monomial());
    needed = std::max(needed, required_vars(raws.back()));
  } while (sc.accept(','));
  if (!sc.done()) sc.fail("expected ',' between monomials");

  const std::size_t nv = n ? static_cast<std::size_t>(*n) + 1 : needed;
  if (n && *n < 1) throw InputError(InputErrorKind::invalid_argument, "n must be at least 1");
  if (nv < 2) throw InputError(InputErrorKind::malformed, "need at least two variables");
  std::vector<Monomial> gens;
  for (const auto& r : raws) gens.emplace_back(to_exponents(r, nv));
  const int d = gens.front().degree();
  return make_ideal(static_cast<int>(nv) - 1, d, std::move(gens));
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
    throw InputError(InputErrorKind::malformed, "ideal JSON needs a \"generators\" array");
  }
  const auto& gj = j["generators"];
  if (gj.empty()) throw InputError(InputErrorKind::malformed, "no generators");
  std::optional<int> n;
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw InputError(InputErrorKind::malformed, "\"n\" must be an integer");
    n = j["n"].get<int>();
  }
  std::vector<Monomial> gens;
  if (gj.front().is_string()) {
    std::string joined;
    for (const auto& g : gj) {
      if (!g.is_string()) throw InputError(InputErrorKind::malformed, "mixed generator formats");
      if (!joined.empty()) joined += ',';
      joined += g.get<std::string>();
    }
    auto ideal = parse_inline_ideal(joined, n);
    if (j.contains("d") && j["d"] != ideal.d()) {
      throw InputError(InputErrorKind::inhomogeneous, "generators do not have degree " + j["d"].dump());
    }
    return ideal;
  }
  std::vector<std::vector<int>> exps;
  for (const auto& g : gj) {
    if (!g.is_array()) throw InputError(InputErrorKind::malformed, "generator must be an exponent array");
    std::vector<int> e;
    for (const auto& x : g) {
      if (!x.is_number_integer()) throw InputError(InputErrorKind::malformed, "exponents must be integers");
      e.push_back(x.get<int>());
    }
    exps.push_back(std::move(e));
  }
  const int nn = n.value_or(static_cast<int>(exps.front().size()) - 1);
  int d = 0;
  if (j.contains("d")) {
    if (!j["d"].is_number_integer()) throw InputError(InputErrorKind::malformed, "\"d\" must be an integer");
    d = j["d"].get<int>();
  } else {
    for (int x : exps.front()) d += x;
  }
  return make_ideal(nn, d, exps);
}

MonomialIdeal parse_ideal_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, column] = line_column(text, offset);
    throw ParseError(line, column, "invalid JSON");
  }
  return ideal_from_json(j);
}

MonomialIdeal parse_ideal(std::string_view text, std::optional<int> n) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    auto ideal = parse_ideal_json(text);
    if (n && *n != ideal.n()) throw InputError(InputErrorKind::invalid_argument, "--n disagrees with the file");
    return ideal;
  }
  return parse_inline_ideal(text, n);
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) {
    gens.push_back(std::vector<int>(g.exponents().begin(), g.exponents().end()));
  }
  return {{"n", ideal.n()}, {"d", ideal.d()}, {"generators", gens}, {"inline", ideal.to_string()}};
}

Polynomial parse_polynomial(std::string_view text, std::size_t num_vars) {
  Scanner sc(text);
  Polynomial out;
  if (sc.done()) sc.fail("empty polynomial");
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.accept('-')) {
      sign = -1;
    } else if (!sc.accept('+') && !first) {
      sc.fail("expected '+' or '-'");
    }
    first = false;
    mpz_class coeff = 1;
    RawMonomial raw;
    if (sc.at_digit()) {
      coeff = mpz_class(sc.digits());
      if (sc.accept('*')) raw = sc.monomial();
    } else {
      raw = sc.monomial();
    }
    auto& slot = out[to_exponents(raw, num_vars)];
    slot += sign * coeff;
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

}  // namespace togliatti
