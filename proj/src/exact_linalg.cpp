#include "togliatti/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace togliatti::linalg {

namespace {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

struct Echelon {
  IntMatrix rows;                      // fraction-free row echelon form
  std::vector<std::size_t> pivot_cols;  // one per nonzero row
};

// Bareiss elimination. After step k every entry below the pivots is a
// (k+1)-minor of the input, so each division by the previous pivot is exact.
Echelon bareiss_echelon(IntMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t best = m;
    for (std::size_t i = r; i < m; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      if (best == m || mpz_sizeinbase(a(i, c).get_mpz_t(), 2) < mpz_sizeinbase(a(best, c).get_mpz_t(), 2)) {
        best = i;
      }
    }
    if (best == m) continue;
    if (best != r) {
      for (std::size_t j = 0; j < n; ++j) swap(a(best, j), a(r, j));
    }
    const mpz_class& piv = a(r, c);
    for (std::size_t i = r + 1; i < m; ++i) {
      const bool zero_lead = sgn(a(i, c)) == 0;
      for (std::size_t j = c + 1; j < n; ++j) {
        // a(i,j) = (piv * a(i,j) - a(i,c) * a(r,j)) / prev
        t = piv * a(i, j);
        if (!zero_lead) t -= a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    pivots.push_back(c);
    ++r;
  }
  return Echelon{std::move(a), std::move(pivots)};
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in multiply");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

IntVector multiply(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("dimension mismatch in multiply");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

IntMatrix clear_denominators(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, mpz_class(m(i, j).get_den()));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  return out;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t prime) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      a[i * cols + j] = mpz_fdiv_ui(m(i, j).get_mpz_t(), prime);
    }
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
    }
    const std::uint64_t inv = pow_mod(a[r * cols + c], prime - 2, prime);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t lead = a[i * cols + c];
      if (lead == 0) continue;
      const std::uint64_t f = mul_mod(lead, inv, prime);
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = mul_mod(f, a[r * cols + j], prime);
        std::uint64_t& x = a[i * cols + j];
        x = x >= sub ? x - sub : x + prime - sub;
      }
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& m) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;
  if (rank_mod_p(m, kMersenne61) == full) return full;
  return bareiss_echelon(m).pivot_cols.size();
}

std::size_t rank(const RationalMatrix& m) { return rank(clear_denominators(m)); }

void normalize_primitive(IntVector& v) {
  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return;
  auto lead = std::find_if(v.begin(), v.end(), [](const mpz_class& x) { return sgn(x) != 0; });
  if (sgn(*lead) < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<IntVector> basis;
  if (cols == 0) return basis;
  if (m.rows() >= cols && rank_mod_p(m, kMersenne61) == cols) return basis;

  const Echelon e = bareiss_echelon(m);
  const std::size_t r = e.pivot_cols.size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> x(cols);
    x[f] = 1;
    for (std::size_t k = r; k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      mpq_class sum = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (sgn(x[j]) != 0 && sgn(e.rows(k, j)) != 0) sum += e.rows(k, j) * x[j];
      }
      x[pc] = -sum / e.rows(k, pc);
    }
    mpz_class l = 1;
    for (const auto& q : x) l = lcm(l, mpz_class(q.get_den()));
    IntVector v(cols);
    for (std::size_t j = 0; j < cols; ++j) v[j] = x[j].get_num() * (l / x[j].get_den());
    normalize_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<IntVector> kernel_basis(const RationalMatrix& m) { return kernel_basis(clear_denominators(m)); }

SNFResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < rows; ++c) swap(u(i, c), u(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < cols; ++r) swap(v(r, i), v(r, j));
  };
  // row_i += q * row_j
  auto add_row = [&](std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t c = 0; c < cols; ++c) a(i, c) += q * a(j, c);
    for (std::size_t c = 0; c < rows; ++c) u(i, c) += q * u(j, c);
  };
  auto add_col = [&](std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t r = 0; r < rows; ++r) a(r, i) += q * a(r, j);
    for (std::size_t r = 0; r < cols; ++r) v(r, i) += q * v(r, j);
  };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    auto move_min_to_pivot = [&]() -> bool {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(a(i, j)) == 0) continue;
          if (bi == rows || cmpabs(a(i, j), a(bi, bj)) < 0) bi = i, bj = j;
        }
      }
      if (bi == rows) return false;
      swap_rows(t, bi);
      swap_cols(t, bj);
      return true;
    };
    if (!move_min_to_pivot()) break;

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived in row/column t
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (sgn(a(i, t)) != 0 && cmpabs(a(i, t), a(bi, bj)) < 0) bi = i, bj = t;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (sgn(a(t, j)) != 0 && cmpabs(a(t, j), a(bi, bj)) < 0) bi = t, bj = j;
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            add_row(t, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (sgn(a(t, t)) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }

  SNFResult out;
  out.diagonal.resize(diag);
  for (std::size_t i = 0; i < diag; ++i) out.diagonal[i] = a(i, i);
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix evaluation_matrix(std::span<const Monomial> points, std::span<const Monomial> monomials) {
  IntMatrix out(points.size(), monomials.size());
  if (points.empty() || monomials.empty()) return out;
  const std::size_t nv = points.front().num_vars();
  int max_coord = 0;
  for (const auto& p : points) {
    for (int e : p.exponents()) max_coord = std::max(max_coord, e);
  }
  const int max_exp = monomials.front().degree();
  // pow_table[c][e] = c^e, with 0^0 = 1
  std::vector<std::vector<mpz_class>> pow_table(max_coord + 1, std::vector<mpz_class>(max_exp + 1));
  for (int c = 0; c <= max_coord; ++c) {
    for (int e = 0; e <= max_exp; ++e) mpz_ui_pow_ui(pow_table[c][e].get_mpz_t(), c, e);
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      mpz_class v = 1;
      for (std::size_t k = 0; k < nv && sgn(v) != 0; ++k) {
        v *= pow_table[points[i][k]][monomials[j][k]];
      }
      out(i, j) = std::move(v);
    }
  }
  return out;
}

IntMatrix evaluation_matrix(const LatticePointSet& points, int e) {
  if (e < 1) throw std::invalid_argument("evaluation degree must be >= 1");
  const auto monomials = monomials_of_degree(static_cast<std::size_t>(points.n) + 1, e);
  return evaluation_matrix(points.points, monomials);
}

nlohmann::json to_json(const IntMatrix& m) {
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).fits_slong_p()) row.push_back(m(i, j).get_si());
      else row.push_back(m(i, j).get_str());
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace togliatti::linalg
