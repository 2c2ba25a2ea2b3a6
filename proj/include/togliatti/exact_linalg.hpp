#pragma once

// Exact linear algebra over Z and Q on top of GMP.
//
// Rank and kernels use Bareiss fraction-free elimination. Rank first runs a
// 61-bit modular elimination: the rank mod p never exceeds the rational
// rank, so a full-rank answer mod p is already exact and the big-integer
// path only runs for rank-deficient matrices.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "togliatti/monomial.hpp"

namespace togliatti::linalg {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;
using RationalMatrix = Matrix<mpq_class>;
using IntVector = std::vector<mpz_class>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& v);

/// Scales each row by the lcm of its denominators.
IntMatrix clear_denominators(const RationalMatrix& m);

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t prime);
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Basis of the right kernel. Each vector has coprime integer entries and a
/// positive first nonzero entry.
std::vector<IntVector> kernel_basis(const IntMatrix& m);
std::vector<IntVector> kernel_basis(const RationalMatrix& m);

/// Divides by the content and makes the first nonzero entry positive.
void normalize_primitive(IntVector& v);

struct SNFResult {
  std::vector<mpz_class> diagonal;  // min(rows, cols) entries, d_i | d_{i+1}
  IntMatrix left;                   // rows x rows, unimodular
  IntMatrix right;                  // cols x cols, unimodular
};

/// left * M * right is the diagonal matrix with entries `diagonal`.
SNFResult smith_normal_form(const IntMatrix& m);

mpz_class determinant(const IntMatrix& m);

/// Rows indexed by points, columns by the degree-e monomials in n+1
/// variables (descending graded-lex); entry is the monomial evaluated at
/// the point's integer coordinates.
IntMatrix evaluation_matrix(const LatticePointSet& points, int e);
IntMatrix evaluation_matrix(std::span<const Monomial> points, std::span<const Monomial> monomials);

nlohmann::json to_json(const IntMatrix& m);

}  // namespace togliatti::linalg
