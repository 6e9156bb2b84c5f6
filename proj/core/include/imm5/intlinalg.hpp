#pragma once

// Exact linear algebra over the integers and over Z/2.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace imm5 {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transposed() const;
  bool is_symmetric() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Square symmetric integer matrix; symmetry is checked at construction.
/// The 0x0 matrix is a legal value.
class IntSymMatrix {
 public:
  IntSymMatrix() = default;
  /// Throws AsymmetricMatrix unless `m` is square and symmetric.
  explicit IntSymMatrix(IntMatrix m);
  IntSymMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntSymMatrix zero(std::size_t n);
  static IntSymMatrix diagonal(const std::vector<long>& entries);

  std::size_t dim() const { return m_.rows(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const IntMatrix& matrix() const { return m_; }

  IntSymMatrix direct_sum(const IntSymMatrix& other) const;
  IntSymMatrix negated() const;
  /// g^T * this * g
  IntSymMatrix congruent(const IntMatrix& g) const;

  friend bool operator==(const IntSymMatrix& a, const IntSymMatrix& b) { return a.m_ == b.m_; }

 private:
  IntMatrix m_;
};

/// u * a * v = s with u, v unimodular and s diagonal in divisibility-chain order.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix v;
  IntMatrix s;
  /// Diagonal of s: non-negative, d_i | d_{i+1}, zeros last. Length min(rows, cols).
  std::vector<Integer> invariant_factors;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

Integer determinant(const IntMatrix& a);

/// Number of positive minus number of negative eigenvalues, computed by exact
/// congruence diagonalisation over the rationals.
long signature(const IntSymMatrix& a);

using Z2Vector = std::vector<std::uint8_t>;

/// Bit-packed matrix over Z/2.
class Z2Matrix {
 public:
  Z2Matrix() = default;
  Z2Matrix(std::size_t rows, std::size_t cols);
  Z2Matrix(std::initializer_list<std::initializer_list<int>> rows);

  /// Entrywise reduction mod 2.
  static Z2Matrix reduce(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value);

  Z2Vector multiply(const Z2Vector& x) const;
  std::size_t rank() const;

 private:
  friend struct Z2Eliminator;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct Z2Solution {
  Z2Vector particular;
  std::vector<Z2Vector> kernel_basis;
};

/// Solves m * x = b over Z/2. Returns std::nullopt when b is outside the
/// column space. Throws DimensionMismatch when b.size() != m.rows().
std::optional<Z2Solution> solve_mod2(const Z2Matrix& m, const Z2Vector& b);

/// Basis of ker(m) over Z/2.
std::vector<Z2Vector> kernel_mod2(const Z2Matrix& m);

}  // namespace imm5
