#include "imm5/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "imm5/errors.hpp"

namespace imm5 {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product dimensions");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

// ------------------------------------------------------------- IntSymMatrix

IntSymMatrix::IntSymMatrix(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw AsymmetricMatrix("linking matrix is not square");
  if (!m_.is_symmetric()) throw AsymmetricMatrix("linking matrix is not symmetric");
}

IntSymMatrix::IntSymMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntSymMatrix(IntMatrix(rows)) {}

IntSymMatrix IntSymMatrix::zero(std::size_t n) { return IntSymMatrix(IntMatrix(n, n)); }

IntSymMatrix IntSymMatrix::diagonal(const std::vector<long>& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return IntSymMatrix(std::move(m));
}

IntSymMatrix IntSymMatrix::direct_sum(const IntSymMatrix& other) const {
  const std::size_t n = dim();
  const std::size_t k = other.dim();
  IntMatrix m(n + k, n + k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = m_(i, j);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(n + i, n + j) = other(i, j);
  return IntSymMatrix(std::move(m));
}

IntSymMatrix IntSymMatrix::negated() const {
  IntMatrix m = m_;
  for (std::size_t i = 0; i < m.rows(); ++i) m.negate_row(i);
  return IntSymMatrix(std::move(m));
}

IntSymMatrix IntSymMatrix::congruent(const IntMatrix& g) const {
  return IntSymMatrix(g.transposed() * m_ * g);
}

// ------------------------------------------------------------ Smith form

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

std::optional<Pivot> smallest_nonzero(const IntMatrix& s, std::size_t t) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (sgn(s(i, j)) == 0) continue;
      Integer a = abs(s(i, j));
      if (!best || a < best_abs) {
        best = Pivot{i, j};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    for (;;) {
      auto pivot = smallest_nonzero(s, t);
      if (!pivot) {
        exhausted = true;
        break;
      }
      s.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      s.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(s(i, t)) == 0) continue;
        Integer q = s(i, t) / s(t, t);  // truncating; remainder strictly smaller than the pivot
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (sgn(s(i, t)) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(s(t, j)) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (sgn(s(t, j)) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into row t and reduce again.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
      if (!offender) break;
      s.add_row_multiple(t, *offender, 1);
      u.add_row_multiple(t, *offender, 1);
    }
    if (exhausted) break;
    if (sgn(s(t, t)) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(u), std::move(v), std::move(s), {}};
  out.invariant_factors.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) out.invariant_factors.push_back(out.s(i, i));
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m(r, k)) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------- signature

long signature(const IntSymMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<mpq_class> m(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return m[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) at(i, j) = a(i, j);

  // Simultaneous row/column operations keep the matrix symmetric and congruent
  // to the input; the signs of the resulting pivots give the signature.
  auto swap_both = [&](std::size_t p, std::size_t q) {
    for (std::size_t j = 0; j < n; ++j) swap(at(p, j), at(q, j));
    for (std::size_t i = 0; i < n; ++i) swap(at(i, p), at(i, q));
  };
  auto add_both = [&](std::size_t dst, std::size_t src, const mpq_class& f) {
    for (std::size_t j = 0; j < n; ++j) at(dst, j) += f * at(src, j);
    for (std::size_t i = 0; i < n; ++i) at(i, dst) += f * at(i, src);
  };

  long sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(at(k, k)) == 0) {
      std::size_t j = k + 1;
      while (j < n && sgn(at(j, j)) == 0) ++j;
      if (j < n) {
        swap_both(k, j);
      } else {
        j = k + 1;
        while (j < n && sgn(at(k, j)) == 0) ++j;
        if (j == n) continue;  // row k vanishes in the trailing block
        // a_jj = 0 here, so the new a_kk is 2 a_kj != 0.
        add_both(k, j, 1);
      }
    }
    const mpq_class pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(at(i, k)) == 0) continue;
      add_both(i, k, -at(i, k) / pivot);
    }
    sig += sgn(pivot) > 0 ? 1 : -1;
  }
  return sig;
}

// ------------------------------------------------------------------ Z/2

Z2Matrix::Z2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

Z2Matrix::Z2Matrix(std::initializer_list<std::initializer_list<int>> rows)
    : Z2Matrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged Z2 matrix literal");
    std::size_t j = 0;
    for (int x : row) set(i, j++, (x & 1) != 0);
    ++i;
  }
}

Z2Matrix Z2Matrix::reduce(const IntMatrix& m) {
  Z2Matrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) z.set(i, j, mpz_odd_p(m(i, j).get_mpz_t()) != 0);
  return z;
}

void Z2Matrix::set(std::size_t i, std::size_t j, bool value) {
  std::uint64_t& w = bits_[i * words_ + j / 64];
  const std::uint64_t mask = std::uint64_t{1} << (j % 64);
  w = value ? (w | mask) : (w & ~mask);
}

Z2Vector Z2Matrix::multiply(const Z2Vector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("Z2 matrix-vector product");
  Z2Vector y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint8_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc ^= static_cast<std::uint8_t>(get(i, j) & (x[j] & 1u));
    y[i] = acc;
  }
  return y;
}

/// Reduced row echelon form over Z/2, in place.
struct Z2Eliminator {
  static std::vector<std::size_t> rref(Z2Matrix& a, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.rows_; ++c) {
      std::size_t p = r;
      while (p < a.rows_ && !a.get(p, c)) ++p;
      if (p == a.rows_) continue;
      if (p != r)
        std::swap_ranges(a.bits_.begin() + p * a.words_, a.bits_.begin() + (p + 1) * a.words_,
                         a.bits_.begin() + r * a.words_);
      for (std::size_t i = 0; i < a.rows_; ++i) {
        if (i == r || !a.get(i, c)) continue;
        for (std::size_t w = 0; w < a.words_; ++w) a.bits_[i * a.words_ + w] ^= a.bits_[r * a.words_ + w];
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }
};

std::size_t Z2Matrix::rank() const {
  Z2Matrix copy = *this;
  return Z2Eliminator::rref(copy, cols_).size();
}

namespace {

std::vector<Z2Vector> kernel_from_rref(const Z2Matrix& r, const std::vector<std::size_t>& pivots,
                                       std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Z2Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Z2Vector v(ncols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (r.get(k, free)) v[pivots[k]] = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Z2Vector> kernel_mod2(const Z2Matrix& m) {
  Z2Matrix r = m;
  const auto pivots = Z2Eliminator::rref(r, m.cols());
  return kernel_from_rref(r, pivots, m.cols());
}

std::optional<Z2Solution> solve_mod2(const Z2Matrix& m, const Z2Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  const std::size_t n = m.cols();
  Z2Matrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.get(i, j));
    aug.set(i, n, (b[i] & 1u) != 0);
  }
  const auto pivots = Z2Eliminator::rref(aug, n);
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    if (aug.get(i, n)) return std::nullopt;

  Z2Solution sol;
  sol.particular.assign(n, 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) sol.particular[pivots[k]] = aug.get(k, n) ? 1 : 0;
  sol.kernel_basis = kernel_from_rref(aug, pivots, n);
  return sol;
}

}  // namespace imm5
