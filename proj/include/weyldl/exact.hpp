#pragma once

// Exact rational arithmetic and the small amount of linear algebra the
// character-table computation needs: row reduction, null spaces, operator
// restriction to invariant subspaces, characteristic polynomials and
// integer root extraction.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "weyldl/error.hpp"

namespace weyldl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() ||
      z < std::numeric_limits<std::int64_t>::min()) {
    throw IrrationalityError("integer value out of 64-bit range: " + z.str());
  }
  return static_cast<std::int64_t>(z);
}

/// Converts an exact rational known to be integral; throws otherwise.
inline std::int64_t to_int64(const Rational& q) {
  if (!is_integral(q)) {
    throw IrrationalityError("expected an integer, got " + q.str());
  }
  return to_int64(Integer(boost::multiprecision::numerator(q)));
}

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix column(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) != 0) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row, in order.
inline std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (m(row, j) != 0) m(i, j) -= factor * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the right null space, one column per basis vector.
inline Matrix nullspace(Matrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!is_pivot[j]) free_cols.push_back(j);
  }
  Matrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, f);
  }
  return basis;
}

/// Given a full-column-rank basis B of a subspace invariant under op,
/// returns the matrix A with op * B = B * A.
inline Matrix restrict_operator(const Matrix& op, const Matrix& basis) {
  const Matrix image = op * basis;
  const std::size_t n = basis.rows();
  const std::size_t d = basis.cols();
  Matrix aug(n, 2 * d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      aug(i, j) = basis(i, j);
      aug(i, d + j) = image(i, j);
    }
  }
  const auto pivots = rref(aug);
  if (pivots.size() != d || (d > 0 && pivots[d - 1] != d - 1)) {
    throw Error("restrict_operator: subspace is not invariant or basis is degenerate");
  }
  Matrix a(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a(i, j) = aug(i, d + j);
  }
  return a;
}

/// Polynomial with rational coefficients, lowest degree first.
using Polynomial = std::vector<Rational>;

/// Characteristic polynomial det(xI - m), monic, via reduction to upper
/// Hessenberg form followed by the Hessenberg determinant recurrence.
inline Polynomial characteristic_polynomial(Matrix h) {
  const std::size_t n = h.rows();
  if (h.cols() != n) throw Error("characteristic_polynomial: matrix is not square");

  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h(r, m - 1) == 0) continue;
      const Rational u = h(r, m - 1) / h(m, m - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (h(m, j) != 0) h(r, j) -= u * h(m, j);
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (h(j, r) != 0) h(j, m) += u * h(j, r);
      }
    }
  }

  // p[k] is the characteristic polynomial of the leading k x k block.
  std::vector<Polynomial> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    Polynomial next(m + 1);
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      next[k + 1] += p[m - 1][k];
      next[k] -= h(m - 1, m - 1) * p[m - 1][k];
    }
    Rational t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      if (t == 0) break;
      const Rational coeff = t * h(m - i - 1, m - 1);
      if (coeff == 0) continue;
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) next[k] -= coeff * p[m - i - 1][k];
    }
    p[m] = std::move(next);
  }
  return p[n];
}

/// Integer roots (with multiplicity) of a monic polynomial with integer
/// coefficients, searched in [-bound, bound]. Roots outside the window or
/// non-integral roots are simply not reported; callers compare the total
/// multiplicity against the degree.
inline std::vector<std::pair<Integer, std::size_t>> integer_roots(Polynomial poly, const Integer& bound) {
  for (const auto& c : poly) {
    if (!is_integral(c)) {
      throw IrrationalityError("characteristic polynomial has non-integral coefficient " + c.str());
    }
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(poly.size());
  for (const auto& c : poly) coeffs.emplace_back(boost::multiprecision::numerator(c));

  auto divide_out = [&coeffs](const Integer& root) {
    // Synthetic division; returns false if root is not a root.
    const std::size_t deg = coeffs.size() - 1;
    std::vector<Integer> quotient(deg);
    Integer carry = 0;
    for (std::size_t k = deg; k-- > 0;) {
      carry = coeffs[k + 1] + carry * root;
      quotient[k] = carry;
    }
    if (coeffs[0] + carry * root != 0) return false;
    coeffs = std::move(quotient);
    return true;
  };

  std::vector<std::pair<Integer, std::size_t>> roots;
  std::size_t zero_mult = 0;
  while (coeffs.size() > 1 && coeffs[0] == 0) {
    coeffs.erase(coeffs.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Integer(0), zero_mult);

  for (Integer candidate = -bound; candidate <= bound && coeffs.size() > 1; ++candidate) {
    if (candidate == 0) continue;
    if (coeffs[0] % candidate != 0) continue;
    std::size_t mult = 0;
    while (coeffs.size() > 1 && divide_out(candidate)) ++mult;
    if (mult > 0) roots.emplace_back(candidate, mult);
  }
  return roots;
}

}  // namespace weyldl
