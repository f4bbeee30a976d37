#pragma once

// Exact linear algebra over Z and Q. Nothing in here touches floating point.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace k3cover {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  // Row-major nested initializer; all rows must have equal length.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> diag);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Integer> entries() const { return data_; }
  IntVector row(std::size_t r) const;

  IntMatrix transpose() const;
  IntMatrix scaled(const Integer& k) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// U * A * V == D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  // Diagonal of D (length min(rows, cols)).
  IntVector diagonal() const;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Fraction-free Bareiss elimination. Throws DimensionError for non-square input.
Integer determinant(const IntMatrix& a);

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Rank over Q.
std::size_t rank(const IntMatrix& a);

// Signature counts of a symmetric matrix by exact congruence. Throws
// ShapeError when the input is not symmetric.
Inertia inertia(const IntMatrix& a);

// Row-style Hermite normal form of the row lattice of a. Returns only the
// nonzero rows; pivots are positive and entries above a pivot are reduced
// into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& a);

// Rational helpers used by the lattice layer.
using RatMatrix = std::vector<RatVector>;

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RatVector mat_vec(const IntMatrix& m, std::span<const Rational> v);
// x^T G y for a square integer G.
Rational bilinear(const IntMatrix& g, std::span<const Rational> x, std::span<const Rational> y);
Rational rational_determinant(const RatMatrix& m);
// Throws DimensionError if m is singular or non-square.
RatMatrix rational_inverse(const RatMatrix& m);
RatMatrix to_rational(const IntMatrix& m);
bool is_integral(std::span<const Rational> v);
// Least common multiple of all denominators.
Integer common_denominator(std::span<const Rational> v);

std::string to_string(const Rational& q);
// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

}  // namespace k3cover
