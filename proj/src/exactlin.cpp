#include "k3cover/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "k3cover/errors.hpp"

namespace k3cover {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw ShapeError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::scaled(const Integer& k) const {
  IntMatrix s = *this;
  for (auto& v : s.data_) v *= k;
  return s;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntVector SmithDecomposition::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    }
    prev = m(k, k);
  }
  Integer d = m(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

namespace {

// Index of the nonzero entry of smallest magnitude in the trailing block.
bool smallest_entry(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!found || v < best) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  IntMatrix D = a;
  IntMatrix U = IntMatrix::identity(r);
  IntMatrix V = IntMatrix::identity(c);

  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    D.add_row_multiple(dst, src, k);
    U.add_row_multiple(dst, src, k);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    D.add_col_multiple(dst, src, k);
    V.add_col_multiple(dst, src, k);
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    std::size_t pi = t, pj = t;
    if (!smallest_entry(D, t, pi, pj)) break;
    D.swap_rows(t, pi);
    U.swap_rows(t, pi);
    D.swap_cols(t, pj);
    V.swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        row_op(i, t, -q);
        if (D(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        col_op(j, t, -q);
        if (D(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // Move the smallest remainder in row t or column t onto the pivot.
        std::size_t bi = t, bj = t;
        Integer best = abs(D(t, t));
        for (std::size_t i = t + 1; i < r; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < best) {
            best = abs(D(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < c; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < best) {
            best = abs(D(t, j));
            bi = t;
            bj = j;
          }
        D.swap_rows(t, bi);
        U.swap_rows(t, bi);
        D.swap_cols(t, bj);
        V.swap_cols(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            row_op(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return {std::move(U), std::move(D), std::move(V)};
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols() && rk < m.rows(); ++col) {
    std::size_t p = rk;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(rk, p);
    for (std::size_t i = rk + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Integer f = m(i, col), piv = m(rk, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = piv * m(i, j) - f * m(rk, j);
    }
    ++rk;
  }
  return rk;
}

namespace {

void divide_by_content(std::vector<std::vector<Integer>>& s) {
  Integer g = 0;
  for (const auto& row : s)
    for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g <= 1) return;
  for (auto& row : s)
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Inertia inertia(const IntMatrix& a) {
  if (!a.is_symmetric()) throw ShapeError("inertia requires a symmetric matrix");
  std::vector<std::vector<Integer>> s(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s[i][j] = a(i, j);

  Inertia out;
  // Sign of the product of scalings applied so far; a negative scaling swaps
  // the roles of positive and negative in the remaining block.
  int flip = 1;
  auto count = [&](int sgn) {
    if (sgn * flip > 0)
      ++out.positive;
    else
      ++out.negative;
  };
  auto symmetric_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    std::swap(s[x], s[y]);
    for (auto& row : s) std::swap(row[x], row[y]);
  };

  while (!s.empty()) {
    const std::size_t n = s.size();
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i][i] != 0) {
        piv = i;
        break;
      }
    if (piv < n) {
      symmetric_swap(0, piv);
      const Integer p = s[0][0];
      const int sp = sgn(p);
      count(sp);
      std::vector<std::vector<Integer>> t(n - 1, std::vector<Integer>(n - 1));
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) t[i - 1][j - 1] = p * s[i][j] - s[i][0] * s[0][j];
      if (sp < 0) flip = -flip;
      s = std::move(t);
      divide_by_content(s);
      continue;
    }
    std::size_t bi = n, bj = n;
    for (std::size_t i = 0; i < n && bi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (s[i][j] != 0) {
          bi = i;
          bj = j;
          break;
        }
    if (bi == n) {
      out.zero += n;
      break;
    }
    symmetric_swap(0, bi);
    symmetric_swap(1, bj);
    // Hyperbolic block [[0,b],[b,0]] contributes one positive and one negative.
    const Integer b = s[0][1];
    ++out.positive;
    ++out.negative;
    std::vector<std::vector<Integer>> t(n - 2, std::vector<Integer>(n - 2));
    for (std::size_t i = 2; i < n; ++i)
      for (std::size_t j = 2; j < n; ++j)
        t[i - 2][j - 2] = b * s[i][j] - (s[i][0] * s[1][j] + s[i][1] * s[0][j]);
    if (sgn(b) < 0) flip = -flip;
    s = std::move(t);
    divide_by_content(s);
  }
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix m = a;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
    // Euclid on the column until a single nonzero entry remains at prow.
    for (;;) {
      std::size_t best = m.rows();
      for (std::size_t i = prow; i < m.rows(); ++i)
        if (m(i, col) != 0 && (best == m.rows() || abs(m(i, col)) < abs(m(best, col)))) best = i;
      if (best == m.rows()) break;
      m.swap_rows(prow, best);
      bool done = true;
      for (std::size_t i = prow + 1; i < m.rows(); ++i) {
        if (m(i, col) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m(i, col).get_mpz_t(), m(prow, col).get_mpz_t());
        m.add_row_multiple(i, prow, -q);
        if (m(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m(prow, col) == 0) continue;
    if (m(prow, col) < 0) m.negate_row(prow);
    for (std::size_t i = 0; i < prow; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, col).get_mpz_t(), m(prow, col).get_mpz_t());
      m.add_row_multiple(i, prow, -q);
    }
    ++prow;
  }
  IntMatrix h(prow, m.cols());
  for (std::size_t i = 0; i < prow; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) h(i, j) = m(i, j);
  return h;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector mat_vec(const IntMatrix& m, std::span<const Rational> v) {
  if (m.cols() != v.size()) throw DimensionError("mat_vec: length mismatch");
  RatVector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && v[j] != 0) out[i] += Rational(m(i, j)) * v[j];
  return out;
}

Rational bilinear(const IntMatrix& g, std::span<const Rational> x, std::span<const Rational> y) {
  RatVector gy = mat_vec(g, y);
  return dot(x, gy);
}

Rational rational_determinant(const RatMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("determinant of a non-square matrix");
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

RatMatrix rational_inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("inverse of a non-square matrix");
  RatMatrix a = m;
  RatMatrix inv(n, RatVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw DimensionError("inverse of a singular matrix");
    std::swap(a[p], a[k]);
    std::swap(inv[p], inv[k]);
    Rational piv = a[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] /= piv;
      inv[k][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

bool is_integral(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Integer common_denominator(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](bool allow_sign) {
    std::size_t start = i;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t d = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return i > d && start <= d;
  };
  if (!digits(true)) throw InvalidInputError("malformed rational: '" + text + "'");
  std::string num = text.substr(0, i), den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t s = i;
    if (!digits(false)) throw InvalidInputError("malformed rational: '" + text + "'");
    den = text.substr(s, i - s);
  }
  if (i != text.size()) throw InvalidInputError("malformed rational: '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw InvalidInputError("zero denominator: '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace k3cover
