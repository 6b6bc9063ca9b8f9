#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lamanbkk/errors.hpp"

namespace lamanbkk {

using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row-major

/// Parses "7", "-3/4" or a decimal such as "2.25" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty number");
  try {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      if (s.find('/') != std::string::npos || s.find('.', dot + 1) != std::string::npos)
        throw InputError("malformed number '" + s + "'");
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t frac_len = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") throw InputError("malformed number '" + s + "'");
      if (digits.front() == '+') digits.erase(0, 1);
      Integer num(digits, 10);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    if (s.front() == '+') s.erase(0, 1);
    Rational r(s, 10);
    if (r.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("malformed number '" + std::string(text) + "'");
  }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

inline QVector operator-(const QVector& a, const QVector& b) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVector operator+(const QVector& a, const QVector& b) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVector unit_vector(std::size_t dim, std::size_t i, const Rational& scale = 1) {
  QVector v(dim);
  v[i] = scale;
  return v;
}

/// Exact determinant by fraction-preserving Gaussian elimination.
inline Rational determinant(QMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c)
        if (sgn(m[col][c]) != 0) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Rank of a list of vectors (rows).
inline std::size_t rank(QMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Solves the square system a * x = b exactly. Returns false when singular.
inline bool solve_linear(QMatrix a, QVector b, QVector& x) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[col]);
    std::swap(b[p], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c)
        if (sgn(a[col][c]) != 0) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

/// Inverse of a square matrix by Gauss-Jordan; nullopt if singular.
inline std::optional<QMatrix> inverse(QMatrix a) {
  const std::size_t n = a.size();
  QMatrix inv(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    const Rational pivot = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(a[col][c]) != 0) a[col][c] /= pivot;
      if (sgn(inv[col][c]) != 0) inv[col][c] /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        if (sgn(a[col][c]) != 0) a[r][c] -= f * a[col][c];
        if (sgn(inv[col][c]) != 0) inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

inline QVector multiply(const QMatrix& m, const QVector& x) {
  QVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], x);
  return out;
}

}  // namespace lamanbkk
