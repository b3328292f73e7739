#pragma once

// Exact rational scalars and matrices: rank by fraction-free elimination,
// normalized integer kernel bases, span tests.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "steiner/error.hpp"

namespace steiner {

using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using RationalMatrix = std::vector<std::vector<Scalar>>;

/// "3", "-2/5". Always reduced.
inline std::string to_string(const Scalar& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Accepts "7", "-3", "2/3", "+1/2". Throws SyntaxError (column is 1-based within s).
inline Scalar parse_scalar(std::string_view s, int line = 1, int column = 1) {
  auto fail = [&](const std::string& what) { throw Error::syntax(line, column, what + ": '" + std::string(s) + "'"); };
  if (s.empty()) fail("empty number");
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) fail("expected digits");
    for (std::size_t k = from; k < to; ++k) {
      if (s[k] < '0' || s[k] > '9') fail("bad number");
    }
    return Integer(std::string(s.substr(from, to - from)));
  };
  const std::size_t slash = s.find('/');
  Integer num = digits(i, slash == std::string_view::npos ? s.size() : slash);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = digits(slash + 1, s.size());
    if (den == 0) fail("zero denominator");
  }
  Scalar r(num, den);
  return neg ? Scalar(-r) : r;
}

inline RationalMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, std::vector<Scalar>(cols, Scalar(0)));
}

inline RationalMatrix transpose(const RationalMatrix& m) {
  if (m.empty()) return {};
  RationalMatrix t = zero_matrix(m[0].size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline std::vector<Scalar> multiply(const RationalMatrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(m.size(), Scalar(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
    }
  }
  return out;
}

inline bool is_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

namespace detail {

inline Integer lcm_int(const Integer& a, const Integer& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

// Rows scaled by the lcm of their denominators.
inline std::vector<std::vector<Integer>> clear_denominators(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Integer l = 1;
    for (const auto& x : row) l = lcm_int(l, denominator(x));
    std::vector<Integer> r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(numerator(x) * (l / denominator(x)));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

/// Bareiss elimination with row pivoting; every intermediate stays integral.
inline std::size_t rank_exact(const RationalMatrix& m) {
  if (m.empty()) return 0;
  auto a = detail::clear_denominators(m);
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Reduced row echelon form over Q; returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const Scalar inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Scalar f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Scales to coprime integers with the first nonzero entry positive.
inline std::vector<Scalar> primitive(std::vector<Scalar> v) {
  Integer l = 1;
  for (const auto& x : v) l = detail::lcm_int(l, denominator(x));
  Integer g = 0;
  for (auto& x : v) {
    x *= l;
    g = boost::multiprecision::gcd(g, numerator(x));
  }
  if (g == 0) return v;
  auto first = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

/// Basis of {x : m x = 0}, one vector per free column in increasing column
/// order, each primitive integral with first nonzero entry positive.
inline std::vector<std::vector<Scalar>> kernel_basis(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix a = m;
  for (const auto& row : a) {
    if (row.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
  }
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

inline std::vector<std::vector<Scalar>> kernel_basis(const RationalMatrix& m) {
  return kernel_basis(m, m.empty() ? 0 : m[0].size());
}

/// Rank of a list of vectors (as rows).
inline std::size_t span_rank(const std::vector<std::vector<Scalar>>& vs) { return rank_exact(vs); }

/// span(a) == span(b).
inline bool same_span(const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b) {
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = rank_exact(both);
  return r == rank_exact(a) && r == rank_exact(b);
}

}  // namespace steiner
