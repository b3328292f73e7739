#pragma once

// The Steiner product on R^S and the exact linear algebra around it.
//
// Vectors are coordinate arrays indexed by point - 1. The product routines
// are templates so the same code serves exact rationals and doubles.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "steiner/design.hpp"
#include "steiner/exact.hpp"
#include "steiner/group.hpp"
#include "steiner/polynomial.hpp"

namespace steiner {

using DesignVector = std::vector<Scalar>;

template <class T>
std::vector<T> zero_vector(int n) {
  return std::vector<T>(static_cast<std::size_t>(n), T(0));
}

/// s_i as a coordinate vector.
template <class T = Scalar>
std::vector<T> basis_vector(int n, Point i) {
  if (i < 1 || i > n) throw Error(ErrorCode::DimensionMismatch, "basis index " + std::to_string(i));
  auto v = zero_vector<T>(n);
  v[i - 1] = T(1);
  return v;
}

namespace detail {

template <class T>
void require_dim(const OrientedSTS& o, const std::vector<T>& v, const char* what) {
  if (static_cast<int>(v.size()) != o.order()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has dimension " + std::to_string(v.size()) +
                                                  ", expected " + std::to_string(o.order()));
  }
}

template <class T>
bool nonzero(const T& x) {
  return x != T(0);
}

}  // namespace detail

/// a x b = sum_ij a_i b_j f(i,j) s_k, with k the third point of {i,j}.
template <class T>
std::vector<T> steiner_product(const OrientedSTS& o, const std::vector<T>& a, const std::vector<T>& b) {
  detail::require_dim(o, a, "left factor");
  detail::require_dim(o, b, "right factor");
  const int n = o.order();
  auto out = zero_vector<T>(n);
  for (Point i = 1; i <= n; ++i) {
    if (!detail::nonzero(a[i - 1])) continue;
    for (Point j = 1; j <= n; ++j) {
      if (i == j || !detail::nonzero(b[j - 1])) continue;
      const Point k = o.base().third(i, j);
      const T term = a[i - 1] * b[j - 1];
      if (o.sign(i, j) > 0) {
        out[k - 1] += term;
      } else {
        out[k - 1] -= term;
      }
    }
  }
  return out;
}

template <class T>
T inner_product(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "inner product of unequal dimensions");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct SignedBasis {
  int sign = 0;
  std::optional<Point> point;

  bool operator==(const SignedBasis&) const = default;
};

/// The symbolic matrix M with M(i,j) = s_i x s_j.
class ProductTable {
 public:
  explicit ProductTable(const OrientedSTS& o) : n_(o.order()), m_(static_cast<std::size_t>(n_ * n_)) {
    for (Point i = 1; i <= n_; ++i) {
      for (Point j = 1; j <= n_; ++j) {
        if (i != j) m_[slot(i, j)] = {o.sign(i, j), o.base().third(i, j)};
      }
    }
  }

  int order() const noexcept { return n_; }
  const SignedBasis& operator()(Point i, Point j) const { return m_.at(slot(i, j)); }

 private:
  std::size_t slot(Point i, Point j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }

  int n_;
  std::vector<SignedBasis> m_;
};

inline ProductTable product_table(const OrientedSTS& o) { return ProductTable(o); }

/// v x w as the formal trace [v]^T M [w]: first the column of formal sums
/// M[w], then its pairing with v.
template <class T>
std::vector<T> product_via_trace(const OrientedSTS& o, const std::vector<T>& v, const std::vector<T>& w) {
  detail::require_dim(o, v, "left factor");
  detail::require_dim(o, w, "right factor");
  const ProductTable m(o);
  const int n = o.order();
  std::vector<std::vector<T>> mw(static_cast<std::size_t>(n), zero_vector<T>(n));
  for (Point i = 1; i <= n; ++i) {
    for (Point j = 1; j <= n; ++j) {
      const SignedBasis& e = m(i, j);
      if (e.sign == 0) continue;
      mw[i - 1][*e.point - 1] += T(e.sign) * w[j - 1];
    }
  }
  auto out = zero_vector<T>(n);
  for (Point i = 1; i <= n; ++i) {
    for (int k = 0; k < n; ++k) out[k] += v[i - 1] * mw[i - 1][k];
  }
  return out;
}

/// A_w with A_w [v] = [w x v]; entry (i,j) is the s_i coefficient of w x s_j.
template <class T>
std::vector<std::vector<T>> companion_matrix(const OrientedSTS& o, const std::vector<T>& w) {
  detail::require_dim(o, w, "w");
  const int n = o.order();
  std::vector<std::vector<T>> a(static_cast<std::size_t>(n), zero_vector<T>(n));
  for (Point k = 1; k <= n; ++k) {
    if (!detail::nonzero(w[k - 1])) continue;
    for (Point j = 1; j <= n; ++j) {
      if (j == k) continue;
      const Point i = o.base().third(k, j);
      a[i - 1][j - 1] += T(o.sign(k, j)) * w[k - 1];
    }
  }
  return a;
}

struct ZeroDivisorResult {
  bool zero_divisor = false;
  std::size_t rank = 0;
  std::optional<DesignVector> witness;  ///< kernel vector independent of w
};

inline ZeroDivisorResult is_zero_divisor(const OrientedSTS& o, const DesignVector& w) {
  detail::require_dim(o, w, "w");
  if (is_zero(w)) throw Error(ErrorCode::ZeroVector, "zero-divisor test needs w != 0");
  const RationalMatrix a = companion_matrix(o, w);
  ZeroDivisorResult r;
  r.rank = rank_exact(a);
  r.zero_divisor = r.rank + 1 < static_cast<std::size_t>(o.order());
  if (r.zero_divisor) {
    for (auto& k : kernel_basis(a)) {
      if (span_rank({w, k}) == 2) {
        r.witness = std::move(k);
        break;
      }
    }
  }
  return r;
}

/// sigma(a) = sum a_s sigma(s).
template <class T>
std::vector<T> lift_automorphism(const Permutation& phi, const std::vector<T>& a) {
  if (static_cast<std::size_t>(phi.degree()) != a.size()) {
    throw Error(ErrorCode::DegreeMismatch, "permutation degree differs from vector dimension");
  }
  std::vector<T> out(a.size(), T(0));
  for (Point i = 1; i <= phi.degree(); ++i) out[phi(i) - 1] = a[i - 1];
  return out;
}

/// Numerators uniform in [-9,9], denominators in [1,6].
inline DesignVector random_rational_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  DesignVector v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int p = num(rng);
    const int q = den(rng);
    v.emplace_back(p, q);
  }
  return v;
}

// ---------------------------------------------------------------- axioms

struct AxiomWitness {
  DesignVector v;
  DesignVector w;
  Scalar lhs;  ///< |v|^2 |w|^2
  Scalar rhs;  ///< |v x w|^2 + <v,w>^2
};

struct AxiomReport {
  bool axiom1 = false;
  bool axiom2 = false;
  bool axiom3 = false;
  std::size_t axiom3_terms = 0;  ///< monomials left in |v|^2|w|^2 - |vxw|^2 - <v,w>^2
  std::optional<AxiomWitness> witness;
};

namespace detail {

// Coordinates of v x w as bilinear polynomials; v_i is variable i-1, w_i is n+i-1.
inline std::vector<Polynomial> symbolic_product(const OrientedSTS& o) {
  const int n = o.order();
  std::vector<Polynomial> c(static_cast<std::size_t>(n));
  for (Point i = 1; i <= n; ++i) {
    for (Point j = 1; j <= n; ++j) {
      if (i == j) continue;
      const Point k = o.base().third(i, j);
      Polynomial t = Polynomial::variable(static_cast<std::uint16_t>(i - 1)) *
                     Polynomial::variable(static_cast<std::uint16_t>(n + j - 1));
      c[k - 1] += t * o.sign(i, j);
    }
  }
  return c;
}

inline Polynomial symbolic_dot(int n, int off_a, int off_b) {
  Polynomial s;
  for (int i = 0; i < n; ++i) {
    s += Polynomial::variable(static_cast<std::uint16_t>(off_a + i)) *
         Polynomial::variable(static_cast<std::uint16_t>(off_b + i));
  }
  return s;
}

inline AxiomWitness evaluate_axiom3(const OrientedSTS& o, DesignVector v, DesignVector w) {
  const auto vw = steiner_product(o, v, w);
  const Scalar d = inner_product(v, w);
  AxiomWitness x{std::move(v), std::move(w), 0, 0};
  x.lhs = inner_product(x.v, x.v) * inner_product(x.w, x.w);
  x.rhs = inner_product(vw, vw) + d * d;
  return x;
}

// Candidate order: single basis vectors, then s_a + s_b with a < b.
inline std::vector<DesignVector> small_vectors(int n) {
  std::vector<DesignVector> out;
  for (Point a = 1; a <= n; ++a) out.push_back(basis_vector(n, a));
  for (Point a = 1; a <= n; ++a) {
    for (Point b = a + 1; b <= n; ++b) {
      auto v = basis_vector(n, a);
      v[b - 1] = 1;
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace detail

/// Axiom 1 is checked on seeded random rationals; axioms 2 and 3 are checked
/// as polynomial identities. A failing axiom 3 comes with a concrete witness.
inline AxiomReport check_cross_axioms(const OrientedSTS& o, std::uint64_t seed = 1, int samples = 20) {
  const int n = o.order();
  AxiomReport rep;

  std::mt19937_64 rng(seed);
  rep.axiom1 = true;
  for (int s = 0; s < samples && rep.axiom1; ++s) {
    const auto a = random_rational_vector(rng, n);
    const auto b = random_rational_vector(rng, n);
    const auto c = random_rational_vector(rng, n);
    const Scalar k(random_rational_vector(rng, 1)[0]);
    DesignVector apc(a), ka(a), bpc(b), kb(b);
    for (int i = 0; i < n; ++i) {
      apc[i] += c[i];
      ka[i] *= k;
      bpc[i] += c[i];
      kb[i] *= k;
    }
    const auto ab = steiner_product(o, a, b);
    const auto cb = steiner_product(o, c, b);
    const auto ac = steiner_product(o, a, c);
    const auto l1 = steiner_product(o, apc, b);
    const auto l2 = steiner_product(o, ka, b);
    const auto r1 = steiner_product(o, a, bpc);
    const auto r2 = steiner_product(o, a, kb);
    for (int i = 0; i < n; ++i) {
      if (l1[i] != ab[i] + cb[i] || l2[i] != k * ab[i] || r1[i] != ab[i] + ac[i] || r2[i] != k * ab[i]) {
        rep.axiom1 = false;
      }
    }
  }

  const auto c = detail::symbolic_product(o);
  Polynomial v_dot, w_dot, norm_sq;
  for (int k = 0; k < n; ++k) {
    v_dot += Polynomial::variable(static_cast<std::uint16_t>(k)) * c[k];
    w_dot += Polynomial::variable(static_cast<std::uint16_t>(n + k)) * c[k];
    norm_sq += c[k] * c[k];
  }
  rep.axiom2 = v_dot.is_zero() && w_dot.is_zero();

  const Polynomial vw = detail::symbolic_dot(n, 0, n);
  const Polynomial residual = detail::symbolic_dot(n, 0, 0) * detail::symbolic_dot(n, n, n) - norm_sq - vw * vw;
  rep.axiom3_terms = residual.size();
  rep.axiom3 = residual.is_zero();
  if (rep.axiom3) return rep;

  auto violates = [&](const DesignVector& v, const DesignVector& w) {
    DesignVector x(v);
    x.insert(x.end(), w.begin(), w.end());
    return residual.evaluate(x) != 0;
  };
  const auto cand = detail::small_vectors(n);
  for (const auto& v : cand) {
    for (const auto& w : cand) {
      if (violates(v, w)) {
        rep.witness = detail::evaluate_axiom3(o, v, w);
        return rep;
      }
    }
  }
  // a nonzero polynomial cannot vanish on every random point for long
  for (;;) {
    auto v = random_rational_vector(rng, n);
    auto w = random_rational_vector(rng, n);
    if (violates(v, w)) {
      rep.witness = detail::evaluate_axiom3(o, std::move(v), std::move(w));
      return rep;
    }
  }
}

// ---------------------------------------------------- multiplication tables

enum class MultiplicationTable { quaternion, octonion };

/// Imaginary part of e_i * e_j (i != j) as sign * e_index.
inline SignedBasis imaginary_product(MultiplicationTable t, Point i, Point j) {
  // rows e_i, columns e_j; 0 on the diagonal where the product is real
  static const int quat[3][3] = {{0, 3, -2}, {-3, 0, 1}, {2, -1, 0}};
  static const int oct[7][7] = {
      {0, 3, -2, 5, -4, 7, -6},  {-3, 0, 1, 6, -7, -4, 5}, {2, -1, 0, -7, -6, 5, 4}, {-5, -6, 7, 0, 1, 2, -3},
      {4, 7, 6, -1, 0, -3, -2},  {-7, 4, -5, -2, 3, 0, 1},  {6, -5, -4, 3, 2, -1, 0}};
  const int dim = t == MultiplicationTable::quaternion ? 3 : 7;
  if (i < 1 || j < 1 || i > dim || j > dim) throw Error(ErrorCode::DimensionMismatch, "table index out of range");
  const int e = t == MultiplicationTable::quaternion ? quat[i - 1][j - 1] : oct[i - 1][j - 1];
  if (e == 0) return {};
  return {e > 0 ? 1 : -1, e > 0 ? e : -e};
}

/// True iff s_i x s_j equals Im(e_i * e_j) for every ordered pair i != j.
inline bool multiplication_table_check(const OrientedSTS& o, MultiplicationTable t) {
  const int dim = t == MultiplicationTable::quaternion ? 3 : 7;
  if (o.order() != dim) {
    throw Error(ErrorCode::DimensionMismatch, "table needs n = " + std::to_string(dim));
  }
  const ProductTable m(o);
  for (Point i = 1; i <= dim; ++i) {
    for (Point j = 1; j <= dim; ++j) {
      if (i != j && !(m(i, j) == imaginary_product(t, i, j))) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ vector literals

namespace detail {

inline std::string normalize_minus(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    // U+2212 MINUS SIGN
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x88 && static_cast<unsigned char>(s[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r'; }

}  // namespace detail

/// Coordinate list "1 0 2/3 ..." (exactly n entries), symbolic sum
/// "s1+2*s5-s7", or "0" for the zero vector.
inline DesignVector parse_vector(std::string_view text, int n) {
  const std::string s = detail::normalize_minus(text);
  const bool symbolic = s.find_first_of("sS") != std::string::npos;
  if (!symbolic) {
    std::vector<std::string> tokens;
    std::vector<int> cols;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && detail::is_space(s[i])) ++i;
      if (i >= s.size()) break;
      const std::size_t b = i;
      while (i < s.size() && !detail::is_space(s[i])) ++i;
      tokens.push_back(s.substr(b, i - b));
      cols.push_back(static_cast<int>(b) + 1);
    }
    if (tokens.size() == 1 && parse_scalar(tokens[0], 1, cols[0]) == 0) return zero_vector<Scalar>(n);
    if (static_cast<int>(tokens.size()) != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "vector has " + std::to_string(tokens.size()) + " coordinates, expected " + std::to_string(n));
    }
    DesignVector v;
    for (std::size_t k = 0; k < tokens.size(); ++k) v.push_back(parse_scalar(tokens[k], 1, cols[k]));
    return v;
  }

  DesignVector v = zero_vector<Scalar>(n);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  auto fail = [&](const std::string& what) -> void { throw Error::syntax(1, static_cast<int>(i) + 1, what); };
  bool first = true;
  skip();
  if (i >= s.size()) fail("empty vector");
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Scalar coef = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      const std::size_t b = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
      coef = parse_scalar(std::string_view(s).substr(b, i - b), 1, static_cast<int>(b) + 1);
      skip();
      if (i < s.size() && s[i] == '*') ++i;
      skip();
    }
    if (i >= s.size() || (s[i] != 's' && s[i] != 'S')) fail("expected s<index>");
    ++i;
    const std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i || i - b > 6) fail("expected point index after 's'");
    const int idx = std::stoi(s.substr(b, i - b));
    if (idx < 1 || idx > n) {
      throw Error(ErrorCode::DimensionMismatch, "s" + std::to_string(idx) + " outside 1.." + std::to_string(n));
    }
    v[idx - 1] += sign * coef;
    skip();
  }
  return v;
}

inline std::string format_vector(const DesignVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += to_string(v[i]);
  }
  return out;
}

/// "s1+s5", "-s2+2/3*s6", "0".
inline std::string format_symbolic(const DesignVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Scalar c = v[i];
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!out.empty()) {
      out += '+';
    }
    if (c != 1) out += to_string(c) + "*";
    out += "s" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

inline nlohmann::json vector_json(const DesignVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

inline nlohmann::json matrix_json(const RationalMatrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : m) j.push_back(vector_json(row));
  return j;
}

/// Right-aligned grid, one row per line.
inline std::string format_matrix(const RationalMatrix& m) {
  std::size_t width = 1;
  for (const auto& row : m)
    for (const auto& x : row) width = std::max(width, to_string(x).size());
  std::ostringstream os;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string s = to_string(row[j]);
      if (j) os << ' ';
      os << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace steiner
