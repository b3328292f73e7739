#pragma once

// Floating-point dynamics of L_w(v) = w x v: rank growth, the real block form
// of the skew-symmetric companion matrix, and the long-run behaviour of the
// normalized iterates.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "steiner/algebra.hpp"
#include "steiner/exact.hpp"

namespace steiner {

using FloatVector = Eigen::VectorXd;
using FloatMatrix = Eigen::MatrixXd;

struct Tolerances {
  double skew = 1e-10;
  double orth = 1e-10;
  double block = 1e-10;
  double cluster = 1e-8;  ///< relative gap below which two lambda^2 values merge
  double zero = 1e-9;     ///< component counted as present above zero * |v|
  double rank = 1e-8;     ///< numerical rank cutoff relative to the largest pivot
  double limit = 1e-8;    ///< Cauchy gap of the L^{4t} subsequence
  double projection = 1e-7;
  double cycle = 1e-8;
  double cesaro = 1e-3;
  double resolve = 1e-12;  ///< slowest present decay over the horizon must beat this
};

inline FloatVector to_float(const DesignVector& v) {
  FloatVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i].convert_to<double>();
  return out;
}

inline FloatMatrix to_float(const RationalMatrix& m) {
  const auto rows = static_cast<Eigen::Index>(m.size());
  const auto cols = static_cast<Eigen::Index>(m.empty() ? 0 : m[0].size());
  FloatMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = m[i][j].convert_to<double>();
  return out;
}

inline FloatMatrix companion_matrix(const OrientedSTS& o, const FloatVector& w) {
  const std::vector<double> wv(w.data(), w.data() + w.size());
  const auto a = companion_matrix<double>(o, wv);
  FloatMatrix out(w.size(), w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    for (Eigen::Index j = 0; j < w.size(); ++j) out(i, j) = a[i][j];
  return out;
}

// ------------------------------------------------------------- iteration

struct IterationTrace {
  FloatVector w;
  FloatVector v;
  std::vector<FloatVector> iterates;                 ///< L^0 v .. L^k v
  std::vector<std::optional<FloatVector>> normalized;  ///< empty where an iterate vanishes
};

inline IterationTrace iterate_L(const OrientedSTS& o, const FloatVector& w, const FloatVector& v, int k) {
  if (w.size() != o.order() || v.size() != o.order()) {
    throw Error(ErrorCode::DimensionMismatch, "iteration vectors must have dimension " + std::to_string(o.order()));
  }
  if (k < 0) throw Error(ErrorCode::DimensionMismatch, "iteration count must be non-negative");
  const FloatMatrix a = companion_matrix(o, w);
  IterationTrace t{w, v, {}, {}};
  FloatVector x = v;
  FloatVector xn = v;  // renormalized each step so it stays finite
  bool vanished = false;
  for (int i = 0; i <= k; ++i) {
    if (i) {
      x = a * x;
      xn = a * xn;
    }
    t.iterates.push_back(x);
    const double nx = xn.norm();
    vanished = vanished || !(nx > 0);
    if (vanished) {
      t.normalized.emplace_back(std::nullopt);
    } else {
      xn /= nx;
      t.normalized.emplace_back(xn);
    }
  }
  return t;
}

/// Exact iterates v, A v, ..., A^k v.
inline std::vector<DesignVector> exact_iterates(const OrientedSTS& o, const DesignVector& w, const DesignVector& v,
                                                int k) {
  const RationalMatrix a = companion_matrix(o, w);
  std::vector<DesignVector> out{v};
  for (int i = 1; i <= k; ++i) out.push_back(multiply(a, out.back()));
  return out;
}

// ------------------------------------------------------------ rank growth

/// Rank of the columns, each scaled to unit length first so growth in
/// |lambda|^k does not masquerade as rank.
inline std::size_t numerical_rank(const std::vector<FloatVector>& cols, double tol) {
  std::vector<FloatVector> kept;
  for (const auto& c : cols) {
    const double nc = c.norm();
    if (nc > 0 && std::isfinite(nc)) kept.push_back(c / nc);
  }
  if (kept.empty()) return 0;
  FloatMatrix m(kept.front().size(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = kept[j];
  Eigen::ColPivHouseholderQR<FloatMatrix> qr(m);
  qr.setThreshold(tol);
  return static_cast<std::size_t>(qr.rank());
}

struct RankGrowth {
  std::vector<std::size_t> ranks;  ///< ranks[k] = dim span{v, L^1 v, ..., L^k v}
  int plateau_k = 0;
  std::size_t plateau_rank = 0;
  bool exact = false;
};

namespace detail {

inline void find_plateau(RankGrowth& g) {
  g.plateau_k = static_cast<int>(g.ranks.size()) - 1;
  for (std::size_t k = 0; k + 1 < g.ranks.size(); ++k) {
    if (g.ranks[k] == g.ranks[k + 1]) {
      g.plateau_k = static_cast<int>(k);
      break;
    }
  }
  g.plateau_rank = g.ranks.at(static_cast<std::size_t>(g.plateau_k));
}

}  // namespace detail

/// Exact rank growth up to L^max_k (default n).
inline RankGrowth rank_growth(const OrientedSTS& o, const DesignVector& w, const DesignVector& v, int max_k = -1) {
  if (max_k < 0) max_k = o.order();
  const auto it = exact_iterates(o, w, v, max_k);
  RankGrowth g;
  g.exact = true;
  std::vector<DesignVector> prefix;
  for (const auto& x : it) {
    prefix.push_back(x);
    g.ranks.push_back(rank_exact(prefix));
  }
  detail::find_plateau(g);
  return g;
}

inline RankGrowth rank_growth(const OrientedSTS& o, const FloatVector& w, const FloatVector& v, int max_k = -1,
                              double tol = Tolerances{}.rank) {
  if (max_k < 0) max_k = o.order();
  const auto t = iterate_L(o, w, v, max_k);
  RankGrowth g;
  std::vector<FloatVector> prefix;
  for (const auto& x : t.iterates) {
    prefix.push_back(x);
    g.ranks.push_back(numerical_rank(prefix, tol));
  }
  detail::find_plateau(g);
  return g;
}

/// Checks A_w^3 + |w|^2 A_w = 0 as a polynomial identity in w_1..w_n; returns
/// the number of nonzero polynomial terms left over. When it is zero every
/// orbit satisfies L^3 v = -|w|^2 L v, so rank growth stops at 3.
inline std::size_t cubic_relation_residual(const OrientedSTS& o) {
  const int n = o.order();
  using PolyMatrix = std::vector<std::vector<Polynomial>>;
  PolyMatrix a(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
  for (Point k = 1; k <= n; ++k) {
    for (Point j = 1; j <= n; ++j) {
      if (j == k) continue;
      const Point i = o.base().third(k, j);
      a[i - 1][j - 1] += Polynomial::variable(static_cast<std::uint16_t>(k - 1)) * o.sign(k, j);
    }
  }
  auto mul = [n](const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix z(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (x[i][l].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          if (!y[l][j].is_zero()) z[i][j] += x[i][l] * y[l][j];
        }
      }
    return z;
  };
  const PolyMatrix a3 = mul(mul(a, a), a);
  Polynomial norm;
  for (int k = 0; k < n; ++k) {
    norm += Polynomial::variable(static_cast<std::uint16_t>(k)) * Polynomial::variable(static_cast<std::uint16_t>(k));
  }
  std::size_t terms = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) terms += (a3[i][j] + norm * a[i][j]).size();
  return terms;
}

// ---------------------------------------------------------- block form

/// Q A Q^T = B where B holds 2x2 blocks [[0, l],[-l, 0]] (l decreasing) and
/// then zeros. Rows of Q are the basis vectors: for pair p, A r_{2p} = l r_{2p-1}
/// and A r_{2p-1} = -l r_{2p}.
struct SkewSpectrum {
  int n = 0;
  std::vector<double> lambdas;            ///< distinct, strictly decreasing
  std::vector<int> multiplicity;          ///< block pairs per distinct lambda
  std::vector<double> pair_lambda;        ///< per block pair
  std::vector<int> pair_cluster;          ///< index into lambdas
  FloatMatrix q;                          ///< n x n orthogonal
  int null_dim = 0;

  std::size_t pairs() const { return pair_lambda.size(); }

  FloatMatrix block_form() const {
    FloatMatrix b = FloatMatrix::Zero(n, n);
    for (std::size_t p = 0; p < pairs(); ++p) {
      const auto i = static_cast<Eigen::Index>(2 * p);
      b(i, i + 1) = pair_lambda[p];
      b(i + 1, i) = -pair_lambda[p];
    }
    return b;
  }
  /// Rows of Q spanning the null space.
  FloatMatrix null_basis() const { return q.bottomRows(null_dim).transpose(); }

  double reconstruction_error(const FloatMatrix& a) const { return (q.transpose() * block_form() * q - a).norm(); }
  double orthogonality_error() const { return (q.transpose() * q - FloatMatrix::Identity(n, n)).norm(); }
};

/// known_rank (from exact arithmetic, when available) fixes the null
/// dimension; otherwise eigenvalues of -A^2 below zero_tol * max are null.
inline SkewSpectrum skew_block_diagonalize(const FloatMatrix& a, const Tolerances& tol = {},
                                           std::optional<std::size_t> known_rank = std::nullopt) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::NotSkewSymmetric, "matrix is not square");
  const double scale = std::max(a.norm(), 1.0);
  if ((a + a.transpose()).norm() > tol.skew * scale) {
    throw Error(ErrorCode::NotSkewSymmetric, "|A + A^T| exceeds tolerance");
  }
  SkewSpectrum s;
  s.n = static_cast<int>(n);
  s.q = FloatMatrix::Zero(n, n);
  if (n == 0) return s;

  const FloatMatrix ata = -(a * a);
  const FloatMatrix sym = 0.5 * (ata + ata.transpose());
  Eigen::SelfAdjointEigenSolver<FloatMatrix> eig(sym);
  // descending order
  std::vector<double> mu(static_cast<std::size_t>(n));
  FloatMatrix vec(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    mu[static_cast<std::size_t>(i)] = std::max(eig.eigenvalues()[n - 1 - i], 0.0);
    vec.col(i) = eig.eigenvectors().col(n - 1 - i);
  }
  const double mu_max = mu.front();
  std::size_t nonzero = 0;
  if (known_rank) {
    nonzero = *known_rank;
  } else {
    while (nonzero < mu.size() && mu[nonzero] > tol.zero * std::max(mu_max, 1e-300)) ++nonzero;
    nonzero -= nonzero % 2;
  }
  if (nonzero % 2 != 0 || nonzero > static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::DegenerateSpectrum, "rank of a skew-symmetric matrix must be even");
  }

  // cluster lambda^2 values
  std::vector<std::pair<std::size_t, std::size_t>> clusters;  // [begin, end)
  for (std::size_t i = 0; i < nonzero;) {
    std::size_t j = i + 1;
    while (j < nonzero && mu[j - 1] - mu[j] <= tol.cluster * mu[i]) ++j;
    clusters.emplace_back(i, j);
    i = j;
  }
  for (const auto& [b, e] : clusters) {
    if ((e - b) % 2 != 0) {
      throw Error(ErrorCode::DegenerateSpectrum, "eigenvalue cluster of odd size; clustering is ambiguous");
    }
  }

  Eigen::Index row = 0;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const auto [b, e] = clusters[c];
    double mean = 0;
    for (std::size_t i = b; i < e; ++i) mean += mu[i];
    const double lambda = std::sqrt(mean / static_cast<double>(e - b));
    s.lambdas.push_back(lambda);
    s.multiplicity.push_back(static_cast<int>((e - b) / 2));
    for (std::size_t i = b; i < e && row < static_cast<Eigen::Index>(nonzero); ++i) {
      FloatVector u = vec.col(static_cast<Eigen::Index>(i));
      for (Eigen::Index r = 0; r < row; ++r) u -= s.q.row(r).dot(u) * s.q.row(r).transpose();
      const double nu = u.norm();
      if (nu < 1e-6) continue;  // already covered by an earlier block of this cluster
      u /= nu;
      FloatVector au = a * u;
      for (Eigen::Index r = 0; r < row; ++r) au -= s.q.row(r).dot(au) * s.q.row(r).transpose();
      au -= u.dot(au) * u;
      au /= au.norm();
      s.q.row(row) = au.transpose();
      s.q.row(row + 1) = u.transpose();
      s.pair_lambda.push_back(lambda);
      s.pair_cluster.push_back(static_cast<int>(c));
      row += 2;
    }
  }
  if (row != static_cast<Eigen::Index>(nonzero)) {
    throw Error(ErrorCode::DegenerateSpectrum, "could not build an orthonormal block basis");
  }
  // null space: remaining eigenvectors, orthonormalized against the blocks
  for (std::size_t i = nonzero; i < static_cast<std::size_t>(n); ++i) {
    FloatVector u = vec.col(static_cast<Eigen::Index>(i));
    for (Eigen::Index r = 0; r < row; ++r) u -= s.q.row(r).dot(u) * s.q.row(r).transpose();
    u /= u.norm();
    s.q.row(row++) = u.transpose();
  }
  s.null_dim = static_cast<int>(n) - static_cast<int>(nonzero);
  return s;
}

struct SpectralDecomposition {
  std::vector<FloatVector> components;  ///< v_j in V_j, one per distinct lambda
  FloatVector null_part;
  int p = 0;
  std::optional<int> leading;  ///< min{j : v_j != 0}

  double reconstruction_error(const FloatVector& v) const {
    FloatVector r = v - null_part;
    for (const auto& c : components) r -= c;
    return r.norm();
  }
};

/// Orthogonal projector onto V_j (as an n x n matrix).
inline FloatMatrix projector(const SkewSpectrum& s, int j) {
  FloatMatrix p = FloatMatrix::Zero(s.n, s.n);
  for (std::size_t k = 0; k < s.pairs(); ++k) {
    if (s.pair_cluster[k] != j) continue;
    for (Eigen::Index r : {static_cast<Eigen::Index>(2 * k), static_cast<Eigen::Index>(2 * k + 1)}) {
      p += s.q.row(r).transpose() * s.q.row(r);
    }
  }
  return p;
}

inline SpectralDecomposition decompose(const SkewSpectrum& s, const FloatVector& v, const Tolerances& tol = {}) {
  if (v.size() != s.n) throw Error(ErrorCode::DimensionMismatch, "vector dimension differs from spectrum");
  SpectralDecomposition d;
  const double nv = v.norm();
  for (std::size_t j = 0; j < s.lambdas.size(); ++j) {
    d.components.push_back(projector(s, static_cast<int>(j)) * v);
    if (d.components.back().norm() > tol.zero * nv) {
      ++d.p;
      if (!d.leading) d.leading = static_cast<int>(j);
    }
  }
  const FloatMatrix nb = s.null_basis();
  d.null_part = nb * (nb.transpose() * v);
  return d;
}

// ---------------------------------------------------- theorem verification

struct DynamicsCheck {
  std::string name;
  nlohmann::json expected;
  nlohmann::json measured;
  bool pass = false;
  bool informational = false;  ///< reported but not counted
  std::string note;
};

struct DynamicsReport {
  int n = 0;
  int p = 0;
  bool null_part_present = false;
  bool exact = false;
  std::vector<double> lambdas;
  std::vector<int> multiplicity;
  int null_dim = 0;
  std::optional<int> leading;
  int horizon = 0;
  std::vector<DynamicsCheck> checks;
  std::vector<std::string> notes;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.informational || c.pass; });
  }
};

struct DynamicsInput {
  FloatVector w;
  FloatVector v;
  std::optional<DesignVector> exact_w;  ///< enables the exact-rank oracle
  std::optional<DesignVector> exact_v;
};

inline DynamicsInput dynamics_input(const DesignVector& w, const DesignVector& v) {
  return {to_float(w), to_float(v), w, v};
}

/// Runs every bullet of the dynamics theorem for one (w, v). Throws
/// DegenerateSpectrum when the spectrum cannot be resolved at this horizon.
inline DynamicsReport verify_thmdyn(const OrientedSTS& o, const DynamicsInput& in, int horizon = 10000,
                                    const Tolerances& tol = {}) {
  const int n = o.order();
  if (in.w.size() != n || in.v.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "vectors must have dimension " + std::to_string(n));
  }
  const bool exact = in.exact_w && in.exact_v;
  const FloatMatrix a = companion_matrix(o, in.w);
  std::optional<std::size_t> known_rank;
  if (in.exact_w) known_rank = rank_exact(companion_matrix(o, *in.exact_w));
  const SkewSpectrum spec = skew_block_diagonalize(a, tol, known_rank);
  const SpectralDecomposition dec = decompose(spec, in.v, tol);

  DynamicsReport r;
  r.n = n;
  r.p = dec.p;
  r.exact = exact;
  r.lambdas = spec.lambdas;
  r.multiplicity = spec.multiplicity;
  r.null_dim = spec.null_dim;
  r.leading = dec.leading;
  r.horizon = horizon;
  r.null_part_present = dec.null_part.norm() > tol.zero * in.v.norm();
  if (exact) {
    // exact test: N = 0 iff v lies in the range of A
    const RationalMatrix ae = companion_matrix(o, *in.exact_w);
    RationalMatrix cols = transpose(ae);
    const std::size_t ra = rank_exact(cols);
    cols.push_back(*in.exact_v);
    r.null_part_present = rank_exact(cols) > ra;
  }

  // resolvability of the leading component at this horizon
  if (dec.leading) {
    const int j = *dec.leading;
    double slowest = 0;
    for (std::size_t m = static_cast<std::size_t>(j) + 1; m < spec.lambdas.size(); ++m) {
      if (dec.components[m].norm() > tol.zero * in.v.norm()) {
        slowest = std::max(slowest, spec.lambdas[m] / spec.lambdas[static_cast<std::size_t>(j)]);
      }
    }
    if (slowest > 0 && std::pow(slowest, horizon) > tol.resolve) {
      std::ostringstream os;
      os << "lambda ratio " << slowest << " too close to 1 for horizon " << horizon;
      throw Error(ErrorCode::DegenerateSpectrum, os.str());
    }
  }

  // (i), (ii): span dimensions over L^0..L^n
  std::size_t dim_all = 0;
  std::size_t dim_tail = 0;
  if (exact) {
    auto it = exact_iterates(o, *in.exact_w, *in.exact_v, n);
    dim_all = rank_exact(it);
    it.erase(it.begin());
    dim_tail = rank_exact(it);
  } else {
    auto t = iterate_L(o, in.w, in.v, n);
    dim_all = numerical_rank(t.iterates, tol.rank);
    t.iterates.erase(t.iterates.begin());
    dim_tail = numerical_rank(t.iterates, tol.rank);
  }
  const int expect_all = 2 * dec.p + (r.null_part_present ? 1 : 0);
  r.checks.push_back({"dim_span_v_L1_Ln", expect_all, dim_all, static_cast<int>(dim_all) == expect_all, false,
                      r.null_part_present ? "N != 0, expect 2p+1" : "N = 0, expect 2p"});
  r.checks.push_back({"dim_span_L1_Ln", 2 * dec.p, dim_tail, static_cast<int>(dim_tail) == 2 * dec.p, false, ""});

  if (!dec.leading) {
    for (const char* name : {"limit_cauchy", "limit_in_Vj", "dim_span_vbar", "cycle", "cesaro"}) {
      r.checks.push_back({name, nullptr, nullptr, true, false, "vacuous: p = 0"});
    }
    return r;
  }

  // normalized power iteration; L^i itself overflows long before the horizon
  FloatVector x = in.v / in.v.norm();
  FloatVector sum = FloatVector::Zero(n);
  FloatVector prev4, last4;
  double gap = 0;
  for (int i = 1; i <= horizon; ++i) {
    x = a * x;
    x /= x.norm();
    sum += x;
    if (i % 4 == 0) {
      prev4 = last4;
      last4 = x;
    }
  }
  if (prev4.size() == 0) throw Error(ErrorCode::DegenerateSpectrum, "horizon shorter than two L^4 steps");
  gap = (last4 - prev4).norm();
  r.checks.push_back({"limit_cauchy", tol.limit, gap, gap < tol.limit, false, "|LN^{4T} - LN^{4(T-1)}|"});

  const FloatVector vbar = last4;
  const FloatMatrix pj = projector(spec, *dec.leading);
  const double residual = (vbar - pj * vbar).norm();
  r.checks.push_back({"limit_in_Vj", tol.projection, residual, residual < tol.projection, false,
                      "j = " + std::to_string(*dec.leading + 1)});

  const FloatVector l1 = a * vbar;
  const FloatVector l2 = a * l1;
  const std::size_t dim_bar = numerical_rank({vbar, l1, l2}, tol.rank);
  r.checks.push_back({"dim_span_vbar", 2, dim_bar, dim_bar == 2, false, ""});

  double worst = 0;
  double worst_raw = 0;
  FloatVector y = vbar;
  std::vector<FloatVector> raw{vbar};
  for (int m = 0; m < 10; ++m) raw.push_back(a * raw.back());
  for (int m = 0; m + 2 < static_cast<int>(raw.size()); ++m) {
    const FloatVector& u0 = raw[static_cast<std::size_t>(m)];
    const FloatVector& u2 = raw[static_cast<std::size_t>(m) + 2];
    worst = std::max(worst, (u0 / u0.norm() + u2 / u2.norm()).norm());
    worst_raw = std::max(worst_raw, (u0 + u2).norm() / std::max(u0.norm(), u2.norm()));
  }
  r.checks.push_back({"cycle", tol.cycle, worst, worst < tol.cycle, false, "max_m |LN^m(vbar) + LN^{m+2}(vbar)|"});
  const double lj = spec.lambdas[static_cast<std::size_t>(*dec.leading)];
  r.checks.push_back({"cycle_unnormalized", tol.cycle, worst_raw, worst_raw < tol.cycle, true,
                      "relative |L^m(vbar) + L^{m+2}(vbar)|; equals |1 - lambda_j^2| / max(1, lambda_j^2) "
                      "with lambda_j = " +
                          std::to_string(lj)});

  const double ces = (sum / static_cast<double>(horizon)).norm();
  r.checks.push_back({"cesaro", tol.cesaro, ces, ces < tol.cesaro, false, "|(1/t) sum_{i=1..t} LN^i(v)|, t = horizon"});
  return r;
}

inline nlohmann::json to_json(const DynamicsReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"name", c.name}, {"expected", c.expected}, {"measured", c.measured}, {"pass", c.pass}};
    if (c.informational) j["informational"] = true;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(j);
  }
  nlohmann::json lead = nullptr;
  if (r.leading) lead = *r.leading + 1;
  return {{"n", r.n},
          {"p", r.p},
          {"null_part_present", r.null_part_present},
          {"exact_oracle", r.exact},
          {"lambdas", r.lambdas},
          {"multiplicity", r.multiplicity},
          {"null_dim", r.null_dim},
          {"leading", lead},
          {"horizon", r.horizon},
          {"checks", checks},
          {"pass", r.all_pass()}};
}

inline std::string to_text(const DynamicsReport& r) {
  std::ostringstream os;
  os << "n=" << r.n << " p=" << r.p << " null_dim=" << r.null_dim
     << " N=" << (r.null_part_present ? "nonzero" : "zero") << (r.exact ? " (exact ranks)" : "") << '\n';
  os << "lambda:";
  for (std::size_t i = 0; i < r.lambdas.size(); ++i) os << ' ' << r.lambdas[i] << 'x' << r.multiplicity[i];
  os << '\n';
  for (const auto& c : r.checks) {
    os << (c.informational ? "info" : (c.pass ? "PASS" : "FAIL")) << "  " << c.name << "  measured=" << c.measured.dump()
       << " expected=" << c.expected.dump();
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << '\n';
  }
  return os.str();
}

/// CSV rows: k, |L^k v|, normalized coordinates.
inline std::string trace_csv(const IterationTrace& t) {
  std::ostringstream os;
  os.precision(17);
  os << "k,norm";
  for (Eigen::Index i = 0; i < t.v.size(); ++i) os << ",x" << (i + 1);
  os << '\n';
  for (std::size_t k = 0; k < t.iterates.size(); ++k) {
    os << k << ',' << t.iterates[k].norm();
    for (Eigen::Index i = 0; i < t.v.size(); ++i) {
      os << ',';
      if (t.normalized[k]) os << (*t.normalized[k])[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace steiner
