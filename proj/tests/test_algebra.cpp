#include <gtest/gtest.h>

#include <random>

#include "steiner/algebra.hpp"
#include "steiner/group.hpp"
#include "steiner/models.hpp"
#include "steiner/polynomial.hpp"

using namespace steiner;

namespace {

RationalMatrix ints(const std::vector<std::vector<int>>& rows) {
  RationalMatrix m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

RationalMatrix mul(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix c = zero_matrix(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

RationalMatrix add(RationalMatrix a, const RationalMatrix& b, int scale) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += scale * b[i][j];
  return a;
}

DesignVector vec(const char* text, int n) { return parse_vector(text, n); }

}  // namespace

TEST(Exact, RankAndKernel) {
  const auto m = ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank_exact(m), 2u);
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(is_zero(multiply(m, k[0])));
  EXPECT_EQ(k[0], (std::vector<Scalar>{1, 1, -1}));
}

TEST(Exact, PrimitiveClearsDenominators) {
  const std::vector<Scalar> v{Scalar(0), Scalar(-1, 2), Scalar(1, 3)};
  EXPECT_EQ(primitive(v), (std::vector<Scalar>{0, 3, -2}));
}

TEST(Exact, ParseScalar) {
  EXPECT_EQ(parse_scalar("-3/6"), Scalar(-1, 2));
  EXPECT_THROW(parse_scalar("1/0"), Error);
  EXPECT_THROW(parse_scalar("x"), Error);
}

TEST(Polynomial, ProductAndEvaluate) {
  const auto x = Polynomial::variable(0);
  const auto y = Polynomial::variable(1);
  auto p = x * x;
  p -= y * y;
  auto q = x;
  q -= y;
  auto r = x;
  r += y;
  EXPECT_EQ(p, q * r);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.evaluate({Scalar(3), Scalar(2)}), Scalar(5));
  auto z = p;
  z -= q * r;
  EXPECT_TRUE(z.is_zero());
}

TEST(Product, BasisProductsFollowOrientation) {
  const auto o = builtin_oriented("o3_7");
  const auto table = product_table(o);
  for (int i = 1; i <= 7; ++i) {
    EXPECT_FALSE(table(i, i).point.has_value());
    for (int j = 1; j <= 7; ++j) {
      if (i == j) continue;
      const auto p = steiner_product(o, basis_vector(7, i), basis_vector(7, j));
      const Point k = o.base().third(i, j);
      EXPECT_EQ(p[k - 1], Scalar(o.sign(i, j)));
      EXPECT_EQ(table(i, j).sign, o.sign(i, j));
      EXPECT_EQ(*table(i, j).point, k);
    }
  }
}

TEST(Product, AnticommutativeAndOrthogonal) {
  std::mt19937_64 rng(7);
  for (const char* name : {"o1_7", "o4_7", "o6_9", "zd7"}) {
    const auto o = builtin_oriented(name);
    const auto a = random_rational_vector(rng, o.order());
    const auto b = random_rational_vector(rng, o.order());
    const auto ab = steiner_product(o, a, b);
    auto ba = steiner_product(o, b, a);
    for (auto& x : ba) x = -x;
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(inner_product(ab, a), Scalar(0));
    EXPECT_EQ(inner_product(ab, b), Scalar(0));
    EXPECT_EQ(product_via_trace(o, a, b), ab);
  }
}

TEST(Product, CompanionMatrixActsAsLeftProduct) {
  std::mt19937_64 rng(11);
  const auto o = builtin_oriented("o2_9");
  const auto w = random_rational_vector(rng, 9);
  const auto v = random_rational_vector(rng, 9);
  const auto a = companion_matrix(o, w);
  EXPECT_EQ(multiply(a, v), steiner_product(o, w, v));
  EXPECT_EQ(add(a, transpose(a), 1), zero_matrix(9, 9));
}

TEST(Product, LiftedAutomorphismsPreserveProduct) {
  std::mt19937_64 rng(3);
  const auto o = builtin_oriented("o1_9");
  const auto a = random_rational_vector(rng, 9);
  const auto b = random_rational_vector(rng, 9);
  const auto g = oriented_aut_group(o);
  for (const auto& phi : g.elements()) {
    EXPECT_EQ(steiner_product(o, lift_automorphism(phi, a), lift_automorphism(phi, b)),
              lift_automorphism(phi, steiner_product(o, a, b)));
  }
}

TEST(Product, ReferenceOrderNineCompanionMatrix) {
  const auto a = companion_matrix(builtin_oriented("o1_9"), vec("s1+s2+s3", 9));
  const auto expected = ints({{0, -1, 1, 0, 0, 0, 0, 0, 0},
                              {1, 0, -1, 0, 0, 0, 0, 0, 0},
                              {-1, 1, 0, 0, 0, 0, 0, 0, 0},
                              {0, 0, 0, 0, 0, 0, -1, -1, -1},
                              {0, 0, 0, 0, 0, 0, -1, -1, -1},
                              {0, 0, 0, 0, 0, 0, -1, -1, -1},
                              {0, 0, 0, 1, 1, 1, 0, 0, 0},
                              {0, 0, 0, 1, 1, 1, 0, 0, 0},
                              {0, 0, 0, 1, 1, 1, 0, 0, 0}});
  EXPECT_EQ(a, expected);
}

TEST(Product, MultiplicationTables) {
  EXPECT_TRUE(multiplication_table_check(builtin_oriented("o1_3"), MultiplicationTable::quaternion));
  EXPECT_TRUE(multiplication_table_check(builtin_oriented("o1_7"), MultiplicationTable::octonion));
  EXPECT_FALSE(multiplication_table_check(builtin_oriented("o3_7"), MultiplicationTable::octonion));
}

TEST(ZeroDivisor, ReferenceMatrixIsNegatedCompanion) {
  // The reference matrix has entries <s_i x w, s_j>, the transpose of A_w.
  const auto reference = ints({{0, 0, 0, 1, 0, 0, 0},
                             {0, 0, 1, 0, 0, 0, -1},
                             {0, -1, 0, 0, 0, -1, 0},
                             {-1, 0, 0, 0, 1, 0, 0},
                             {0, 0, 0, -1, 0, 0, 0},
                             {0, 0, 1, 0, 0, 0, -1},
                             {0, 1, 0, 0, 0, 1, 0}});
  const auto a = companion_matrix(builtin_oriented("zd7"), vec("s1+s5", 7));
  EXPECT_EQ(add(reference, a, 1), zero_matrix(7, 7));
  EXPECT_EQ(reference, transpose(a));
}

TEST(ZeroDivisor, KernelAndRank) {
  const auto o = builtin_oriented("zd7");
  const auto w = vec("s1+s5", 7);
  const auto r = is_zero_divisor(o, w);
  EXPECT_TRUE(r.zero_divisor);
  EXPECT_EQ(r.rank, 4u);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(is_zero(steiner_product(o, w, *r.witness)));
  const auto k = kernel_basis(companion_matrix(o, w));
  EXPECT_TRUE(same_span(k, {vec("s1+s5", 7), vec("s2-s6", 7), vec("s3+s7", 7)}));
}

TEST(ZeroDivisor, MinimalPolynomialOracle) {
  // Spectrum {0^3, +-2i, +-sqrt2 i}: A^5 + 6A^3 + 8A = 0 while A^3 + 6A != 0.
  const auto a = companion_matrix(builtin_oriented("zd7"), vec("s1+s5", 7));
  const auto a2 = mul(a, a);
  const auto a3 = mul(a2, a);
  const auto a5 = mul(a3, a2);
  EXPECT_EQ(add(add(a5, a3, 6), a, 8), zero_matrix(7, 7));
  EXPECT_NE(add(a3, a, 6), zero_matrix(7, 7));
}

TEST(ZeroDivisor, OrbitUnderAutomorphisms) {
  const auto o = builtin_oriented("zd7");
  const auto g = oriented_aut_group(o);
  for (const auto& phi : g.elements()) {
    const auto w = lift_automorphism(phi, vec("s1+s5", 7));
    EXPECT_TRUE(is_zero_divisor(o, w).zero_divisor) << format_symbolic(w);
  }
}

TEST(ZeroDivisor, NoneForOctonionTableOnPairs) {
  const auto o = builtin_oriented("o1_7");
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      auto w = basis_vector(7, i);
      w[j - 1] = 1;
      EXPECT_FALSE(is_zero_divisor(o, w).zero_divisor);
    }
}

TEST(ZeroDivisor, ZeroVectorThrows) {
  try {
    is_zero_divisor(builtin_oriented("zd7"), vec("0", 7));
    FAIL() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroVector);
  }
}

TEST(Axioms, NormIdentityHoldsForBothOrderSevenTwentyOneClasses) {
  for (const char* name : {"o1_3", "o1_7", "o2_7", "rg7a"}) {
    const auto r = check_cross_axioms(builtin_oriented(name));
    EXPECT_TRUE(r.axiom1 && r.axiom2 && r.axiom3) << name;
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(Axioms, NormIdentityFailsWithWitness) {
  for (const char* name : {"o3_7", "o4_7", "zd7", "o1_9", "o16_9"}) {
    const auto o = builtin_oriented(name);
    const auto r = check_cross_axioms(o);
    EXPECT_TRUE(r.axiom1 && r.axiom2) << name;
    EXPECT_FALSE(r.axiom3) << name;
    ASSERT_TRUE(r.witness.has_value());
    const auto& x = *r.witness;
    const auto vw = steiner_product(o, x.v, x.w);
    const Scalar d = inner_product(x.v, x.w);
    EXPECT_EQ(x.lhs, inner_product(x.v, x.v) * inner_product(x.w, x.w));
    EXPECT_EQ(x.rhs, inner_product(vw, vw) + d * d);
    EXPECT_NE(x.lhs, x.rhs);
  }
}

TEST(Vectors, ParseForms) {
  EXPECT_EQ(vec("1 0 -1/2", 3), (DesignVector{1, 0, Scalar(-1, 2)}));
  EXPECT_EQ(vec("s1+2*s3-s2", 3), (DesignVector{1, -1, 2}));
  EXPECT_EQ(vec("s1 \xe2\x88\x92 s3", 3), (DesignVector{1, 0, -1}));
  EXPECT_EQ(vec("0", 3), (DesignVector{0, 0, 0}));
  EXPECT_THROW(vec("s4", 3), Error);
  EXPECT_THROW(vec("1 2", 3), Error);
  EXPECT_THROW(vec("s1+", 3), Error);
}

TEST(Vectors, FormatSymbolic) {
  EXPECT_EQ(format_symbolic(vec("s1-s2+1/2*s3", 3)), "s1-s2+1/2*s3");
  EXPECT_EQ(format_symbolic(vec("0", 3)), "0");
}

TEST(Axioms, KnownViolatingPairForZeroDivisorExample) {
  const auto x = detail::evaluate_axiom3(builtin_oriented("zd7"), vec("s1+s5", 7), vec("s3+s7", 7));
  EXPECT_EQ(x.lhs, Scalar(4));
  EXPECT_EQ(x.rhs, Scalar(0));
}

TEST(Axioms, ReversalPreservesNormIdentity) {
  // o2_7 is a relabeling of reverse(o1_7), so it inherits axiom 3.
  const auto o1 = builtin_oriented("o1_7");
  const auto o2 = builtin_oriented("o2_7");
  EXPECT_TRUE(are_isomorphic(o2, o1.reversed()).has_value());
  std::mt19937_64 rng(23);
  const auto a = random_rational_vector(rng, 7);
  const auto b = random_rational_vector(rng, 7);
  auto neg = steiner_product(o1.reversed(), a, b);
  for (auto& x : neg) x = -x;
  EXPECT_EQ(neg, steiner_product(o1, a, b));
}
