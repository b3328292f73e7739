#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "steiner/dynamics.hpp"
#include "steiner/models.hpp"

using namespace steiner;

namespace {

const DynamicsCheck& check(const DynamicsReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST(Spectrum, BlockFormOfZeroDivisorCompanion) {
  const auto o = builtin_oriented("zd7");
  const auto a = to_float(companion_matrix(o, parse_vector("s1+s5", 7)));
  const auto s = skew_block_diagonalize(a, {}, 4);
  ASSERT_EQ(s.lambdas.size(), 2u);
  EXPECT_NEAR(s.lambdas[0], 2.0, 1e-12);
  EXPECT_NEAR(s.lambdas[1], std::sqrt(2.0), 1e-12);
  EXPECT_EQ(s.null_dim, 3);
  EXPECT_LT(s.reconstruction_error(a), 1e-12);
  EXPECT_LT(s.orthogonality_error(), 1e-12);
  EXPECT_LT((a * s.null_basis()).norm(), 1e-12);
}

TEST(Spectrum, RandomVectorsReconstruct) {
  std::mt19937_64 rng(5);
  for (const char* name : {"o1_7", "o3_7", "o7_9", "o16_9"}) {
    const auto o = builtin_oriented(name);
    const auto a = to_float(companion_matrix(o, random_rational_vector(rng, o.order())));
    const auto s = skew_block_diagonalize(a);
    EXPECT_LT(s.reconstruction_error(a), 1e-10) << name;
    EXPECT_LT(s.orthogonality_error(), 1e-10) << name;
    EXPECT_EQ(2 * static_cast<int>(s.pairs()) + s.null_dim, o.order());
  }
}

TEST(Spectrum, RejectsNonSkewInput) {
  FloatMatrix a = FloatMatrix::Identity(3, 3);
  try {
    skew_block_diagonalize(a);
    FAIL() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSkewSymmetric);
  }
}

TEST(Spectrum, ProjectorsSumToIdentity) {
  const auto o = builtin_oriented("zd7");
  const auto s = skew_block_diagonalize(to_float(companion_matrix(o, parse_vector("s1+s5", 7))), {}, 4);
  FloatMatrix sum = s.null_basis() * s.null_basis().transpose();
  for (std::size_t j = 0; j < s.lambdas.size(); ++j) sum += projector(s, static_cast<int>(j));
  EXPECT_LT((sum - FloatMatrix::Identity(7, 7)).norm(), 1e-12);
}

TEST(Dynamics, IteratesMatchExactArithmetic) {
  const auto o = builtin_oriented("o4_7");
  const auto w = parse_vector("s1+2*s3-s6", 7);
  const auto v = parse_vector("s2+s7", 7);
  const auto exact = exact_iterates(o, w, v, 6);
  const auto t = iterate_L(o, to_float(w), to_float(v), 6);
  ASSERT_EQ(exact.size(), t.iterates.size());
  for (std::size_t k = 0; k < exact.size(); ++k) EXPECT_LT((to_float(exact[k]) - t.iterates[k]).norm(), 1e-9);
}

TEST(Dynamics, NormalizedTraceStaysFiniteForLongRuns) {
  const auto o = builtin_oriented("zd7");
  const auto t = iterate_L(o, to_float(parse_vector("s1+s5", 7)), to_float(parse_vector("s2", 7)), 5000);
  ASSERT_TRUE(t.normalized.back().has_value());
  EXPECT_NEAR(t.normalized.back()->norm(), 1.0, 1e-12);
}

TEST(Dynamics, RankGrowthPlateaus) {
  const auto o = builtin_oriented("zd7");
  const auto g = rank_growth(o, parse_vector("s1+s5", 7), parse_vector("s2", 7));
  EXPECT_TRUE(g.exact);
  EXPECT_EQ(g.ranks, (std::vector<std::size_t>{1, 2, 3, 3, 3, 3, 3, 3}));
  EXPECT_EQ(g.plateau_rank, 3u);
  EXPECT_EQ(g.plateau_k, 2);
  const auto f = rank_growth(o, to_float(parse_vector("s1+s5", 7)), to_float(parse_vector("s2", 7)));
  EXPECT_EQ(f.ranks, g.ranks);
}

TEST(Dynamics, CubicRelation) {
  EXPECT_EQ(cubic_relation_residual(builtin_oriented("rg7a")), 0u);
  EXPECT_EQ(cubic_relation_residual(builtin_oriented("o1_7")), 0u);
  EXPECT_GT(cubic_relation_residual(builtin_oriented("rg7b")), 0u);
}

TEST(Dynamics, TheoremChecksOnZeroDivisorExample) {
  const auto o = builtin_oriented("zd7");
  const auto r = verify_thmdyn(o, dynamics_input(parse_vector("s1+s5", 7), parse_vector("s2", 7)));
  EXPECT_TRUE(r.all_pass()) << to_text(r);
  EXPECT_EQ(check(r, "dim_span_v_L1_Ln").measured, 3);
  EXPECT_EQ(check(r, "dim_span_L1_Ln").measured, 2);
  EXPECT_TRUE(check(r, "cycle_unnormalized").informational);
}

TEST(Dynamics, TheoremChecksOnRandomInputs) {
  std::mt19937_64 rng(17);
  for (const char* name : {"o1_7", "o3_7", "o2_9", "o13_9"}) {
    const auto o = builtin_oriented(name);
    for (int trial = 0; trial < 3; ++trial) {
      const auto w = random_rational_vector(rng, o.order());
      const auto v = random_rational_vector(rng, o.order());
      try {
        const auto r = verify_thmdyn(o, dynamics_input(w, v), 2000);
        EXPECT_TRUE(r.all_pass()) << name << '\n' << to_text(r);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateSpectrum) << e.what();
      }
    }
  }
}

TEST(Dynamics, VectorInKernelGivesVacuousPass) {
  const auto o = builtin_oriented("zd7");
  const auto r = verify_thmdyn(o, dynamics_input(parse_vector("s1+s5", 7), parse_vector("s2-s6", 7)));
  EXPECT_TRUE(r.all_pass()) << to_text(r);
}

TEST(Dynamics, TraceCsvHeader) {
  const auto o = builtin_oriented("zd7");
  const auto t = iterate_L(o, to_float(parse_vector("s1", 7)), to_float(parse_vector("s2", 7)), 2);
  const auto csv = trace_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,norm,x1,x2,x3,x4,x5,x6,x7");
}
