#include <gtest/gtest.h>

#include "steiner/group.hpp"
#include "steiner/models.hpp"

using namespace steiner;

namespace {

using Cycles = std::vector<std::vector<Point>>;

PermutationGroup generated(int n, const std::vector<Cycles>& gens) {
  std::vector<Permutation> ps;
  for (const auto& c : gens) ps.push_back(Permutation::from_cycles(n, c));
  return PermutationGroup::generated_by(n, ps);
}

bool same_group(const PermutationGroup& a, const PermutationGroup& b) {
  return a.order() == b.order() && a.is_subset_of(b);
}

}  // namespace

TEST(Permutation, CycleNotationRoundTrip) {
  const auto p = Permutation::from_cycles(7, {{2, 4, 6}, {3, 5, 7}});
  EXPECT_EQ(p.cycle_notation(), "(2,4,6)(3,5,7)");
  EXPECT_EQ(p.element_order(), 3);
  EXPECT_TRUE((p * p * p).is_identity());
  EXPECT_EQ(p.inverse()(4), 2);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation::from_images({1, 1, 3}), Error);
}

TEST(Group, FanoAutomorphismGroup) {
  const auto g = sts_aut_group(sts7());
  EXPECT_EQ(g.order(), 168u);
  EXPECT_TRUE(g.is_closed());
  EXPECT_TRUE(same_group(g, generated(7, {{{1, 2, 4, 3, 6, 7, 5}}, {{4, 5}, {6, 7}}})));
}

TEST(Group, AffinePlaneAutomorphismGroup) {
  const auto g = sts_aut_group(sts9());
  EXPECT_EQ(g.order(), 432u);
  EXPECT_TRUE(same_group(g, generated(9, {{{2, 6, 4, 9, 3, 8, 7, 5}}, {{1, 3, 2}, {4, 7, 5, 8, 6, 9}}})));
}

struct PublishedAut {
  const char* name;
  std::size_t order;
  std::vector<Cycles> gens;
};

void PrintTo(const PublishedAut& p, std::ostream* os) { *os << p.name; }

class OrientedAut : public ::testing::TestWithParam<PublishedAut> {};

TEST_P(OrientedAut, MatchesPublishedGenerators) {
  const auto& c = GetParam();
  const auto o = builtin_oriented(c.name);
  const auto g = oriented_aut_group(o);
  EXPECT_EQ(g.order(), c.order);
  EXPECT_TRUE(same_group(g, generated(o.order(), c.gens)));
  for (const auto& p : g.elements()) EXPECT_EQ(apply(p, o).flip_mask(), o.flip_mask());
}

INSTANTIATE_TEST_SUITE_P(
    Published, OrientedAut,
    ::testing::Values(
        PublishedAut{"o1_7", 21, {{{2, 4, 6}, {3, 5, 7}}, {{1, 2, 3}, {4, 7, 6}}}},
        PublishedAut{"o2_7", 21, {{{2, 4, 7}, {3, 5, 6}}, {{1, 2, 3}, {5, 6, 7}}}},
        PublishedAut{"o3_7", 3, {{{2, 4, 6}, {3, 5, 7}}}},
        PublishedAut{"o4_7", 3, {{{1, 7, 6}, {3, 5, 4}}}},
        PublishedAut{"o1_9", 27, {{{4, 5, 6}, {7, 9, 8}}, {{1, 4, 9}, {2, 5, 7}, {3, 6, 8}}}},
        PublishedAut{"o2_9", 9, {{{4, 5, 6}, {7, 9, 8}}, {{1, 2, 3}, {7, 9, 8}}}},
        PublishedAut{"o3_9", 3, {{{1, 7, 4}, {2, 8, 5}, {3, 9, 6}}}},
        PublishedAut{"o4_9", 3, {{{4, 5, 6}, {7, 9, 8}}}},
        PublishedAut{"o5_9", 3, {{{4, 5, 6}, {7, 9, 8}}}},
        PublishedAut{"o9_9", 3, {{{4, 5, 6}, {7, 9, 8}}}},
        PublishedAut{"o10_9", 3, {{{4, 5, 6}, {7, 9, 8}}}},
        PublishedAut{"o11_9", 3, {{{1, 8, 4}, {2, 9, 5}, {3, 7, 6}}}},
        PublishedAut{"o12_9", 3, {{{1, 2, 7}, {3, 6, 4}, {5, 8, 9}}}},
        PublishedAut{"zd7", 3, {{{2, 7, 4}, {3, 6, 5}}}}),
    [](const auto& info) { return std::string(info.param.name); });

TEST(Group, ProfilesDistinguishGroupsOfEqualOrder) {
  const auto p1 = profile_group(oriented_aut_group(builtin_oriented("o1_7")));
  EXPECT_EQ(p1.catalog_name, "C7:C3");
  EXPECT_FALSE(p1.is_abelian);
  const auto p2 = profile_group(oriented_aut_group(builtin_oriented("o1_9")));
  EXPECT_EQ(p2.catalog_name, "He3");
  EXPECT_FALSE(p2.is_abelian);
  EXPECT_EQ(p2.exponent, 3);
  const auto p3 = profile_group(oriented_aut_group(builtin_oriented("o2_9")));
  EXPECT_EQ(p3.catalog_name, "C3xC3");
  EXPECT_TRUE(p3.is_abelian);
}

TEST(Group, IsomorphismFoundBetweenRelabelings) {
  const auto o = builtin_oriented("o3_7");
  const auto phi = Permutation::from_cycles(7, {{1, 5}, {2, 7, 3}});
  const auto moved = apply(phi, o);
  const auto iso = are_isomorphic(o, moved);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(apply(*iso, o).flip_mask(), moved.flip_mask());
  EXPECT_FALSE(are_isomorphic(builtin_oriented("o1_7"), builtin_oriented("o3_7")).has_value());
}

TEST(Group, ReflexivityOfSmallSystems) {
  EXPECT_TRUE(is_reflexive(builtin_oriented("o1_3")));
  EXPECT_FALSE(is_reflexive(builtin_oriented("o1_7")));
}
