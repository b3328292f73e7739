#include <gtest/gtest.h>

#include "steiner/classify.hpp"
#include "steiner/models.hpp"

using namespace steiner;

namespace {

const ClassificationReport& report(int n) {
  static std::map<int, ClassificationReport> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    const auto s = n == 3 ? sts3() : n == 7 ? sts7() : sts9();
    it = cache.emplace(n, classify_orientations(s)).first;
  }
  return it->second;
}

std::uint64_t orbit_total(const ClassificationReport& r) {
  std::uint64_t t = 0;
  for (const auto& c : r.classes) t += c.orbit_size;
  return t;
}

}  // namespace

TEST(Classify, OrderThree) {
  const auto& r = report(3);
  ASSERT_EQ(r.classes.size(), 1u);
  EXPECT_EQ(r.classes[0].orbit_size, 2u);
  EXPECT_TRUE(r.classes[0].reflexive);
}

TEST(Classify, OrderSeven) {
  const auto& r = report(7);
  ASSERT_EQ(r.classes.size(), 4u);
  EXPECT_EQ(orbit_total(r), 128u);
  std::vector<std::size_t> auts;
  for (const auto& c : r.classes) {
    auts.push_back(c.aut.order());
    EXPECT_FALSE(c.reflexive);
    EXPECT_EQ(c.orbit_size * c.aut.order(), r.base_aut_order);
  }
  EXPECT_EQ(auts, (std::vector<std::size_t>{21, 21, 3, 3}));
}

TEST(Classify, OrderNine) {
  const auto& r = report(9);
  EXPECT_EQ(r.classes.size(), 16u);
  EXPECT_EQ(orbit_total(r), 4096u);
  int reflexive = 0;
  for (const auto& c : r.classes) reflexive += c.reflexive ? 1 : 0;
  EXPECT_EQ(reflexive, 8);
}

TEST(Classify, MirrorIsInvolution) {
  for (int n : {7, 9}) {
    const auto& r = report(n);
    for (std::size_t k = 0; k < r.classes.size(); ++k) {
      const auto& c = r.classes[k];
      const std::size_t m = c.mirror.value_or(k);
      EXPECT_EQ(r.classes[m].mirror.value_or(m), k);
      EXPECT_EQ(r.class_of(c.representative.reversed()), m);
    }
  }
}

TEST(Classify, ReferenceRepresentativesOrderSeven) {
  const auto m = match_references(report(7), reference_representatives(7));
  ASSERT_EQ(m.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    ASSERT_EQ(m[k].matching_classes.size(), 1u);
    EXPECT_EQ(m[k].matching_classes[0], k);
    EXPECT_TRUE(m[k].aut_order_matches);
  }
}

TEST(Classify, ReferenceRepresentativesOrderNine) {
  const auto m = match_references(report(9), reference_representatives(9));
  ASSERT_EQ(m.size(), 16u);
  std::set<std::size_t> hit;
  for (const auto& x : m) {
    ASSERT_EQ(x.matching_classes.size(), 1u) << x.name;
    EXPECT_TRUE(x.aut_order_matches) << x.name;
    hit.insert(x.matching_classes[0]);
  }
  // o5_9 and o9_9 land in the same class, so one class is left uncovered.
  EXPECT_EQ(m[4].matching_classes, m[8].matching_classes);
  EXPECT_EQ(hit.size(), 15u);
}

TEST(Classify, ClassOfRejectsForeignBase) {
  EXPECT_THROW(report(7).class_of(builtin_oriented("o1_9")), Error);
}

TEST(Classify, ClassOfRejectsRelabeledBase) {
  const auto o = builtin_oriented("o1_7");
  const auto moved = apply(Permutation::from_cycles(7, {{1, 4}}), o);
  EXPECT_THROW(report(7).class_of(moved), Error);
}
