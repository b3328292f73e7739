#include <gtest/gtest.h>

#include "steiner/design.hpp"
#include "steiner/io.hpp"
#include "steiner/models.hpp"

using namespace steiner;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::BadArgument;
}

std::vector<Triple> fano_triples() {
  return {Triple::of(1, 2, 3), Triple::of(1, 4, 5), Triple::of(1, 6, 7), Triple::of(2, 4, 6),
          Triple::of(2, 5, 7), Triple::of(3, 4, 7), Triple::of(3, 5, 6)};
}

}  // namespace

TEST(Design, ValidatesFano) {
  const auto s = validate_sts(7, fano_triples());
  EXPECT_EQ(s.order(), 7);
  EXPECT_EQ(s.triple_count(), 7u);
  EXPECT_EQ(s.third(1, 2), 3);
  EXPECT_EQ(s.third(7, 5), 2);
}

TEST(Design, RejectsUncoveredPair) {
  auto t = fano_triples();
  t.pop_back();
  EXPECT_EQ(code_of([&] { validate_sts(7, t); }), ErrorCode::PairUncovered);
}

TEST(Design, RejectsDoubleCoveredPair) {
  auto t = fano_triples();
  t.back() = Triple::of(1, 2, 4);
  EXPECT_EQ(code_of([&] { validate_sts(7, t); }), ErrorCode::PairDoubleCovered);
}

TEST(Design, RejectsBadOrder) {
  EXPECT_EQ(code_of([] { validate_sts(5, {Triple::of(1, 2, 3)}); }), ErrorCode::BadOrder);
}

TEST(Design, RejectsMalformedTriple) {
  EXPECT_EQ(code_of([] { Triple::of(1, 1, 2); }), ErrorCode::MalformedTriple);
}

TEST(Design, CanonicalRotationStartsAtMinimum) {
  const auto t = canonical_rotation({5, 2, 7});
  EXPECT_EQ(t.support().min(), 2);
  EXPECT_EQ(t.sign(2, 7), 1);
  EXPECT_EQ(t.sign(7, 2), -1);
  EXPECT_EQ(t.sign(7, 5), 1);
  EXPECT_EQ(t.reversed().sign(2, 7), -1);
}

TEST(Design, OrientationFunctionIsAntisymmetric) {
  const auto o = builtin_oriented("o3_7");
  const auto f = orientation_function(o);
  for (int s = 1; s <= 7; ++s) {
    EXPECT_EQ(f(s, s), 0);
    for (int t = 1; t <= 7; ++t) EXPECT_EQ(f(s, t), -f(t, s));
  }
  EXPECT_EQ(f(1, 2), o.sign(1, 2));
}

TEST(Design, EnumeratesAllOrientations) {
  const auto s = sts7();
  std::set<std::uint64_t> masks;
  for (const auto& o : enumerate_orientations(s)) masks.insert(o.flip_mask());
  EXPECT_EQ(masks.size(), 128u);
}

TEST(Design, ReverseIsInvolution) {
  const auto o = builtin_oriented("o3_7");
  EXPECT_EQ(o.reversed().reversed().flip_mask(), o.flip_mask());
  EXPECT_EQ(o.reversed().sign(1, 2), -o.sign(1, 2));
}

TEST(Io, TextRoundTrip) {
  const auto o = builtin_oriented("o5_9");
  const auto back = std::get<OrientedSTS>(parse_system(to_text(o)));
  EXPECT_EQ(back.flip_mask(), o.flip_mask());
  const auto plain = std::get<SteinerTripleSystem>(parse_system(to_text(sts9())));
  EXPECT_EQ(plain.order(), 9);
}

TEST(Io, JsonRoundTrip) {
  const auto o = builtin_oriented("zd7");
  const auto back = std::get<OrientedSTS>(parse_system(to_json(o).dump()));
  EXPECT_EQ(back.flip_mask(), o.flip_mask());
}

TEST(Io, SyntaxErrorCarriesPosition) {
  try {
    parse_system("sts 7\n[1, 2, 3]\n[1, 4 5]\n");
    FAIL() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
  }
}

TEST(Io, RotatedCycleIsSameOrientation) {
  const auto a = std::get<OrientedSTS>(parse_system("[1,2,3]\n"));
  const auto b = std::get<OrientedSTS>(parse_system("[3,1,2]\n"));
  EXPECT_EQ(a.flip_mask(), b.flip_mask());
  const auto c = std::get<OrientedSTS>(parse_system("[1,3,2]\n"));
  EXPECT_NE(a.flip_mask(), c.flip_mask());
}

TEST(Models, UnknownNameThrows) {
  EXPECT_EQ(code_of([] { builtin_model("nope"); }), ErrorCode::UnknownModel);
}

TEST(Models, AllBuiltinsValidate) {
  for (const auto& name : builtin_names()) EXPECT_NO_THROW(builtin_model(name)) << name;
}
