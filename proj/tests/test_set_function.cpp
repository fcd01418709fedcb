#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rigidpack/error.hpp"
#include "rigidpack/set_function.hpp"

namespace rigidpack {
namespace {

TEST(SetFuncTest, LmnValues) {
  SetFunc f = SetFunc::lmn(2, 3);
  EXPECT_EQ(f(VertexSet{4}), 2);
  EXPECT_EQ(f(VertexSet{0, 1}), 3);
  EXPECT_EQ(f(VertexSet{}), 0);
  EXPECT_EQ(SetFunc::constant(5)(VertexSet{}), 0);
  EXPECT_EQ(SetFunc::table(2, {0, 1, 1, 0})(VertexSet{}), 0);
}

TEST(SetFuncTest, OverrideForcesZeroOnV) {
  SetFunc f = SetFunc::lmn(2, 3).with_override(VertexSet::full(4), 0);
  EXPECT_EQ(f(VertexSet::full(4)), 0);
  EXPECT_EQ(f(VertexSet{0, 1, 2}), 3);
}

TEST(PropertyReportTest, L11IsWellBehaved) {
  PropertyReport r = property_report(SetFunc::lmn(1, 1), 4);
  EXPECT_TRUE(r.intersecting_supermodular);
  EXPECT_TRUE(r.subadditive);
  EXPECT_TRUE(r.nonincreasing);
  EXPECT_TRUE(r.weakly_subadditive);
}

TEST(PropertyReportTest, L23IsOnlyTwoIntersecting) {
  SetFunc f = SetFunc::lmn(2, 3);
  PropertyReport r = property_report(f, 5);
  EXPECT_TRUE(r.two_intersecting_supermodular);
  EXPECT_TRUE(r.weakly_subadditive);
  EXPECT_FALSE(r.intersecting_supermodular);
  ASSERT_TRUE(r.intersecting_witness.has_value());
  VertexSet a = r.intersecting_witness->a;
  VertexSet b = r.intersecting_witness->b;
  VertexSet meet(a.mask() & b.mask());
  VertexSet join(a.mask() | b.mask());
  EXPECT_GE(meet.size(), 1);
  EXPECT_LT(f(meet) + f(join), f(a) + f(b));
}

TEST(PropertyReportTest, ZeroFunctionHasEveryProperty) {
  PropertyReport r = property_report(SetFunc::constant(0), 4);
  EXPECT_TRUE(r.intersecting_supermodular);
  EXPECT_TRUE(r.two_intersecting_supermodular);
  EXPECT_TRUE(r.nonincreasing);
  EXPECT_TRUE(r.subadditive);
  EXPECT_TRUE(r.weakly_subadditive);
  EXPECT_TRUE(r.nonnegative);
}

TEST(PropertyReportTest, LmnFlagsFollowParameters) {
  for (Count m = 0; m <= 3; ++m) {
    for (Count n = 0; n <= 6; ++n) {
      PropertyReport r = property_report(SetFunc::lmn(m, n), 6);
      if (m >= n) EXPECT_TRUE(r.nonincreasing) << m << "," << n;
      if (2 * m >= n) EXPECT_TRUE(r.weakly_subadditive) << m << "," << n;
    }
  }
}

TEST(PropertyReportTest, CounterexamplesReplay) {
  SetFunc f = SetFunc::table(3, {0, 1, 5, 1, 1, 1, 1, 0});
  PropertyReport r = property_report(f, 3);
  if (r.subadditive_witness) {
    VertexSet a = r.subadditive_witness->a;
    VertexSet b = r.subadditive_witness->b;
    EXPECT_LT(f(a) + f(b), f(VertexSet(a.mask() | b.mask())));
  }
  if (r.nonincreasing_witness) {
    EXPECT_LT(f(r.nonincreasing_witness->a), f(r.nonincreasing_witness->b));
  }
}

TEST(DerivedTest, ScaledDoubles) {
  SetFunc f = derived_scaled(SetFunc::lmn(1, 1), 2);
  for (std::uint64_t s = 1; s < 32; ++s) {
    EXPECT_EQ(f(VertexSet(s)), SetFunc::lmn(2, 2)(VertexSet(s)));
  }
}

TEST(DerivedTest, HalvedOnK9) {
  MultiGraph g = complete_graph(9);
  SetFunc f = derived_halved(g, SetFunc::lmn(1, 1), SetFunc::lmn(2, 3));
  for (VertexId v = 0; v < 9; ++v) EXPECT_EQ(f.at(v), 1);
  EXPECT_EQ(f(VertexSet{0, 1}), 0);
}

TEST(DerivedTest, HalvedRejectsNegativeValue) {
  EXPECT_THROW(derived_halved(testing::c4(), SetFunc::lmn(1, 1), SetFunc::lmn(2, 3)),
               InvalidArgument);
}

TEST(DerivedTest, RootedShift) {
  SetFunc f = derived_rooted(SetFunc::lmn(2, 3), {1, 0, 0});
  EXPECT_EQ(f(VertexSet{0}), 1);
  EXPECT_EQ(f(VertexSet{0, 1}), 2);
  EXPECT_EQ(f(VertexSet{1, 2}), 3);
}

}  // namespace
}  // namespace rigidpack
