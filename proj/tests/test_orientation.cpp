#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rigidpack/error.hpp"
#include "rigidpack/hypothesis.hpp"
#include "rigidpack/oracle.hpp"
#include "rigidpack/orientation.hpp"
#include "rigidpack/sparsity.hpp"

namespace rigidpack {
namespace {

using testing::c4;
using testing::k4;
using testing::path3;
using testing::triangle;

SetFunc cycle_func(int n) { return SetFunc::constant(1).with_override(VertexSet::full(n), 0); }

TEST(HakimiTest, SpecExamples) {
  HakimiResult ok = hakimi_orient(triangle(), {1, 1, 1});
  ASSERT_TRUE(ok.feasible);
  for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(ok.orientation->in_degree(v), 1);
  HakimiResult bad = hakimi_orient(triangle(), {0, 0, 3});
  EXPECT_FALSE(bad.feasible);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(*bad.witness, (VertexSet{0, 1}));
  HakimiResult path = hakimi_orient(path3(), {0, 1, 1});
  ASSERT_TRUE(path.feasible);
  EXPECT_EQ(path.orientation->tail(0), 0);
  EXPECT_EQ(path.orientation->tail(1), 1);
}

TEST(HakimiTest, RejectsBadTotals) {
  EXPECT_THROW(hakimi_orient(triangle(), {1, 1, 0}), InvalidArgument);
  EXPECT_THROW(hakimi_orient(triangle(), {-1, 2, 2}), InvalidArgument);
}

TEST(VerifyArcTest, SpecExamples) {
  SetFunc f = SetFunc::table(3, {0, 1, 1, 1, 1, 1, 1, 0});
  Orientation cycle(triangle());
  EXPECT_TRUE(verify_arc(cycle, f).holds);
  Orientation directed_path(path3());
  ArcVerdict v = verify_arc(directed_path, f);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(*v.witness, (VertexSet{0}));
  EXPECT_TRUE(verify_arc(cycle, f, {1, 0, 0}).holds);
}

TEST(VerifyArcTest, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    MultiGraph g = random_multigraph(5, 9, seed);
    Orientation d = euler_smooth_orient(g, EulerMode::Smooth, seed);
    for (Count c = 1; c <= 3; ++c) {
      SetFunc f = SetFunc::constant(c);
      EXPECT_EQ(verify_arc(d, f).holds, bf_arc_connected(d, f, {}).holds) << seed;
      EXPECT_EQ(arc_strength(d) >= c, verify_arc(d, f).holds) << seed;
    }
  }
}

TEST(EulerTest, SpecExamples) {
  Orientation cycle = euler_smooth_orient(c4(), EulerMode::Eulerian);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(cycle.in_degree(v), 1);
  Orientation smooth = euler_smooth_orient(k4(), EulerMode::Smooth);
  for (VertexId v = 0; v < 4; ++v) {
    EXPECT_EQ(std::abs(smooth.in_degree(v) - smooth.out_degree(v)), 1);
  }
  EXPECT_THROW(euler_smooth_orient(k4(), EulerMode::Eulerian), InvalidArgument);
}

TEST(EulerTest, EulerianCutsAreBalanced) {
  MultiGraph g = circulant(8, {1, 2});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Orientation d = euler_smooth_orient(g, EulerMode::Eulerian, seed);
    for (std::uint64_t s = 1; s + 1 < (1U << 8); ++s) {
      VertexSet a(s);
      ASSERT_EQ(2 * d.in_degree(a), boundary_count(g, a));
    }
  }
}

TEST(EulerTest, SmoothOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    MultiGraph g = random_multigraph(7, 14, seed);
    Orientation d = euler_smooth_orient(g, EulerMode::Smooth, seed);
    EXPECT_TRUE(is_smooth(d));
    for (VertexId v = 0; v < g.n(); ++v) {
      if (g.degree(v) % 2 == 0) EXPECT_EQ(d.in_degree(v), d.out_degree(v));
    }
  }
}

TEST(EquivTest, CycleFamily) {
  for (const MultiGraph& g : {c4(), triangle()}) {
    SetFunc ell = cycle_func(g.n());
    EquivResult to = rigid_to_orientation(g, ell);
    ASSERT_TRUE(to.holds) << to.detail;
    for (VertexId v = 0; v < g.n(); ++v) EXPECT_EQ(to.orientation->in_degree(v), 1);
    EXPECT_TRUE(orientation_to_rigid(*to.orientation, ell).holds);
  }
  EXPECT_FALSE(rigid_to_orientation(path3(), cycle_func(3)).holds);
}

TEST(EquivTest, RejectsNonzeroTop) {
  EXPECT_THROW(rigid_to_orientation(c4(), SetFunc::lmn(1, 1)), InvalidArgument);
}

TEST(PackedOrientationTest, K9Identities) {
  MultiGraph g = complete_graph(9);
  SetFunc l = SetFunc::lmn(1, 1);
  SetFunc ell = SetFunc::lmn(2, 3);
  std::vector<Count> r1(9, 0);
  std::vector<Count> r2(9, 0);
  r1[0] = 1;
  r2[0] = 2;
  r2[1] = 1;
  PackedOrientation res = packed_orientation(g, l, ell, r1, r2);
  ASSERT_TRUE(res.success);
  Orientation d1 = sub_orientation(res.orientation, res.h1);
  Orientation d2 = sub_orientation(res.orientation, res.h2);
  for (VertexId v = 0; v < 9; ++v) {
    EXPECT_EQ(d1.in_degree(v), l.at(v) - r1[v]);
    EXPECT_EQ(d2.in_degree(v), ell.at(v) - r2[v]);
    EXPECT_LE(res.orientation.out_degree(v), 4);
  }
  EXPECT_TRUE(verify_arc(d1, l, r1).holds);
  EXPECT_TRUE(verify_arc(d2, ell, r2).holds);
}

TEST(PackedOrientationTest, EmptyFirstPart) {
  MultiGraph g = complete_graph(9);
  SetFunc ell = SetFunc::lmn(2, 3);
  std::vector<Count> r2(9, 0);
  r2[0] = 2;
  r2[1] = 1;
  PackedOrientation res =
      packed_orientation(g, SetFunc::constant(0), ell, std::vector<Count>(9, 0), r2);
  ASSERT_TRUE(res.success);
  EXPECT_TRUE(res.h1.empty());
}

TEST(PackedOrientationTest, RejectsOversizedRoot) {
  MultiGraph g = complete_graph(9);
  std::vector<Count> r2(9, 0);
  r2[0] = 3;
  EXPECT_THROW(packed_orientation(g, SetFunc::constant(0), SetFunc::lmn(2, 3),
                                  std::vector<Count>(9, 0), r2),
               InvalidArgument);
}

TEST(OddForestTest, K4Matching) {
  OddForest f = odd_forest(k4(), 2);
  EXPECT_EQ(f.edges.size(), 2U);
  EXPECT_TRUE(f.bound_achieved);
  EXPECT_THROW(odd_forest(path3(), 2), InvalidArgument);
}

TEST(FactorTest, Circulant8) {
  MultiGraph g = circulant(8, {1, 2});
  FactorResult f = rigid_factor(g, 1, 4, true);
  ASSERT_TRUE(f.success) << f.detail;
  std::vector<Count> d(8, 0);
  for (EdgeId e : f.factor) {
    ++d[g.edge(e).u];
    ++d[g.edge(e).v];
  }
  for (Count x : d) EXPECT_TRUE(x == 1 || x == 3);
  EXPECT_TRUE(is_connected(g.edge_subgraph(f.factor)));
}

TEST(RobustTest, K13) {
  MultiGraph g = complete_graph(13);
  RobustResult r = robust_arc_strong(g, 1);
  ASSERT_TRUE(r.verified) << r.detail;
  EXPECT_TRUE(is_smooth(r.orientation));
  EXPECT_GE(arc_strength(r.orientation), 3);
  for (VertexId v = 0; v < 13; ++v) {
    EXPECT_GE(arc_strength(r.orientation, VertexSet::single(v)), 1);
  }
}

TEST(RobustTest, C4FailsHypothesis) {
  EXPECT_THROW(robust_arc_strong(c4(), 1), HypothesisFailure);
}

}  // namespace
}  // namespace rigidpack
