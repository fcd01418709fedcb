#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rigidpack/error.hpp"
#include "rigidpack/hypothesis.hpp"
#include "rigidpack/sparsity.hpp"

namespace rigidpack {
namespace {

TEST(HypothesisTest, Cor32OnK4Witness) {
  MultiGraph k4 = testing::k4();
  RankResult r = rank_and_rigid(k4, SetFunc::lmn(2, 3));
  HypothesisReport h = check_cor32(k4.edge_subgraph(r.witness.tight), 2);
  EXPECT_TRUE(h.holds) << h.detail;
}

TEST(HypothesisTest, Cor32FailsOnPath) {
  EXPECT_FALSE(check_cor32(testing::path3(), 2).holds);
}

TEST(HypothesisTest, Pack61OnK9) {
  HypothesisReport h =
      check_pack61(complete_graph(9), SetFunc::lmn(1, 1), SetFunc::lmn(2, 3), 0);
  EXPECT_TRUE(h.holds) << h.detail;
}

TEST(HypothesisTest, Pack61FailsOnC4) {
  HypothesisReport h = check_pack61(testing::c4(), SetFunc::lmn(1, 1), SetFunc::lmn(2, 3), 0);
  EXPECT_FALSE(h.holds);
  EXPECT_TRUE(h.vertex.has_value() || h.pair.has_value());
}

TEST(HypothesisTest, LambdaForSimpleGraphs) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    MultiGraph g = random_simple(7, 14, seed);
    HypothesisReport h = check_pack63(g, SetFunc::lmn(1, 1), SetFunc::lmn(2, 3),
                                      SizeFunction::constant(7, Rational(1, 2)), 0);
    if (h.lambda) EXPECT_GE(*h.lambda, 4);
  }
}

TEST(HypothesisTest, NecessaryConditionHoldsOnRigidGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    MultiGraph g = random_simple(6, 11, seed);
    if (!rank_and_rigid(g, SetFunc::lmn(2, 3)).rigid) continue;
    EXPECT_TRUE(check_necessary_rigid(g, SetFunc::lmn(2, 3)).holds) << seed;
  }
}

TEST(HypothesisTest, WeaklyConnected) {
  MultiGraph k9 = complete_graph(9);
  EXPECT_TRUE(check_weakly_connected(k9, SetFunc::constant(1), SetFunc::constant(8)).holds);
  EXPECT_FALSE(check_weakly_connected(k9, SetFunc::constant(1), SetFunc::constant(9)).holds);
}

TEST(HypothesisTest, Pack81RequiresLargeK) {
  MultiGraph k9 = complete_graph(9);
  EXPECT_THROW(check_pack81(k9, SetFunc::constant(0), SetFunc::lmn(2, 3), Rational(2),
                            std::vector<Count>(9, 0)),
               InvalidArgument);
}

TEST(HypothesisTest, BudgetCap) {
  EXPECT_THROW(check_pack61(complete_graph(16), SetFunc::lmn(1, 1), SetFunc::lmn(2, 3), 0),
               BudgetExceeded);
}

}  // namespace
}  // namespace rigidpack
