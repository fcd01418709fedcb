#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rigidpack/error.hpp"
#include "rigidpack/oracle.hpp"
#include "rigidpack/sparsity.hpp"

namespace rigidpack {
namespace {

using testing::c4;
using testing::k4;

TEST(BruteForceTest, PartitionConnected) {
  EXPECT_TRUE(bf_partition_connected(c4(), SetFunc::lmn(1, 1)).holds);
  BfVerdict v = bf_partition_connected(c4(), SetFunc::lmn(2, 2));
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.partition.has_value());
  EXPECT_EQ(v.partition->size(), 4U);
}

TEST(BruteForceTest, MatroidAxiomsOnK4) {
  EXPECT_TRUE(bf_matroid_axioms(k4(), SetFunc::lmn(2, 3)).holds);
}

TEST(BruteForceTest, RankExamples) {
  EXPECT_EQ(bf_rank(k4(), SetFunc::lmn(2, 3)).rank, 5);
  EXPECT_EQ(bf_rank(c4(), SetFunc::lmn(1, 1)).rank, 3);
  EXPECT_EQ(bf_rank(testing::double_edge(), SetFunc::lmn(2, 3)).rank, 1);
}

TEST(BruteForceTest, BudgetIsEnforced) {
  OracleBudget small;
  small.subset_n = 3;
  EXPECT_THROW(bf_sparse(k4(), SetFunc::lmn(2, 3), small), BudgetExceeded);
  EXPECT_EQ(OracleBudget::parse("5").partition_n, 5);
  OracleBudget three = OracleBudget::parse("4,5,6");
  EXPECT_EQ(three.subset_n, 4);
  EXPECT_EQ(three.pair_n, 6);
  EXPECT_THROW(OracleBudget::parse("x"), InvalidArgument);
}

TEST(CensusTest, Counts) {
  CensusFilter connected;
  connected.connected = true;
  EXPECT_EQ(census(4, connected).size(), 38U);
  EXPECT_EQ(census(3).size(), 8U);
  CensusFilter tight;
  tight.tight_for = SetFunc::lmn(2, 3);
  std::vector<MultiGraph> laman = census(5, tight);
  EXPECT_FALSE(laman.empty());
  for (const MultiGraph& g : laman) EXPECT_EQ(g.m(), 7);
}

TEST(CensusTest, PartitionOrderIsRestrictedGrowth) {
  int count = 0;
  for_each_partition(4, [&count](const std::vector<VertexSet>&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 15);
}

TEST(CensusTest, RigidImpliesPartitionConnected) {
  for (int n = 2; n <= 5; ++n) {
    for_each_census_graph(n, {}, [](const MultiGraph& g) {
      for (SetFunc f : {SetFunc::lmn(1, 1), SetFunc::lmn(2, 2), SetFunc::lmn(2, 3)}) {
        bool rigid = bf_rigid(g, f).holds;
        bool connected = bf_partition_connected(g, f).holds;
        if (rigid) EXPECT_TRUE(connected);
        PropertyReport r = property_report(f, g.n());
        if (r.intersecting_supermodular && r.weakly_subadditive) EXPECT_EQ(rigid, connected);
      }
      return true;
    });
  }
}

TEST(CensusTest, BruteForceRankMatchesPebbleBasis) {
  for (int n = 2; n <= 5; ++n) {
    for_each_census_graph(n, {}, [](const MultiGraph& g) {
      EXPECT_EQ(bf_rank(g, SetFunc::lmn(2, 3)).rank,
                static_cast<Count>(pebble_basis(g, 2, 3).basis.size()));
      return true;
    });
  }
}

}  // namespace
}  // namespace rigidpack
