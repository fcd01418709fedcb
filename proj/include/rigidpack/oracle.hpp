#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rigidpack/graph.hpp"
#include "rigidpack/orientation_types.hpp"
#include "rigidpack/set_function.hpp"

namespace rigidpack {

/// Size caps for the exponential sweeps. Exceeding one throws BudgetExceeded.
struct OracleBudget {
  int subset_n = 7;
  int partition_n = 9;
  int pair_n = 12;

  /// Defaults overridden by RIGIDPACK_BUDGET ("N" for all three, or "S,P,Q").
  static OracleBudget from_env();
  /// Parses "N" or "S,P,Q". Throws InvalidArgument.
  static OracleBudget parse(const std::string& text);
};

/// Verdict of a brute-force check. Negative verdicts carry the least witness.
struct BfVerdict {
  bool holds = true;
  std::optional<VertexSet> set;
  std::optional<std::pair<VertexSet, VertexSet>> pair;
  std::optional<std::vector<VertexSet>> partition;
  std::vector<EdgeId> edges_a;  ///< matroid witness: independent I
  std::vector<EdgeId> edges_b;  ///< matroid witness: J with no valid exchange
  std::string detail;
};

/// e(A) <= sum_{v in A} f(v) - f(A) for every nonempty A.
BfVerdict bf_sparse(const MultiGraph& g, const SetFunc& f, const OracleBudget& budget = {});
/// e(P) >= sum_{A in P} f(A) - f(V) for every partition P. The witness is the most violated
/// partition, earliest in restricted-growth order among ties.
BfVerdict bf_partition_connected(const MultiGraph& g, const SetFunc& f,
                                 const OracleBudget& budget = {});
/// Maximum sparse subgraph reaches sum f(v) - f(V); edges_a holds one.
BfVerdict bf_rigid(const MultiGraph& g, const SetFunc& f);
/// d^-(A) >= f(A) - sum_{v in A} r(v) for every nonempty proper A. r may be empty.
BfVerdict bf_arc_connected(const Orientation& d, const SetFunc& f, const std::vector<Count>& r,
                           const OracleBudget& budget = {});
/// d(A) >= f(A) for every nonempty proper A.
BfVerdict bf_edge_connected(const MultiGraph& g, const SetFunc& f,
                            const OracleBudget& budget = {});
/// d_{G-B}(A) >= l(A u B) - sum_{v in B} ell(v) for disjoint A, B with A nonempty and
/// A u B a proper subset.
BfVerdict bf_weakly_connected(const MultiGraph& g, const SetFunc& ell, const SetFunc& l,
                              const OracleBudget& budget = {});
/// Independence-system and exchange axioms for f-sparse edge subsets (m <= 12).
BfVerdict bf_matroid_axioms(const MultiGraph& g, const SetFunc& f);

struct BfRank {
  Count rank = 0;
  std::vector<EdgeId> edges;
};

/// Exact maximum f-sparse edge subset by branch and bound (m <= 20, n <= 16).
BfRank bf_rank(const MultiGraph& g, const SetFunc& f);

/// Calls visit(P) for every partition of {0..n-1} in restricted-growth order; stops early
/// when visit returns false.
void for_each_partition(int n, const std::function<bool(const std::vector<VertexSet>&)>& visit);

struct CensusFilter {
  bool connected = false;
  std::optional<int> max_edges;
  std::optional<SetFunc> tight_for;  ///< keep graphs that are f-sparse with rigid size
};

/// Labeled simple graphs on n vertices (n <= 6), in increasing order of the edge mask over
/// pairs (0,1), (0,2), ..., (n-2,n-1).
std::vector<MultiGraph> census(int n, const CensusFilter& filter = {});
/// Streaming form; stops when visit returns false.
void for_each_census_graph(int n, const CensusFilter& filter,
                           const std::function<bool(const MultiGraph&)>& visit);

/// Exhaustive minimum over spanning subgraphs H of sum_i rank_i(H) + |E \ E(H)|, where
/// H ranges over edge subsets (m <= 12).
Count edmonds_bound(const MultiGraph& g, const std::vector<SetFunc>& funcs,
                    const std::vector<EdgeId>& forbidden = {});

}  // namespace rigidpack
