#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "rigidpack/graph.hpp"
#include "rigidpack/set_function.hpp"

namespace rigidpack {

/// Pebble game with per-vertex capacities k_v and pair constant c: an edge uv is accepted
/// when c+1 pebbles can be gathered on u and v. Accepted edges are stored as arcs whose tail
/// spent the pebble, so pebbles(v) + outdeg(v) = k_v always holds.
class PebbleGame {
 public:
  struct Arc {
    EdgeId id;
    VertexId tail;
    VertexId head;
  };

  PebbleGame(int n, PebbleParams params);
  /// Uniform (k, ell) game.
  PebbleGame(int n, Count k, Count ell);

  int n() const { return static_cast<int>(pebbles_.size()); }
  Count c() const { return c_; }
  Count pebbles(VertexId v) const { return pebbles_[v]; }
  Count capacity(VertexId v) const { return capacity_[v]; }
  Count out_degree(VertexId v) const { return static_cast<Count>(out_[v].size()); }
  int accepted() const { return accepted_; }
  bool contains(EdgeId id) const;
  /// All accepted edges as arcs, ordered by edge id.
  std::vector<Arc> arcs() const;

  /// Moves pebbles until u and v together hold c+1; false when that is impossible.
  bool gather(VertexId u, VertexId v);
  /// gather() followed by acceptance on success.
  bool try_insert(EdgeId id, VertexId u, VertexId v);
  /// Returns the pebble of an accepted edge to its tail.
  void erase(EdgeId id);

  /// Smallest vertex set containing u and v that is tight for the accepted edges,
  /// or nullopt when uv could still be accepted.
  std::optional<VertexSet> minimal_tight(VertexId u, VertexId v);
  /// Largest such tight set; requires that uv cannot be accepted.
  VertexSet maximal_tight(VertexId u, VertexId v);

  /// Throws InternalError if the pebble accounting is off.
  void check_invariants() const;

 private:
  bool find_pebble(VertexId from, VertexId blocked);
  VertexSet reach(VertexSet from) const;

  std::vector<Count> capacity_;
  Count c_;
  std::vector<Count> pebbles_;
  std::vector<std::vector<Arc>> out_;  // arcs by tail
  int accepted_ = 0;
};

struct PebbleBasis {
  std::vector<EdgeId> basis;
  PebbleGame state;
};

/// Greedy (k, ell) basis in ascending edge id. Throws InvalidArgument unless 0 <= ell < 2k.
PebbleBasis pebble_basis(const MultiGraph& g, Count k, Count ell);

/// Incremental independence oracle for f-sparse edge sets of a fixed vertex set.
class SparsityOracle {
 public:
  virtual ~SparsityOracle() = default;
  virtual bool can_add(VertexId u, VertexId v) = 0;
  /// Precondition: can_add(u, v).
  virtual void add(EdgeId id, VertexId u, VertexId v) = 0;
  virtual void remove(EdgeId id) = 0;
  /// Vertex set of the smallest rigid subgraph of the current set spanning u and v;
  /// nullopt when uv can be added.
  virtual std::optional<VertexSet> minimal_tight(VertexId u, VertexId v) = 0;
  /// Maximal tight set containing u and v; requires !can_add(u, v).
  virtual VertexSet maximal_tight(VertexId u, VertexId v) = 0;
};

/// Pebble oracle when f has pebble parameters, otherwise an exhaustive oracle (n <= 16).
/// With require_matroid, a non-pebble f must pass property_report's matroid check (n <= 10).
std::unique_ptr<SparsityOracle> make_oracle(const SetFunc& f, int n, bool require_matroid);

/// True when greedy extraction is valid for f on n vertices.
bool is_matroidal(const SetFunc& f, int n);

struct RigidWitness {
  std::vector<EdgeId> tight;        ///< spanning sparse subgraph of rigid size
  std::optional<VertexSet> violation;  ///< set with e(A) > sum f(v) - f(A)
};

struct SparseVerdict {
  bool sparse = false;
  RigidWitness witness;
};

/// Pebble path when f has pebble parameters, exhaustive otherwise (n <= 16).
SparseVerdict is_sparse(const MultiGraph& g, const SetFunc& f);
/// Same check restricted to a subset of the edges.
SparseVerdict is_sparse_edges(const MultiGraph& g, const SetFunc& f,
                              const std::vector<EdgeId>& edges);

struct RankResult {
  Count rank = 0;
  bool rigid = false;
  RigidWitness witness;  ///< tight holds a maximum sparse subgraph
};

/// Greedy when f is matroidal, branch and bound otherwise (m <= 20).
RankResult rank_and_rigid(const MultiGraph& g, const SetFunc& f);

/// Maximal vertex sets X with F[X] f-rigid, ordered by lowest members. Throws
/// InvalidArgument when F is not f-sparse.
std::vector<VertexSet> rigid_components(const MultiGraph& f_graph, const SetFunc& f);

struct MinimalRigid {
  bool free_pair = false;  ///< F + xy is sparse; q is empty
  VertexSet q;
};

MinimalRigid minimal_rigid_between(const MultiGraph& f_graph, const SetFunc& f, VertexId x,
                                   VertexId y);

/// F - e + xy, with xy taking over the id of e. Requires e inside the minimal rigid set of
/// x and y; the result is re-verified sparse. Throws InvalidArgument on a bad e and
/// InternalError if the result fails verification.
MultiGraph exchange(const MultiGraph& f_graph, const SetFunc& f, VertexId x, VertexId y,
                    EdgeId e);

/// A set A with {x,y} in A, A a proper subset of Q, and no edge of F[Q] leaving A; nullopt
/// when none exists. |Q| <= 22.
std::optional<VertexSet> minimal_rigid_cut_violation(const MultiGraph& f_graph, VertexSet q,
                                                     VertexId x, VertexId y);

}  // namespace rigidpack
