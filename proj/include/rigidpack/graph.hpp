#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rigidpack {

using Count = std::int64_t;
using VertexId = int;
using EdgeId = int;

/// Vertex sets are 64-bit masks, so every graph handled here has at most 64 vertices.
inline constexpr int kMaxVertices = 64;

/// "+infinity" for connectivity values that range over an empty family of cuts.
inline constexpr Count kUnbounded = std::numeric_limits<Count>::max();

class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}
  VertexSet(std::initializer_list<VertexId> vertices);

  static VertexSet single(VertexId v);
  /// {0, ..., n-1}
  static VertexSet full(int n);
  static VertexSet from(std::span<const VertexId> vertices);

  std::uint64_t mask() const { return mask_; }
  bool contains(VertexId v) const { return (mask_ >> v) & 1U; }
  bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  bool subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }
  bool intersects(VertexSet other) const { return (mask_ & other.mask_) != 0; }
  /// Lowest member; undefined on the empty set.
  VertexId first() const { return std::countr_zero(mask_); }

  VertexSet with(VertexId v) const { return VertexSet(mask_ | (std::uint64_t{1} << v)); }
  VertexSet without(VertexId v) const { return VertexSet(mask_ & ~(std::uint64_t{1} << v)); }
  VertexSet complement(int n) const { return VertexSet(~mask_ & full(n).mask_); }

  std::vector<VertexId> members() const;
  std::string to_string() const;

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }
  friend bool operator==(VertexSet a, VertexSet b) = default;
  friend auto operator<=>(VertexSet a, VertexSet b) = default;

 private:
  std::uint64_t mask_ = 0;
};

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool inside(VertexSet a) const { return a.contains(u) && a.contains(v); }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loopless multigraph on vertices 0..n-1. Edge ids are positions in the edge list.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Throws InvalidArgument on a loop or an out-of-range endpoint, naming the edge index.
  MultiGraph(int n, std::vector<Edge> edges);
  static MultiGraph build(int n, std::span<const std::pair<VertexId, VertexId>> pairs);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const { return incident_[v]; }
  Count degree(VertexId v) const { return static_cast<Count>(incident_[v].size()); }
  VertexSet vertices() const { return VertexSet::full(n_); }
  /// Number of parallel edges between u and v.
  Count multiplicity(VertexId u, VertexId v) const;
  bool is_simple() const;

  /// Same vertex set, only the listed edges; new edge i is old edge ids[i].
  MultiGraph edge_subgraph(std::span<const EdgeId> ids) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Disjoint nonempty vertex sets covering 0..n-1.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless the parts are nonempty, disjoint and cover {0..n-1}.
  Partition(int n, std::vector<VertexSet> parts);
  static Partition singletons(int n);

  const std::vector<VertexSet>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  /// Index of the part containing v.
  int part_of(VertexId v) const;

 private:
  std::vector<VertexSet> parts_;
  std::vector<int> owner_;
};

// ---- counting primitives -------------------------------------------------

/// e_G(A): edges with both ends in A.
Count induced_count(const MultiGraph& g, VertexSet a);
/// d_G(A): edges with exactly one end in A.
Count boundary_count(const MultiGraph& g, VertexSet a);
/// d_{G-B}(A): edges from A to V \ (A u B). Throws if A and B overlap.
Count boundary_minus(const MultiGraph& g, VertexSet a, VertexSet b);
/// e_G(P): edges joining different parts.
Count partition_cross(const MultiGraph& g, const Partition& p);
/// e_G(collection): edges with no member set containing both ends.
Count collection_cross(const MultiGraph& g, std::span<const VertexSet> collection);

/// Induced edge counts for every subset of the vertex set, indexed by mask. n <= 26.
std::vector<Count> all_induced_counts(const MultiGraph& g);

// ---- connectivity ---------------------------------------------------------

bool is_connected(const MultiGraph& g, VertexSet removed = {});
/// Connected components of G - removed, each as a vertex set, ordered by lowest member.
std::vector<VertexSet> components(const MultiGraph& g, VertexSet removed = {});

struct Cut {
  Count value = kUnbounded;
  VertexSet side;  ///< one shore; empty when value is kUnbounded
};

/// Global minimum edge cut of G - removed by s-t max flow from a fixed root to every
/// other vertex. 0 when disconnected, kUnbounded when fewer than two vertices remain.
Cut min_edge_cut(const MultiGraph& g, VertexSet removed = {});
Count edge_connectivity(const MultiGraph& g, VertexSet removed = {});
/// min d_G(A) over A with e_G(A) >= 1 and e_G(V \ A) >= 1; kUnbounded if no such A.
Cut min_essential_cut(const MultiGraph& g);
Count essential_edge_connectivity(const MultiGraph& g);
/// Unit-capacity s-t max flow. Throws InvalidArgument when s == t.
Count local_edge_connectivity(const MultiGraph& g, VertexId s, VertexId t);
/// Vertex connectivity; n-1 when every pair is adjacent.
Count vertex_connectivity(const MultiGraph& g);

// ---- contraction ----------------------------------------------------------

struct Contraction {
  MultiGraph graph;
  std::vector<VertexId> relabel;  ///< old vertex -> new vertex
  std::vector<EdgeId> edge_origin;  ///< new edge -> old edge
};

/// Collapses A into a single vertex (placed at the position of min A), deleting edges
/// inside A and keeping parallels. Throws InvalidArgument if A is empty.
Contraction contract(const MultiGraph& g, VertexSet a);

}  // namespace rigidpack
