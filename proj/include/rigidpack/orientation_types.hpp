#pragma once

#include <vector>

#include "rigidpack/graph.hpp"

namespace rigidpack {

/// A direction for every edge of a host multigraph.
class Orientation {
 public:
  Orientation() = default;
  /// All edges directed u -> v as stored in the host.
  explicit Orientation(MultiGraph host);
  Orientation(MultiGraph host, std::vector<bool> forward);

  const MultiGraph& host() const { return host_; }
  VertexId tail(EdgeId e) const;
  VertexId head(EdgeId e) const;
  /// Directs edge e so that it leaves `tail`.
  void set_tail(EdgeId e, VertexId tail);
  void reverse(EdgeId e) { forward_[e] = !forward_[e]; }

  Count in_degree(VertexId v) const;
  Count out_degree(VertexId v) const;
  /// Arcs entering A (head in A, tail outside).
  Count in_degree(VertexSet a) const;
  Count out_degree(VertexSet a) const;

 private:
  MultiGraph host_;
  std::vector<bool> forward_;
};

}  // namespace rigidpack
