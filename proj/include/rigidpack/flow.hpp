#pragma once

#include <vector>

#include "rigidpack/graph.hpp"

namespace rigidpack {

/// Dinic max flow with integer capacities. Arcs are explored in insertion order,
/// so results are deterministic for a given construction sequence.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes);

  /// Returns the arc index; its reverse residual arc is index ^ 1.
  int add_arc(int from, int to, Count capacity);
  Count max_flow(int source, int sink, Count limit = kUnbounded);

  Count flow_on(int arc) const { return arcs_[arc ^ 1].residual; }
  /// Nodes reachable from the source in the final residual graph.
  std::vector<bool> source_side(int source) const;
  int nodes() const { return static_cast<int>(head_.size()); }

 private:
  struct Arc {
    int to;
    Count residual;
  };
  bool build_levels(int source, int sink);
  Count push(int node, int sink, Count amount);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> head_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace rigidpack
