#pragma once

#include <utility>
#include <vector>

#include "rigidpack/generators.hpp"
#include "rigidpack/graph.hpp"

namespace rigidpack::testing {

inline MultiGraph graph(int n, std::vector<std::pair<VertexId, VertexId>> pairs) {
  return MultiGraph::build(n, pairs);
}

inline MultiGraph triangle() { return graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline MultiGraph path3() { return graph(3, {{0, 1}, {1, 2}}); }
inline MultiGraph c4() { return graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline MultiGraph k4() { return complete_graph(4); }
inline MultiGraph double_edge() { return graph(2, {{0, 1}, {0, 1}}); }
inline MultiGraph two_triangles_sharing() {
  return graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
}
inline MultiGraph two_disjoint_triangles() {
  return graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

}  // namespace rigidpack::testing
