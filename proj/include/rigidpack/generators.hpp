#pragma once

#include <cstdint>
#include <vector>

#include "rigidpack/graph.hpp"

namespace rigidpack {

MultiGraph complete_graph(int n);
/// Sides {0..a-1} and {a..a+b-1}.
MultiGraph complete_bipartite(int a, int b);
/// Edges i ~ i+o (mod n) for each offset o; an offset of n/2 contributes each pair once.
MultiGraph circulant(int n, const std::vector<Count>& offsets);
/// m distinct pairs drawn uniformly.
MultiGraph random_simple(int n, int m, std::uint64_t seed);
/// Simple r-regular graph by the pairing model with restarts. Rejects odd n*r and r >= n.
MultiGraph random_regular(int n, int r, std::uint64_t seed);
/// Every edge repeated `multiplicity` times, copies adjacent in the edge list.
MultiGraph doubled(const MultiGraph& base, int multiplicity);
/// Multigraph with n vertices and m edges, endpoints uniform over distinct pairs.
MultiGraph random_multigraph(int n, int m, std::uint64_t seed);

}  // namespace rigidpack
