#include "rigidpack/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "rigidpack/error.hpp"

namespace rigidpack {

namespace {

void require_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidArgument("order must be in 1.." + std::to_string(kMaxVertices) + ", got " +
                          std::to_string(n));
  }
}

std::vector<std::pair<VertexId, VertexId>> all_pairs(int n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

}  // namespace

MultiGraph complete_graph(int n) {
  require_order(n);
  auto pairs = all_pairs(n);
  return MultiGraph::build(n, pairs);
}

MultiGraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InvalidArgument("both sides must be nonempty");
  require_order(a + b);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < a; ++u) {
    for (VertexId v = a; v < a + b; ++v) pairs.emplace_back(u, v);
  }
  return MultiGraph::build(a + b, pairs);
}

MultiGraph circulant(int n, const std::vector<Count>& offsets) {
  require_order(n);
  std::set<Count> seen;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (Count o : offsets) {
    if (o < 1 || 2 * o > n) {
      throw InvalidArgument("circulant offset " + std::to_string(o) + " must be in 1.." +
                            std::to_string(n / 2));
    }
    if (!seen.insert(o).second) throw InvalidArgument("repeated circulant offset");
    int count = 2 * o == n ? n / 2 : n;
    for (int i = 0; i < count; ++i) pairs.emplace_back(i, static_cast<int>((i + o) % n));
  }
  return MultiGraph::build(n, pairs);
}

MultiGraph random_simple(int n, int m, std::uint64_t seed) {
  require_order(n);
  auto pairs = all_pairs(n);
  if (m < 0 || m > static_cast<int>(pairs.size())) {
    throw InvalidArgument("edge count " + std::to_string(m) + " impossible on " +
                          std::to_string(n) + " vertices");
  }
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(m);
  std::sort(pairs.begin(), pairs.end());
  return MultiGraph::build(n, pairs);
}

MultiGraph random_regular(int n, int r, std::uint64_t seed) {
  require_order(n);
  if (r < 0 || r >= n) throw InvalidArgument("degree must be in 0..n-1");
  if ((static_cast<long>(n) * r) % 2 != 0) throw InvalidArgument("n*r must be even");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> points;
  for (VertexId v = 0; v < n; ++v) points.insert(points.end(), r, v);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<VertexId, VertexId>> pairs;
    bool ok = true;
    for (std::size_t i = 0; ok && i < points.size(); i += 2) {
      VertexId u = std::min(points[i], points[i + 1]);
      VertexId v = std::max(points[i], points[i + 1]);
      ok = u != v && pairs.emplace(u, v).second;
    }
    if (ok) {
      std::vector<std::pair<VertexId, VertexId>> list(pairs.begin(), pairs.end());
      return MultiGraph::build(n, list);
    }
  }
  throw InvalidArgument("no simple regular graph found within the restart limit");
}

MultiGraph doubled(const MultiGraph& base, int multiplicity) {
  if (multiplicity < 1) throw InvalidArgument("multiplicity must be positive");
  std::vector<Edge> edges;
  for (const Edge& e : base.edges()) edges.insert(edges.end(), multiplicity, e);
  return MultiGraph(base.n(), std::move(edges));
}

MultiGraph random_multigraph(int n, int m, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("a loopless multigraph with edges needs two vertices");
  require_order(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  std::vector<Edge> edges;
  while (static_cast<int>(edges.size()) < m) {
    VertexId u = pick(rng);
    VertexId v = pick(rng);
    if (u != v) edges.push_back(Edge{std::min(u, v), std::max(u, v)});
  }
  return MultiGraph(n, std::move(edges));
}

}  // namespace rigidpack
