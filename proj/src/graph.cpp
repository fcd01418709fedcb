#include "rigidpack/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "rigidpack/error.hpp"
#include "rigidpack/flow.hpp"

namespace rigidpack {

// ---- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(std::initializer_list<VertexId> vertices) {
  for (VertexId v : vertices) mask_ |= std::uint64_t{1} << v;
}

VertexSet VertexSet::single(VertexId v) { return VertexSet(std::uint64_t{1} << v); }

VertexSet VertexSet::full(int n) {
  return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

VertexSet VertexSet::from(std::span<const VertexId> vertices) {
  VertexSet s;
  for (VertexId v : vertices) s = s.with(v);
  return s;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(size());
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (VertexId v : members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

// ---- MultiGraph ------------------------------------------------------------

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidArgument("vertex count must be in 1.." + std::to_string(kMaxVertices) +
                          ", got " + std::to_string(n));
  }
  incident_.assign(n, {});
  for (EdgeId e = 0; e < m(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.u < 0 || edge.u >= n || edge.v < 0 || edge.v >= n) {
      throw InvalidArgument("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (edge.u == edge.v) {
      throw InvalidArgument("edge " + std::to_string(e) + " is a loop");
    }
    incident_[edge.u].push_back(e);
    incident_[edge.v].push_back(e);
  }
}

MultiGraph MultiGraph::build(int n, std::span<const std::pair<VertexId, VertexId>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return MultiGraph(n, std::move(edges));
}

Count MultiGraph::multiplicity(VertexId u, VertexId v) const {
  Count c = 0;
  for (EdgeId e : incident_[u]) {
    if (edges_[e].other(u) == v) ++c;
  }
  return c;
}

bool MultiGraph::is_simple() const {
  std::vector<std::pair<VertexId, VertexId>> seen;
  seen.reserve(edges_.size());
  for (const Edge& e : edges_) seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

MultiGraph MultiGraph::edge_subgraph(std::span<const EdgeId> ids) const {
  std::vector<Edge> edges;
  edges.reserve(ids.size());
  for (EdgeId e : ids) edges.push_back(edges_[e]);
  return MultiGraph(n_, std::move(edges));
}

// ---- Partition -------------------------------------------------------------

Partition::Partition(int n, std::vector<VertexSet> parts) : parts_(std::move(parts)) {
  owner_.assign(n, -1);
  VertexSet covered;
  for (int i = 0; i < size(); ++i) {
    const VertexSet p = parts_[i];
    if (p.empty()) throw InvalidArgument("partition has an empty part");
    if (!p.subset_of(VertexSet::full(n))) throw InvalidArgument("partition part out of range");
    if (p.intersects(covered)) throw InvalidArgument("partition parts overlap");
    covered = covered | p;
    for (VertexId v : p.members()) owner_[v] = i;
  }
  if (covered != VertexSet::full(n)) throw InvalidArgument("partition does not cover V");
}

Partition Partition::singletons(int n) {
  std::vector<VertexSet> parts;
  for (VertexId v = 0; v < n; ++v) parts.push_back(VertexSet::single(v));
  return Partition(n, std::move(parts));
}

int Partition::part_of(VertexId v) const { return owner_[v]; }

// ---- counting --------------------------------------------------------------

Count induced_count(const MultiGraph& g, VertexSet a) {
  Count c = 0;
  for (const Edge& e : g.edges()) c += e.inside(a) ? 1 : 0;
  return c;
}

Count boundary_count(const MultiGraph& g, VertexSet a) {
  Count c = 0;
  for (const Edge& e : g.edges()) c += a.contains(e.u) != a.contains(e.v) ? 1 : 0;
  return c;
}

Count boundary_minus(const MultiGraph& g, VertexSet a, VertexSet b) {
  if (a.intersects(b)) throw InvalidArgument("boundary_minus: A and B must be disjoint");
  const VertexSet outside = (a | b).complement(g.n());
  Count c = 0;
  for (const Edge& e : g.edges()) {
    if ((a.contains(e.u) && outside.contains(e.v)) || (a.contains(e.v) && outside.contains(e.u))) {
      ++c;
    }
  }
  return c;
}

Count partition_cross(const MultiGraph& g, const Partition& p) {
  Count c = 0;
  for (const Edge& e : g.edges()) c += p.part_of(e.u) != p.part_of(e.v) ? 1 : 0;
  return c;
}

Count collection_cross(const MultiGraph& g, std::span<const VertexSet> collection) {
  Count c = 0;
  for (const Edge& e : g.edges()) {
    const bool covered =
        std::any_of(collection.begin(), collection.end(), [&](VertexSet s) { return e.inside(s); });
    c += covered ? 0 : 1;
  }
  return c;
}

std::vector<Count> all_induced_counts(const MultiGraph& g) {
  const int n = g.n();
  if (n > 26) throw BudgetExceeded("all_induced_counts: n > 26");
  // adj[v] lists multiplicity to lower-indexed vertices as a count per vertex.
  std::vector<std::vector<Count>> mult(n, std::vector<Count>(n, 0));
  for (const Edge& e : g.edges()) {
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  const std::size_t total = std::size_t{1} << n;
  std::vector<Count> counts(total, 0);
  for (std::size_t mask = 1; mask < total; ++mask) {
    const int top = 63 - std::countl_zero(static_cast<std::uint64_t>(mask));
    const std::size_t rest = mask & ~(std::size_t{1} << top);
    Count add = 0;
    for (std::size_t r = rest; r != 0; r &= r - 1) add += mult[top][std::countr_zero(r)];
    counts[mask] = counts[rest] + add;
  }
  return counts;
}

// ---- connectivity ----------------------------------------------------------

std::vector<VertexSet> components(const MultiGraph& g, VertexSet removed) {
  std::vector<VertexSet> out;
  VertexSet seen = removed;
  for (VertexId start = 0; start < g.n(); ++start) {
    if (seen.contains(start)) continue;
    VertexSet comp = VertexSet::single(start);
    seen = seen.with(start);
    std::queue<VertexId> queue;
    queue.push(start);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (EdgeId e : g.incident(v)) {
        const VertexId w = g.edge(e).other(v);
        if (!seen.contains(w)) {
          seen = seen.with(w);
          comp = comp.with(w);
          queue.push(w);
        }
      }
    }
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const MultiGraph& g, VertexSet removed) {
  return components(g, removed).size() <= 1;
}

namespace {

// Undirected unit-capacity network over G - removed.
FlowNetwork undirected_network(const MultiGraph& g, VertexSet removed, int extra_nodes = 0) {
  FlowNetwork net(g.n() + extra_nodes);
  for (const Edge& e : g.edges()) {
    if (removed.contains(e.u) || removed.contains(e.v)) continue;
    net.add_arc(e.u, e.v, 1);
    net.add_arc(e.v, e.u, 1);
  }
  return net;
}

VertexSet side_of(const std::vector<bool>& reach, int n) {
  VertexSet s;
  for (VertexId v = 0; v < n; ++v) {
    if (reach[v]) s = s.with(v);
  }
  return s;
}

}  // namespace

Cut min_edge_cut(const MultiGraph& g, VertexSet removed) {
  const VertexSet alive = removed.complement(g.n());
  if (alive.size() < 2) return {};
  const VertexId root = alive.first();
  Cut best;
  for (VertexId t : alive.members()) {
    if (t == root) continue;
    FlowNetwork net = undirected_network(g, removed);
    const Count value = net.max_flow(root, t, best.value);
    if (value < best.value) {
      best.value = value;
      best.side = side_of(net.source_side(root), g.n()) - removed;
    }
    if (best.value == 0) break;
  }
  return best;
}

Count edge_connectivity(const MultiGraph& g, VertexSet removed) {
  return min_edge_cut(g, removed).value;
}

Cut min_essential_cut(const MultiGraph& g) {
  // A cut with an edge on each side separates the ends of some edge ab from the ends of
  // some vertex-disjoint edge cd; minimise over those endpoint pairs.
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  Cut best;
  const int n = g.n();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      if (a == c || a == d || b == c || b == d) continue;
      FlowNetwork net = undirected_network(g, {}, 2);
      const int source = n;
      const int sink = n + 1;
      net.add_arc(source, a, kUnbounded / 4);
      net.add_arc(source, b, kUnbounded / 4);
      net.add_arc(c, sink, kUnbounded / 4);
      net.add_arc(d, sink, kUnbounded / 4);
      const Count value = net.max_flow(source, sink, best.value);
      if (value < best.value) {
        best.value = value;
        best.side = side_of(net.source_side(source), n) & VertexSet::full(n);
      }
    }
  }
  return best;
}

Count essential_edge_connectivity(const MultiGraph& g) { return min_essential_cut(g).value; }

Count local_edge_connectivity(const MultiGraph& g, VertexId s, VertexId t) {
  if (s == t) throw InvalidArgument("local_edge_connectivity: s and t must differ");
  if (s < 0 || t < 0 || s >= g.n() || t >= g.n()) {
    throw InvalidArgument("local_edge_connectivity: vertex out of range");
  }
  FlowNetwork net = undirected_network(g, {});
  return net.max_flow(s, t);
}

Count vertex_connectivity(const MultiGraph& g) {
  const int n = g.n();
  if (n == 1) return 0;
  if (!is_connected(g)) return 0;
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adjacent[e.u][e.v] = adjacent[e.v][e.u] = true;
  Count best = n - 1;
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t = s + 1; t < n; ++t) {
      if (adjacent[s][t]) continue;
      // v_in = 2v, v_out = 2v + 1
      FlowNetwork net(2 * n);
      for (VertexId v = 0; v < n; ++v) {
        const Count cap = (v == s || v == t) ? kUnbounded / 4 : 1;
        net.add_arc(2 * v, 2 * v + 1, cap);
      }
      for (const Edge& e : g.edges()) {
        net.add_arc(2 * e.u + 1, 2 * e.v, kUnbounded / 4);
        net.add_arc(2 * e.v + 1, 2 * e.u, kUnbounded / 4);
      }
      best = std::min(best, net.max_flow(2 * s + 1, 2 * t, best));
    }
  }
  return best;
}

// ---- contraction -----------------------------------------------------------

Contraction contract(const MultiGraph& g, VertexSet a) {
  if (a.empty()) throw InvalidArgument("contract: A must be nonempty");
  if (!a.subset_of(g.vertices())) throw InvalidArgument("contract: A out of range");
  Contraction out;
  out.relabel.assign(g.n(), -1);
  const VertexId anchor = a.first();
  int next = 0;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (a.contains(v) && v != anchor) continue;
    out.relabel[v] = next++;
  }
  for (VertexId v : a.members()) out.relabel[v] = out.relabel[anchor];
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.inside(a)) continue;
    edges.push_back({out.relabel[edge.u], out.relabel[edge.v]});
    out.edge_origin.push_back(e);
  }
  out.graph = MultiGraph(next, std::move(edges));
  return out;
}

}  // namespace rigidpack
