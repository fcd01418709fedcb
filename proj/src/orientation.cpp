#include "rigidpack/orientation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "rigidpack/error.hpp"
#include "rigidpack/flow.hpp"
#include "rigidpack/hypothesis.hpp"
#include "rigidpack/sparsity.hpp"

namespace rigidpack {

namespace {

// Copies the directions of a suborientation back onto host edge ids.
void write_back(std::vector<bool>& forward, const Orientation& part,
                const std::vector<EdgeId>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    forward[ids[i]] = part.tail(static_cast<EdgeId>(i)) == part.host().edge(static_cast<EdgeId>(i)).u;
  }
}

struct ArcCut {
  Count value = kUnbounded;
  VertexSet entering;  ///< A with d^-(A) = value
};

// Minimum entering cut of D - removed, over a fixed root and both flow directions.
ArcCut min_arc_cut(const Orientation& d, VertexSet removed) {
  const MultiGraph& g = d.host();
  const std::vector<VertexId> live = removed.complement(g.n()).members();
  ArcCut best;
  if (live.size() < 2) return best;
  const VertexId root = live.front();
  auto run = [&](VertexId s, VertexId t) {
    FlowNetwork net(g.n());
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (removed.contains(d.tail(e)) || removed.contains(d.head(e))) continue;
      net.add_arc(d.tail(e), d.head(e), 1);
    }
    const Count limit = best.value == kUnbounded ? kUnbounded : best.value;
    const Count value = net.max_flow(s, t, limit);
    if (value < best.value) {
      const std::vector<bool> side = net.source_side(s);
      VertexSet a;
      for (VertexId v : live) {
        if (!side[v]) a = a.with(v);
      }
      best = ArcCut{value, a};
    }
  };
  for (std::size_t i = 1; i < live.size(); ++i) {
    run(root, live[i]);
    run(live[i], root);
  }
  return best;
}

std::vector<Count> degrees_in(const MultiGraph& g, const std::vector<EdgeId>& ids) {
  std::vector<Count> d(g.n(), 0);
  for (EdgeId e : ids) {
    ++d[g.edge(e).u];
    ++d[g.edge(e).v];
  }
  return d;
}

std::vector<EdgeId> union_of(std::vector<EdgeId> a, const std::vector<EdgeId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// F within a spanning forest T with d_F(v) odd exactly where odd[v]; leaves first.
std::vector<EdgeId> tree_join(const MultiGraph& g, const std::vector<EdgeId>& tree,
                              const std::vector<bool>& odd) {
  const int n = g.n();
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId e : tree) {
    adj[g.edge(e).u].push_back({g.edge(e).v, e});
    adj[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  std::vector<int> parent_edge(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> order;
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::size_t start = order.size();
    order.push_back(root);
    for (std::size_t i = start; i < order.size(); ++i) {
      for (const auto& [w, e] : adj[order[i]]) {
        if (seen[w]) continue;
        seen[w] = true;
        parent_edge[w] = e;
        order.push_back(w);
      }
    }
  }
  std::vector<bool> parity(n, false);
  std::vector<EdgeId> out;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    if (parent_edge[v] < 0) {
      if (parity[v] != odd[v]) throw InvalidArgument("parity demand is odd on a tree component");
      continue;
    }
    if (parity[v] != odd[v]) {
      const EdgeId e = parent_edge[v];
      out.push_back(e);
      parity[v] = !parity[v];
      const VertexId up = g.edge(e).other(v);
      parity[up] = !parity[up];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Count ceil_div(Count a, Count b) { return (a + b - 1) / b; }

}  // namespace

// ---- Hakimi ---------------------------------------------------------------------

HakimiResult hakimi_orient(const MultiGraph& g, const std::vector<Count>& targets) {
  const int n = g.n();
  const int m = g.m();
  if (static_cast<int>(targets.size()) != n) throw InvalidArgument("one target per vertex needed");
  Count total = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (targets[v] < 0) throw InvalidArgument("negative target at vertex " + std::to_string(v));
    total += targets[v];
  }
  if (total != m) {
    throw InvalidArgument("targets sum to " + std::to_string(total) + " but |E| = " +
                          std::to_string(m));
  }
  // source, edge nodes, vertex nodes, sink
  const int source = 0;
  const int sink = 1 + m + n;
  FlowNetwork net(sink + 1);
  std::vector<int> to_u(m);
  for (EdgeId e = 0; e < m; ++e) {
    net.add_arc(source, 1 + e, 1);
    to_u[e] = net.add_arc(1 + e, 1 + m + g.edge(e).u, m + 1);
    net.add_arc(1 + e, 1 + m + g.edge(e).v, m + 1);
  }
  for (VertexId v = 0; v < n; ++v) net.add_arc(1 + m + v, sink, targets[v]);
  HakimiResult out;
  if (net.max_flow(source, sink) == m) {
    std::vector<bool> forward(m);
    // flow into u means u is the head
    for (EdgeId e = 0; e < m; ++e) forward[e] = net.flow_on(to_u[e]) == 0;
    out.feasible = true;
    out.orientation = Orientation(g, std::move(forward));
    return out;
  }
  const std::vector<bool> side = net.source_side(source);
  VertexSet a;
  for (VertexId v = 0; v < n; ++v) {
    if (side[1 + m + v]) a = a.with(v);
  }
  Count cap = 0;
  for (VertexId v : a.members()) cap += targets[v];
  if (induced_count(g, a) <= cap) throw InternalError("hakimi: cut does not certify infeasibility");
  out.witness = a;
  return out;
}

// ---- arc connectivity -------------------------------------------------------------

Count arc_strength(const Orientation& d, VertexSet removed) {
  return min_arc_cut(d, removed).value;
}

ArcVerdict verify_arc(const Orientation& d, const SetFunc& f, const std::vector<Count>& r) {
  const MultiGraph& g = d.host();
  const int n = g.n();
  ArcVerdict out;
  if (n < 2) return out;
  const bool zero_r = std::all_of(r.begin(), r.end(), [](Count x) { return x == 0; });
  if (f.kind() == SetFunc::Kind::Constant && zero_r) {
    const Count need = f.eval(g.vertices());
    const ArcCut cut = min_arc_cut(d, {});
    if (cut.value < need) {
      out.holds = false;
      out.witness = cut.entering;
      out.need = need;
      out.have = cut.value;
    }
    return out;
  }
  if (n > 20) throw BudgetExceeded("verify_arc: exhaustive sweep needs n <= 20");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::vector<Count> e = all_induced_counts(g);
  std::vector<Count> in_sum(full + 1, 0);
  std::vector<Count> r_sum(full + 1, 0);
  std::vector<Count> in_deg(n);
  for (VertexId v = 0; v < n; ++v) in_deg[v] = d.in_degree(v);
  for (std::uint64_t s = 1; s < full; ++s) {
    const int low = std::countr_zero(s);
    in_sum[s] = in_sum[s & (s - 1)] + in_deg[low];
    r_sum[s] = r_sum[s & (s - 1)] + (r.empty() ? 0 : r[low]);
    // arcs entering A = in-degrees inside A minus arcs spanned by A
    const Count have = in_sum[s] - e[s];
    const Count need = f.eval(VertexSet(s)) - r_sum[s];
    if (have < need) {
      out.holds = false;
      out.witness = VertexSet(s);
      out.need = need;
      out.have = have;
      return out;
    }
  }
  return out;
}

// ---- Euler ---------------------------------------------------------------------

Orientation euler_smooth_orient(const MultiGraph& g, EulerMode mode,
                                std::optional<std::uint64_t> seed) {
  const int n = g.n();
  std::vector<Edge> edges = g.edges();
  std::vector<VertexId> odd;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) % 2 == 0) continue;
    if (mode == EulerMode::Eulerian) {
      throw InvalidArgument("vertex " + std::to_string(v) + " has odd degree " +
                            std::to_string(g.degree(v)));
    }
    odd.push_back(v);
  }
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) edges.push_back({odd[i], odd[i + 1]});
  const int total = static_cast<int>(edges.size());

  std::vector<std::vector<EdgeId>> adj(n);
  for (EdgeId e = 0; e < total; ++e) {
    adj[edges[e].u].push_back(e);
    adj[edges[e].v].push_back(e);
  }
  std::vector<VertexId> starts(n);
  std::iota(starts.begin(), starts.end(), 0);
  if (seed) {
    std::mt19937_64 rng(*seed);
    for (auto& list : adj) std::shuffle(list.begin(), list.end(), rng);
    std::shuffle(starts.begin(), starts.end(), rng);
  }
  std::vector<bool> used(total, false);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<bool> forward(total, true);
  // Every walk in a graph with even degrees closes at its start, so each vertex is balanced.
  for (VertexId start : starts) {
    VertexId at = start;
    while (true) {
      while (cursor[at] < adj[at].size() && used[adj[at][cursor[at]]]) ++cursor[at];
      if (cursor[at] == adj[at].size()) {
        if (at == start) break;
        throw InternalError("euler walk stuck away from its start");
      }
      const EdgeId e = adj[at][cursor[at]];
      used[e] = true;
      forward[e] = edges[e].u == at;
      at = edges[e].other(at);
    }
  }
  forward.resize(g.m());
  Orientation out(g, std::move(forward));
  for (VertexId v = 0; v < n; ++v) {
    const Count gap = out.out_degree(v) - out.in_degree(v);
    if (gap > 1 || gap < -1 || (g.degree(v) % 2 == 0 && gap != 0)) {
      throw InternalError("euler orientation unbalanced at vertex " + std::to_string(v));
    }
  }
  return out;
}

bool is_smooth(const Orientation& d) {
  for (VertexId v = 0; v < d.host().n(); ++v) {
    const Count gap = d.out_degree(v) - d.in_degree(v);
    if (gap > 1 || gap < -1) return false;
  }
  return true;
}

Orientation sub_orientation(const Orientation& d, const std::vector<EdgeId>& ids) {
  std::vector<bool> forward;
  forward.reserve(ids.size());
  for (EdgeId e : ids) forward.push_back(d.tail(e) == d.host().edge(e).u);
  return Orientation(d.host().edge_subgraph(ids), std::move(forward));
}

// ---- rigid <-> orientation ---------------------------------------------------------

namespace {

void require_normalized(const SetFunc& ell, int n) {
  if (ell.eval(VertexSet::full(n)) != 0) throw InvalidArgument("ell(V) must be 0");
  for (VertexId v = 0; v < n; ++v) {
    if (ell.at(v) < 0) throw InvalidArgument("ell is negative at vertex " + std::to_string(v));
  }
}

}  // namespace

EquivResult rigid_to_orientation(const MultiGraph& g, const SetFunc& ell) {
  require_normalized(ell, g.n());
  EquivResult out;
  std::vector<Count> targets(g.n());
  Count total = 0;
  for (VertexId v = 0; v < g.n(); ++v) total += targets[v] = ell.at(v);
  if (total != g.m()) {
    out.detail = "not minimally rigid: |E| = " + std::to_string(g.m()) + " but sum ell(v) = " +
                 std::to_string(total);
    return out;
  }
  const SparseVerdict sparse = is_sparse(g, ell);
  if (!sparse.sparse) {
    out.witness = sparse.witness.violation;
    out.detail = "not sparse on " + sparse.witness.violation->to_string();
    return out;
  }
  const HakimiResult hk = hakimi_orient(g, targets);
  if (!hk.feasible) {
    out.witness = hk.witness;
    out.detail = "no orientation with d^-(v) = ell(v); e(A) exceeds the targets on " +
                 hk.witness->to_string();
    return out;
  }
  const ArcVerdict arc = verify_arc(*hk.orientation, ell);
  if (!arc.holds) {
    out.witness = arc.witness;
    out.detail = "orientation is not ell-arc-connected on " + arc.witness->to_string();
    return out;
  }
  out.holds = true;
  out.orientation = hk.orientation;
  return out;
}

EquivResult orientation_to_rigid(const Orientation& d, const SetFunc& ell) {
  const MultiGraph& g = d.host();
  require_normalized(ell, g.n());
  EquivResult out;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (d.in_degree(v) != ell.at(v)) {
      out.witness = VertexSet::single(v);
      out.detail = "in-degree of " + std::to_string(v) + " is " + std::to_string(d.in_degree(v)) +
                   ", ell(v) = " + std::to_string(ell.at(v));
      return out;
    }
  }
  const ArcVerdict arc = verify_arc(d, ell);
  if (!arc.holds) {
    out.witness = arc.witness;
    out.detail = "not ell-arc-connected on " + arc.witness->to_string();
    return out;
  }
  // e(A) = sum_A ell(v) - d^-(A) <= sum_A ell(v) - ell(A)
  const SparseVerdict sparse = is_sparse(g, ell);
  if (!sparse.sparse) throw InternalError("arc-connected orientation of a non-sparse graph");
  out.holds = true;
  out.orientation = d;
  return out;
}

// ---- packed orientation ----------------------------------------------------------

PackedOrientation packed_orientation(const MultiGraph& g, const SetFunc& l, const SetFunc& ell,
                                     const std::vector<Count>& r1, const std::vector<Count>& r2,
                                     std::optional<VertexId> u, bool force) {
  const int n = g.n();
  if (static_cast<int>(r1.size()) != n || static_cast<int>(r2.size()) != n) {
    throw InvalidArgument("r1 and r2 need one value per vertex");
  }
  Count s1 = 0;
  Count s2 = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (r1[v] < 0 || r2[v] < 0) throw InvalidArgument("r1 and r2 must be nonnegative");
    if (r1[v] > l.at(v)) throw InvalidArgument("r1 exceeds l at vertex " + std::to_string(v));
    if (r2[v] > ell.at(v)) throw InvalidArgument("r2 exceeds ell at vertex " + std::to_string(v));
    s1 += r1[v];
    s2 += r2[v];
  }
  if (s1 != l.eval(g.vertices())) throw InvalidArgument("r1 must sum to l(V)");
  if (s2 != ell.eval(g.vertices())) throw InvalidArgument("r2 must sum to ell(V)");
  if (!force) {
    const HypothesisReport report = check_pack61(g, l, ell, 0);
    if (!report.holds) throw HypothesisFailure(report);
  }

  std::vector<Count> l0(n);
  for (VertexId v = 0; v < n; ++v) {
    const Count d = g.degree(v);
    const Count half = (u && *u == v) ? (d + 1) / 2 : d / 2;
    l0[v] = half - l.at(v) - ell.at(v) + r1[v] + r2[v];
    if (l0[v] < 0) {
      throw InvalidArgument("degree too small at vertex " + std::to_string(v) + " for l0 >= 0");
    }
  }
  const Packing pk = matroid_union_pack(g, {SetFunc::vertex_weighted(l0, 0), l, ell});
  PackedOrientation out;
  out.h0 = pk.parts[0].edges;
  out.h1 = pk.parts[1].edges;
  out.h2 = pk.parts[2].edges;
  out.rest = pk.uncovered;
  if (!pk.all_full()) {
    out.deficiency = structure_partition(pk);
    return out;
  }

  std::vector<bool> forward(g.m(), true);
  std::vector<Count> t1(n);
  std::vector<Count> t2(n);
  for (VertexId v = 0; v < n; ++v) {
    t1[v] = l.at(v) - r1[v];
    t2[v] = ell.at(v) - r2[v];
  }
  const std::vector<std::pair<const std::vector<EdgeId>*, const std::vector<Count>*>> plan{
      {&out.h0, &l0}, {&out.h1, &t1}, {&out.h2, &t2}};
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const HakimiResult hk = hakimi_orient(g.edge_subgraph(*plan[i].first), *plan[i].second);
    if (!hk.feasible) {
      throw InvalidArgument("part H" + std::to_string(i) + " has no orientation with the " +
                            "required in-degrees; e(A) exceeds them on " +
                            hk.witness->to_string());
    }
    write_back(forward, *hk.orientation, *plan[i].first);
  }
  if (!out.rest.empty()) {
    write_back(forward, euler_smooth_orient(g.edge_subgraph(out.rest), EulerMode::Smooth),
               out.rest);
  }
  out.orientation = Orientation(g, std::move(forward));

  const Orientation d1 = sub_orientation(out.orientation, out.h1);
  const Orientation d2 = sub_orientation(out.orientation, out.h2);
  for (VertexId v = 0; v < n; ++v) {
    if (d1.in_degree(v) != t1[v] || d2.in_degree(v) != t2[v]) {
      throw InternalError("packed orientation: in-degree identity fails at " + std::to_string(v));
    }
    const Count d = g.degree(v);
    const Count cap = (u && *u == v) ? d / 2 : (d + 1) / 2;
    if (out.orientation.out_degree(v) > cap) {
      throw InternalError("packed orientation: out-degree bound fails at " + std::to_string(v));
    }
  }
  out.checks.push_back("d^-_H1(v) = l(v) - r1(v) and d^-_H2(v) = ell(v) - r2(v) for every v");
  out.checks.push_back("d^+(v) <= ceil(d(v)/2) for every v");
  if (n <= 20) {
    if (!verify_arc(d1, l, r1).holds || !verify_arc(d2, ell, r2).holds) {
      throw InternalError("packed orientation: rooted arc-connectivity fails");
    }
    out.checks.push_back("H1 is r1-rooted l-arc-connected, H2 is r2-rooted ell-arc-connected");
  }
  out.success = true;
  return out;
}

// ---- odd forests and factors --------------------------------------------------------

namespace {

Count forest_excess(const MultiGraph& g, const std::vector<EdgeId>& f,
                    const std::vector<Count>& bound) {
  const std::vector<Count> d = degrees_in(g, f);
  Count excess = 0;
  for (VertexId v = 0; v < g.n(); ++v) excess += std::max<Count>(0, d[v] - bound[v]);
  return excess;
}

// Tree edges on the path between x and y, or empty when they lie in different trees.
std::vector<EdgeId> tree_path(const MultiGraph& g, const std::vector<EdgeId>& tree, VertexId x,
                              VertexId y) {
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(g.n());
  for (EdgeId e : tree) {
    adj[g.edge(e).u].push_back({g.edge(e).v, e});
    adj[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  std::vector<EdgeId> via(g.n(), -1);
  std::vector<bool> seen(g.n(), false);
  std::deque<VertexId> queue{x};
  seen[x] = true;
  while (!queue.empty()) {
    const VertexId a = queue.front();
    queue.pop_front();
    for (const auto& [b, e] : adj[a]) {
      if (seen[b]) continue;
      seen[b] = true;
      via[b] = e;
      queue.push_back(b);
    }
  }
  std::vector<EdgeId> path;
  if (!seen[y]) return path;
  for (VertexId at = y; at != x; at = g.edge(via[at]).other(at)) path.push_back(via[at]);
  return path;
}

}  // namespace

OddForest odd_forest(const MultiGraph& g, Count m) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  for (VertexSet c : components(g)) {
    if (c.size() % 2 != 0) {
      throw InvalidArgument("component " + c.to_string() +
                            " has odd order; no spanning forest with odd degrees exists");
    }
  }
  OddForest out;
  for (VertexId v = 0; v < g.n(); ++v) out.bound.push_back(ceil_div(g.degree(v), m));

  // breadth-first spanning forest, lowest edge ids first
  std::vector<EdgeId> tree;
  {
    std::vector<bool> seen(g.n(), false);
    for (VertexId root = 0; root < g.n(); ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::deque<VertexId> queue{root};
      while (!queue.empty()) {
        const VertexId a = queue.front();
        queue.pop_front();
        std::vector<EdgeId> inc(g.incident(a).begin(), g.incident(a).end());
        std::sort(inc.begin(), inc.end());
        for (EdgeId e : inc) {
          const VertexId b = g.edge(e).other(a);
          if (seen[b]) continue;
          seen[b] = true;
          tree.push_back(e);
          queue.push_back(b);
        }
      }
    }
  }
  const std::vector<bool> all_odd(g.n(), true);
  std::vector<EdgeId> forest = tree_join(g, tree, all_odd);
  Count excess = forest_excess(g, forest, out.bound);

  // first-improvement tree swaps
  for (int round = 0; excess > 0 && round < 4 * g.m(); ++round) {
    bool improved = false;
    std::vector<bool> in_tree(g.m(), false);
    for (EdgeId e : tree) in_tree[e] = true;
    for (EdgeId e = 0; e < g.m() && !improved; ++e) {
      if (in_tree[e]) continue;
      for (EdgeId drop : tree_path(g, tree, g.edge(e).u, g.edge(e).v)) {
        std::vector<EdgeId> candidate;
        for (EdgeId t : tree) {
          if (t != drop) candidate.push_back(t);
        }
        candidate.push_back(e);
        std::vector<EdgeId> f = tree_join(g, candidate, all_odd);
        const Count x = forest_excess(g, f, out.bound);
        if (x < excess) {
          tree = std::move(candidate);
          forest = std::move(f);
          excess = x;
          improved = true;
          break;
        }
      }
    }
    if (!improved) break;
  }
  const std::vector<Count> d = degrees_in(g, forest);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (d[v] % 2 == 0) throw InternalError("odd forest has an even degree at " + std::to_string(v));
  }
  out.edges = std::move(forest);
  out.bound_achieved = excess == 0;
  return out;
}

FactorResult rigid_factor(const MultiGraph& g, Count k, Count r, bool force) {
  if (k < 1 || r < 4) throw InvalidArgument("factor needs k >= 1 and r >= 4");
  for (VertexId v = 0; v < g.n(); ++v) {
    if (g.degree(v) != r) {
      throw InvalidArgument("graph is not " + std::to_string(r) + "-regular at vertex " +
                            std::to_string(v));
    }
  }
  if (g.n() % 2 != 0) throw InvalidArgument("graph has odd order");
  const Count m = ceil_div(r, 6);
  const Count need = 2 * m + 4 * k - 2;
  if (!force) {
    HypothesisReport report;
    if (g.n() <= kHypothesisMaxN) {
      report = check_weakly_connected(g, SetFunc::constant(1), SetFunc::constant(need));
    } else if (vertex_connectivity(g) < need) {
      report.holds = false;
      report.detail = "vertex connectivity below " + std::to_string(need);
    }
    if (!report.holds) {
      report.tag = "factor";
      report.detail = std::to_string(need) + "-connected fails, " + report.detail;
      throw HypothesisFailure(report);
    }
  }
  FactorResult out;
  DegreeSpec spec;
  spec.mode = DegreeMode::Halved;
  const SetFunc rigid_func = SetFunc::lmn(k, 2 * k - 1);
  const PartitionRigidResult base = pack_partition_rigid(g, SetFunc::lmn(m, m), rigid_func, {}, spec);
  if (!base.success) {
    out.detail = "packing of the tree-connected and rigid parts is deficient";
    return out;
  }
  const std::vector<EdgeId>& l_edges = base.packing.parts[base.l_part].edges;
  out.rigid = base.packing.parts[base.ell_part].edges;
  const OddForest forest = odd_forest(g.edge_subgraph(l_edges), m);
  for (EdgeId e : forest.edges) out.forest.push_back(l_edges[e]);
  std::sort(out.forest.begin(), out.forest.end());
  out.forest_bound = forest.bound_achieved;
  out.factor = complement_edges(g, out.forest);

  const std::vector<Count> d = degrees_in(g, out.factor);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (d[v] != r - 1 && d[v] != r - 3) {
      out.detail = "vertex " + std::to_string(v) + " has factor degree " + std::to_string(d[v]) +
                   (forest.bound_achieved ? "" : " (odd forest degree bound not achieved)");
      return out;
    }
  }
  if (!rank_and_rigid(g.edge_subgraph(out.factor), rigid_func).rigid) {
    throw InternalError("factor is not " + std::to_string(k) + "-rigid");
  }
  out.success = true;
  return out;
}

// ---- vertex-robust arc-strong orientation -------------------------------------------

namespace {

// Reverses a directed cycle v -> a ~> c -> v with a in A and c outside A u {v}, the path
// avoiding v. Returns false when no such cycle exists.
bool reverse_repair_cycle(Orientation& d, VertexId v, VertexSet a) {
  const MultiGraph& g = d.host();
  const int n = g.n();
  std::vector<EdgeId> via(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<EdgeId> enter(n, -1);
  std::deque<VertexId> queue;
  for (EdgeId e = 0; e < g.m(); ++e) {
    const VertexId h = d.head(e);
    if (d.tail(e) == v && a.contains(h) && !seen[h]) {
      seen[h] = true;
      enter[h] = e;
      queue.push_back(h);
    }
  }
  std::vector<std::vector<EdgeId>> out_arcs(n);
  std::vector<EdgeId> back(n, -1);
  for (EdgeId e = 0; e < g.m(); ++e) {
    out_arcs[d.tail(e)].push_back(e);
    if (d.head(e) == v && back[d.tail(e)] < 0) back[d.tail(e)] = e;
  }
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    if (!a.contains(x) && back[x] >= 0) {
      std::vector<EdgeId> cycle{back[x]};
      VertexId at = x;
      while (via[at] >= 0) {
        cycle.push_back(via[at]);
        at = d.tail(via[at]);
      }
      cycle.push_back(enter[at]);
      for (EdgeId e : cycle) d.reverse(e);
      return true;
    }
    for (EdgeId e : out_arcs[x]) {
      const VertexId y = d.head(e);
      if (y == v || seen[y]) continue;
      seen[y] = true;
      via[y] = e;
      queue.push_back(y);
    }
  }
  return false;
}

struct Deficit {
  VertexId v;
  VertexSet a;
};

std::optional<Deficit> robust_deficit(const Orientation& d, Count k) {
  for (VertexId v = 0; v < d.host().n(); ++v) {
    const ArcCut cut = min_arc_cut(d, VertexSet::single(v));
    if (cut.value < k) return Deficit{v, cut.entering};
  }
  return std::nullopt;
}

}  // namespace

RobustResult robust_arc_strong(const MultiGraph& g, Count k, const RobustOptions& options) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  const Count k2 = 2 * k + 1;
  const PresetResult split = preset_thm10_2(g, k2, 1, 1, options.force);
  RobustResult out;
  out.tree = split.trees.at(0);
  const std::vector<EdgeId> rest_g = complement_edges(g, out.tree);  // G'
  const std::vector<Count> dg = degrees_in(g, rest_g);
  std::vector<bool> odd(g.n());
  for (VertexId v = 0; v < g.n(); ++v) odd[v] = dg[v] % 2 != 0;
  const std::vector<EdgeId> f = tree_join(g, out.tree, odd);
  out.h = union_of(rest_g, f);
  const std::vector<EdgeId> leftover = complement_edges(g, out.h);  // T \ F

  const MultiGraph h = g.edge_subgraph(out.h);
  if (edge_connectivity(h) < 4 * k + 2) throw InternalError("H is not (4k+2)-edge-connected");
  for (VertexId v = 0; v < g.n(); ++v) {
    if (h.degree(v) % 2 != 0) throw InternalError("H is not Eulerian");
    if (edge_connectivity(h, VertexSet::single(v)) < 2 * k) {
      throw InternalError("H - " + std::to_string(v) + " is not 2k-edge-connected");
    }
  }

  for (int attempt = 0; attempt < options.retries; ++attempt) {
    out.attempts = attempt + 1;
    const std::uint64_t seed = options.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt);
    Orientation dh = euler_smooth_orient(h, EulerMode::Eulerian, seed);
    bool robust = false;
    for (int step = 0; step <= options.repairs; ++step) {
      const std::optional<Deficit> deficit = robust_deficit(dh, k);
      if (!deficit) {
        robust = true;
        break;
      }
      if (step == options.repairs || !reverse_repair_cycle(dh, deficit->v, deficit->a)) break;
    }
    if (!robust) continue;

    std::vector<bool> forward(g.m(), true);
    write_back(forward, dh, out.h);
    if (!leftover.empty()) {
      write_back(forward,
                 euler_smooth_orient(g.edge_subgraph(leftover), EulerMode::Smooth, seed),
                 leftover);
    }
    Orientation d(g, std::move(forward));
    if (!is_smooth(d) || arc_strength(d) < k2) continue;
    if (robust_deficit(d, k)) continue;
    out.orientation = std::move(d);
    out.verified = true;
    out.detail = "smooth, " + std::to_string(k2) + "-arc-strong, every G - v " +
                 std::to_string(k) + "-arc-strong";
    return out;
  }
  out.detail = "unverified: retry budget of " + std::to_string(options.retries) +
               " attempts exhausted without a vertex-robust orientation";
  return out;
}

}  // namespace rigidpack
