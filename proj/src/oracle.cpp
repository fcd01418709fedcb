#include "rigidpack/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "rigidpack/error.hpp"
#include "rigidpack/sparsity.hpp"

namespace rigidpack {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw BudgetExceeded(what);
}

std::vector<Count> bounds_of(const SetFunc& f, int n) {
  std::vector<Count> bound(std::size_t{1} << n, 0);
  for (std::uint64_t s = 1; s < bound.size(); ++s) bound[s] = f.slack_bound(VertexSet(s));
  return bound;
}

}  // namespace

OracleBudget OracleBudget::parse(const std::string& text) {
  std::vector<int> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int x = std::stoi(item, &used);
      if (used != item.size() || x <= 0) throw std::invalid_argument(item);
      xs.push_back(x);
    } catch (const std::exception&) {
      throw InvalidArgument("budget entry '" + item + "' is not a positive integer");
    }
  }
  OracleBudget b;
  if (xs.size() == 1) {
    b.subset_n = b.partition_n = b.pair_n = xs[0];
  } else if (xs.size() == 3) {
    b.subset_n = xs[0];
    b.partition_n = xs[1];
    b.pair_n = xs[2];
  } else {
    throw InvalidArgument("budget must be N or S,P,Q");
  }
  return b;
}

OracleBudget OracleBudget::from_env() {
  const char* env = std::getenv("RIGIDPACK_BUDGET");
  if (env == nullptr || *env == '\0') return {};
  return parse(env);
}

BfVerdict bf_sparse(const MultiGraph& g, const SetFunc& f, const OracleBudget& budget) {
  require(g.n() <= budget.subset_n, "bf_sparse: n exceeds subset budget");
  BfVerdict out;
  const std::vector<Count> counts = all_induced_counts(g);
  for (std::uint64_t s = 1; s < counts.size(); ++s) {
    if (counts[s] > f.slack_bound(VertexSet(s))) {
      out.holds = false;
      out.set = VertexSet(s);
      return out;
    }
  }
  return out;
}

void for_each_partition(int n, const std::function<bool(const std::vector<VertexSet>&)>& visit) {
  if (n <= 0) return;
  // restricted growth strings a[0]=0, a[i] <= 1 + max(a[0..i-1])
  std::vector<int> a(n, 0);
  std::vector<int> top(n, 0);  // max of a[0..i]
  while (true) {
    std::vector<VertexSet> parts(top[n - 1] + 1);
    for (VertexId v = 0; v < n; ++v) parts[a[v]] = parts[a[v]].with(v);
    if (!visit(parts)) return;
    int i = n - 1;
    while (i > 0 && a[i] == top[i - 1] + 1) --i;
    if (i == 0) return;
    ++a[i];
    top[i] = std::max(top[i - 1], a[i]);
    for (int j = i + 1; j < n; ++j) {
      a[j] = 0;
      top[j] = top[i];
    }
  }
}

BfVerdict bf_partition_connected(const MultiGraph& g, const SetFunc& f,
                                 const OracleBudget& budget) {
  require(g.n() <= budget.partition_n, "bf_partition_connected: n exceeds partition budget");
  BfVerdict out;
  const Count whole = f.eval(g.vertices());
  Count worst = 0;
  for_each_partition(g.n(), [&](const std::vector<VertexSet>& parts) {
    Count need = -whole;
    for (VertexSet p : parts) need += f.eval(p);
    const Count gap = need - partition_cross(g, Partition(g.n(), parts));
    if (gap > worst) {
      worst = gap;
      out.holds = false;
      out.partition = parts;
    }
    return true;
  });
  return out;
}

BfRank bf_rank(const MultiGraph& g, const SetFunc& f) {
  require(g.m() <= 20, "bf_rank: more than 20 edges");
  require(g.n() <= 16, "bf_rank: more than 16 vertices");
  const int n = g.n();
  const int m = g.m();
  const std::vector<Count> bound = bounds_of(f, n);
  for (std::uint64_t s = 1; s < bound.size(); ++s) {
    if (bound[s] < 0) {
      throw InvalidArgument("no sparse subgraph exists: bound is negative on " +
                            VertexSet(s).to_string());
    }
  }
  const Count target = f.rigid_size(n);
  std::vector<Count> count(bound.size(), 0);
  std::vector<EdgeId> current;
  BfRank best;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;

  auto fits = [&](const Edge& e) {
    const std::uint64_t pair = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    const std::uint64_t rest = all & ~pair;
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
      if (count[s | pair] + 1 > bound[s | pair]) return false;
      if (s == 0) break;
    }
    return true;
  };
  auto bump = [&](const Edge& e, Count delta) {
    const std::uint64_t pair = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    const std::uint64_t rest = all & ~pair;
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
      count[s | pair] += delta;
      if (s == 0) break;
    }
  };

  bool done = false;
  std::function<void(int)> dfs = [&](int i) {
    if (done) return;
    if (static_cast<Count>(current.size()) > best.rank) {
      best.rank = static_cast<Count>(current.size());
      best.edges = current;
      if (best.rank >= target) {
        done = true;
        return;
      }
    }
    if (i == m) return;
    if (static_cast<Count>(current.size() + (m - i)) <= best.rank) return;
    const Edge& e = g.edge(i);
    if (fits(e)) {
      bump(e, 1);
      current.push_back(i);
      dfs(i + 1);
      current.pop_back();
      bump(e, -1);
    }
    dfs(i + 1);
  };
  dfs(0);
  return best;
}

BfVerdict bf_rigid(const MultiGraph& g, const SetFunc& f) {
  BfVerdict out;
  const BfRank r = bf_rank(g, f);
  out.edges_a = r.edges;
  out.holds = r.rank == f.rigid_size(g.n());
  if (!out.holds) {
    out.detail = "rank " + std::to_string(r.rank) + " < " + std::to_string(f.rigid_size(g.n()));
  }
  return out;
}

BfVerdict bf_arc_connected(const Orientation& d, const SetFunc& f, const std::vector<Count>& r,
                           const OracleBudget& budget) {
  const int n = d.host().n();
  (void)budget;
  require(n <= 20, "bf_arc_connected: n exceeds 20");
  BfVerdict out;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<Count> in(all + 1, 0);
  for (EdgeId e = 0; e < d.host().m(); ++e) {
    const VertexId t = d.tail(e);
    const VertexId h = d.head(e);
    // sets containing h but not t
    const std::uint64_t rest = all & ~((std::uint64_t{1} << t) | (std::uint64_t{1} << h));
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
      ++in[s | (std::uint64_t{1} << h)];
      if (s == 0) break;
    }
  }
  for (std::uint64_t s = 1; s < all; ++s) {
    Count need = f.eval(VertexSet(s));
    if (!r.empty()) {
      for (std::uint64_t x = s; x != 0; x &= x - 1) need -= r[std::countr_zero(x)];
    }
    if (in[s] < need) {
      out.holds = false;
      out.set = VertexSet(s);
      return out;
    }
  }
  return out;
}

BfVerdict bf_edge_connected(const MultiGraph& g, const SetFunc& f, const OracleBudget& budget) {
  require(g.n() <= budget.subset_n, "bf_edge_connected: n exceeds subset budget");
  BfVerdict out;
  const std::uint64_t all = (std::uint64_t{1} << g.n()) - 1;
  for (std::uint64_t s = 1; s < all; ++s) {
    if (boundary_count(g, VertexSet(s)) < f.eval(VertexSet(s))) {
      out.holds = false;
      out.set = VertexSet(s);
      return out;
    }
  }
  return out;
}

BfVerdict bf_weakly_connected(const MultiGraph& g, const SetFunc& ell, const SetFunc& l,
                              const OracleBudget& budget) {
  require(g.n() <= budget.pair_n, "bf_weakly_connected: n exceeds pair budget");
  BfVerdict out;
  const int n = g.n();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  const std::vector<Count> e = all_induced_counts(g);
  std::vector<Count> lv(all + 1), ellsum(all + 1, 0);
  for (std::uint64_t s = 1; s <= all; ++s) {
    lv[s] = l.eval(VertexSet(s));
    const int low = std::countr_zero(s);
    ellsum[s] = ellsum[s & (s - 1)] + ell.at(low);
  }
  for (std::uint64_t a = 1; a < all; ++a) {
    const std::uint64_t rest = all & ~a;
    for (std::uint64_t b = rest;; b = (b - 1) & rest) {
      const std::uint64_t u = a | b;
      if (u != all) {
        const std::uint64_t c = all & ~u;
        const Count d = e[a | c] - e[a] - e[c];
        if (d < lv[u] - ellsum[b]) {
          out.holds = false;
          out.pair = {VertexSet(a), VertexSet(b)};
          return out;
        }
      }
      if (b == 0) break;
    }
  }
  return out;
}

BfVerdict bf_matroid_axioms(const MultiGraph& g, const SetFunc& f) {
  require(g.m() <= 12, "bf_matroid_axioms: more than 12 edges");
  BfVerdict out;
  const int m = g.m();
  const std::uint64_t total = std::uint64_t{1} << m;
  std::vector<bool> indep(total);
  const std::vector<Count> bound = bounds_of(f, g.n());
  for (std::uint64_t s = 0; s < total; ++s) {
    std::vector<EdgeId> ids;
    for (int i = 0; i < m; ++i) {
      if ((s >> i) & 1U) ids.push_back(i);
    }
    const std::vector<Count> counts = all_induced_counts(g.edge_subgraph(ids));
    bool ok = true;
    for (std::uint64_t a = 1; a < counts.size() && ok; ++a) ok = counts[a] <= bound[a];
    indep[s] = ok;
  }
  auto ids_of = [m](std::uint64_t s) {
    std::vector<EdgeId> ids;
    for (int i = 0; i < m; ++i) {
      if ((s >> i) & 1U) ids.push_back(i);
    }
    return ids;
  };
  if (!indep[0]) {
    out.holds = false;
    out.detail = "empty set is dependent";
    return out;
  }
  for (std::uint64_t s = 1; s < total; ++s) {
    if (!indep[s]) continue;
    for (int i = 0; i < m; ++i) {
      if (((s >> i) & 1U) && !indep[s & ~(std::uint64_t{1} << i)]) {
        out.holds = false;
        out.edges_a = ids_of(s);
        out.detail = "not closed under removing edge " + std::to_string(i);
        return out;
      }
    }
  }
  for (std::uint64_t a = 0; a < total; ++a) {
    if (!indep[a]) continue;
    for (std::uint64_t b = 0; b < total; ++b) {
      if (!indep[b] || std::popcount(b) <= std::popcount(a)) continue;
      bool ok = false;
      for (std::uint64_t x = b & ~a; x != 0 && !ok; x &= x - 1) {
        ok = indep[a | (x & (~x + 1))];
      }
      if (!ok) {
        out.holds = false;
        out.edges_a = ids_of(a);
        out.edges_b = ids_of(b);
        out.detail = "exchange axiom fails";
        return out;
      }
    }
  }
  return out;
}

void for_each_census_graph(int n, const CensusFilter& filter,
                           const std::function<bool(const MultiGraph&)>& visit) {
  if (n < 1 || n > 6) throw BudgetExceeded("census: n must be in 1..6");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t s = 0; s < total; ++s) {
    if (filter.max_edges && std::popcount(s) > *filter.max_edges) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((s >> i) & 1U) edges.push_back({pairs[i].first, pairs[i].second});
    }
    MultiGraph g(n, std::move(edges));
    if (filter.connected && !is_connected(g)) continue;
    if (filter.tight_for) {
      if (g.m() != filter.tight_for->rigid_size(n)) continue;
      if (!is_sparse(g, *filter.tight_for).sparse) continue;
    }
    if (!visit(g)) return;
  }
}

std::vector<MultiGraph> census(int n, const CensusFilter& filter) {
  std::vector<MultiGraph> out;
  for_each_census_graph(n, filter, [&out](const MultiGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

Count edmonds_bound(const MultiGraph& g, const std::vector<SetFunc>& funcs,
                    const std::vector<EdgeId>& forbidden) {
  std::vector<EdgeId> ground;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (std::find(forbidden.begin(), forbidden.end(), e) == forbidden.end()) ground.push_back(e);
  }
  require(ground.size() <= 12, "edmonds_bound: more than 12 edges");
  const std::uint64_t total = std::uint64_t{1} << ground.size();
  Count best = kUnbounded;
  for (std::uint64_t s = 0; s < total; ++s) {
    std::vector<EdgeId> ids;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if ((s >> i) & 1U) ids.push_back(ground[i]);
    }
    const MultiGraph h = g.edge_subgraph(ids);
    Count value = static_cast<Count>(ground.size() - ids.size());
    for (const SetFunc& f : funcs) value += bf_rank(h, f).rank;
    best = std::min(best, value);
  }
  return best;
}

}  // namespace rigidpack
