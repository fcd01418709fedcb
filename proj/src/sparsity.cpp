#include "rigidpack/sparsity.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "rigidpack/error.hpp"
#include "rigidpack/oracle.hpp"

namespace rigidpack {

// ---- PebbleGame ------------------------------------------------------------

PebbleGame::PebbleGame(int n, PebbleParams params)
    : capacity_(std::move(params.capacity)), c_(params.c), pebbles_(capacity_), out_(n) {
  if (static_cast<int>(capacity_.size()) != n) {
    throw InvalidArgument("pebble game needs one capacity per vertex");
  }
}

PebbleGame::PebbleGame(int n, Count k, Count ell)
    : PebbleGame(n, PebbleParams{std::vector<Count>(n, k), ell}) {}

bool PebbleGame::contains(EdgeId id) const {
  for (const auto& arcs : out_) {
    for (const Arc& a : arcs) {
      if (a.id == id) return true;
    }
  }
  return false;
}

std::vector<PebbleGame::Arc> PebbleGame::arcs() const {
  std::vector<Arc> all;
  for (const auto& arcs : out_) all.insert(all.end(), arcs.begin(), arcs.end());
  std::sort(all.begin(), all.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });
  return all;
}

bool PebbleGame::find_pebble(VertexId from, VertexId blocked) {
  const int n = this->n();
  std::vector<int> parent_arc(n, -1);  // index into out_[parent]
  std::vector<VertexId> parent(n, -1);
  std::vector<bool> seen(n, false);
  seen[from] = true;
  if (blocked >= 0) seen[blocked] = true;
  std::queue<VertexId> queue;
  queue.push(from);
  VertexId found = -1;
  while (!queue.empty() && found < 0) {
    const VertexId x = queue.front();
    queue.pop();
    // lowest head first
    std::vector<std::pair<VertexId, int>> next;
    for (int i = 0; i < static_cast<int>(out_[x].size()); ++i) next.emplace_back(out_[x][i].head, i);
    std::sort(next.begin(), next.end());
    for (const auto& [y, i] : next) {
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      parent_arc[y] = out_[x][i].id;
      if (pebbles_[y] > 0) {
        found = y;
        break;
      }
      queue.push(y);
    }
  }
  if (found < 0) return false;
  // Reverse the path from -> ... -> found; the pebble moves back to `from`.
  --pebbles_[found];
  ++pebbles_[from];
  for (VertexId y = found; y != from; y = parent[y]) {
    const VertexId x = parent[y];
    auto& arcs = out_[x];
    const auto it = std::find_if(arcs.begin(), arcs.end(),
                                 [&](const Arc& a) { return a.id == parent_arc[y]; });
    Arc arc = *it;
    arcs.erase(it);
    std::swap(arc.tail, arc.head);
    out_[y].push_back(arc);
  }
  return true;
}

bool PebbleGame::gather(VertexId u, VertexId v) {
  if (u == v) throw InvalidArgument("pebble game: loop edge");
  while (pebbles_[u] + pebbles_[v] < c_ + 1) {
    if (find_pebble(u, v)) continue;
    if (find_pebble(v, u)) continue;
    return false;
  }
  return true;
}

bool PebbleGame::try_insert(EdgeId id, VertexId u, VertexId v) {
  if (!gather(u, v)) return false;
  const VertexId tail = pebbles_[u] > 0 ? u : v;
  const VertexId head = tail == u ? v : u;
  --pebbles_[tail];
  out_[tail].push_back({id, tail, head});
  ++accepted_;
  return true;
}

void PebbleGame::erase(EdgeId id) {
  for (auto& arcs : out_) {
    const auto it = std::find_if(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.id == id; });
    if (it != arcs.end()) {
      ++pebbles_[it->tail];
      arcs.erase(it);
      --accepted_;
      return;
    }
  }
  throw InvalidArgument("pebble game: edge " + std::to_string(id) + " is not accepted");
}

VertexSet PebbleGame::reach(VertexSet from) const {
  VertexSet seen = from;
  std::vector<VertexId> stack = from.members();
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const Arc& a : out_[x]) {
      if (!seen.contains(a.head)) {
        seen = seen.with(a.head);
        stack.push_back(a.head);
      }
    }
  }
  return seen;
}

std::optional<VertexSet> PebbleGame::minimal_tight(VertexId u, VertexId v) {
  if (gather(u, v)) return std::nullopt;
  return reach(VertexSet{u, v});
}

VertexSet PebbleGame::maximal_tight(VertexId u, VertexId v) {
  if (gather(u, v)) throw InvalidArgument("maximal_tight: u and v are not in a tight set");
  // Vertices that can reach a free pebble away from u and v are outside.
  const int n = this->n();
  std::vector<std::vector<VertexId>> in(n);
  for (const auto& arcs : out_) {
    for (const Arc& a : arcs) in[a.head].push_back(a.tail);
  }
  VertexSet bad;
  std::vector<VertexId> stack;
  for (VertexId w = 0; w < n; ++w) {
    if (w != u && w != v && pebbles_[w] > 0) {
      bad = bad.with(w);
      stack.push_back(w);
    }
  }
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId t : in[x]) {
      if (!bad.contains(t)) {
        bad = bad.with(t);
        stack.push_back(t);
      }
    }
  }
  return VertexSet::full(n) - bad;
}

void PebbleGame::check_invariants() const {
  Count total = 0;
  Count caps = 0;
  for (VertexId v = 0; v < n(); ++v) {
    if (pebbles_[v] < 0 || pebbles_[v] + out_degree(v) != capacity_[v]) {
      throw InternalError("pebble accounting broken at vertex " + std::to_string(v));
    }
    total += pebbles_[v];
    caps += capacity_[v];
  }
  if (total + accepted_ != caps) throw InternalError("pebble total does not match capacity");
}

PebbleBasis pebble_basis(const MultiGraph& g, Count k, Count ell) {
  if (k < 1 || ell < 0 || ell >= 2 * k) {
    throw InvalidArgument("pebble_basis needs 0 <= ell < 2k, got k=" + std::to_string(k) +
                          " ell=" + std::to_string(ell));
  }
  PebbleBasis out{{}, PebbleGame(g.n(), k, ell)};
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (out.state.try_insert(e, g.edge(e).u, g.edge(e).v)) out.basis.push_back(e);
  }
  out.state.check_invariants();
  return out;
}

// ---- oracles ---------------------------------------------------------------

namespace {

class PebbleOracle final : public SparsityOracle {
 public:
  PebbleOracle(int n, PebbleParams params) : game_(n, std::move(params)) {}
  bool can_add(VertexId u, VertexId v) override { return game_.gather(u, v); }
  void add(EdgeId id, VertexId u, VertexId v) override {
    if (!game_.try_insert(id, u, v)) throw InternalError("pebble oracle: add on dependent edge");
  }
  void remove(EdgeId id) override { game_.erase(id); }
  std::optional<VertexSet> minimal_tight(VertexId u, VertexId v) override {
    return game_.minimal_tight(u, v);
  }
  VertexSet maximal_tight(VertexId u, VertexId v) override { return game_.maximal_tight(u, v); }

 private:
  PebbleGame game_;
};

class ExhaustiveOracle final : public SparsityOracle {
 public:
  ExhaustiveOracle(const SetFunc& f, int n) : n_(n), bound_(std::size_t{1} << n), count_(bound_.size(), 0) {
    for (std::uint64_t s = 1; s < bound_.size(); ++s) {
      bound_[s] = f.slack_bound(VertexSet(s));
      if (bound_[s] < 0) {
        throw InvalidArgument("no sparse subgraph exists: bound is negative on " +
                              VertexSet(s).to_string());
      }
    }
  }
  bool can_add(VertexId u, VertexId v) override { return !tight_containing(u, v).has_value(); }
  void add(EdgeId id, VertexId u, VertexId v) override {
    if (!can_add(u, v)) throw InternalError("exhaustive oracle: add on dependent edge");
    bump(u, v, 1);
    edges_[id] = {u, v};
  }
  void remove(EdgeId id) override {
    const auto it = edges_.find(id);
    if (it == edges_.end()) throw InvalidArgument("exhaustive oracle: unknown edge");
    bump(it->second.u, it->second.v, -1);
    edges_.erase(it);
  }
  std::optional<VertexSet> minimal_tight(VertexId u, VertexId v) override {
    return tight_containing(u, v);
  }
  VertexSet maximal_tight(VertexId u, VertexId v) override {
    const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    std::optional<std::uint64_t> best;
    for (std::uint64_t s = 0; s < count_.size(); ++s) {
      if ((s & pair) != pair || count_[s] < bound_[s]) continue;
      if (!best || std::popcount(s) > std::popcount(*best)) best = s;
    }
    if (!best) throw InvalidArgument("maximal_tight: u and v are not in a tight set");
    return VertexSet(*best);
  }

 private:
  void bump(VertexId u, VertexId v, Count delta) {
    const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    const std::uint64_t rest = ((std::uint64_t{1} << n_) - 1) & ~pair;
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
      count_[s | pair] += delta;
      if (s == 0) break;
    }
  }
  // Smallest tight set containing u and v: the intersection of all of them when that is
  // tight, otherwise the least tight set of minimum size.
  std::optional<VertexSet> tight_containing(VertexId u, VertexId v) const {
    const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    const std::uint64_t rest = ((std::uint64_t{1} << n_) - 1) & ~pair;
    std::uint64_t meet = ~std::uint64_t{0};
    std::optional<std::uint64_t> smallest;
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
      const std::uint64_t t = s | pair;
      if (count_[t] >= bound_[t]) {
        meet &= t;
        if (!smallest || std::popcount(t) < std::popcount(*smallest) ||
            (std::popcount(t) == std::popcount(*smallest) && t < *smallest)) {
          smallest = t;
        }
      }
      if (s == 0) break;
    }
    if (!smallest) return std::nullopt;
    if (count_[meet] >= bound_[meet]) return VertexSet(meet);
    return VertexSet(*smallest);
  }

  int n_;
  std::vector<Count> bound_;
  std::vector<Count> count_;
  std::map<EdgeId, Edge> edges_;
};

}  // namespace

bool is_matroidal(const SetFunc& f, int n) {
  if (f.pebble_params(n)) return true;
  if (n > 10) return false;
  return property_report(f, n).matroidal();
}

std::unique_ptr<SparsityOracle> make_oracle(const SetFunc& f, int n, bool require_matroid) {
  if (auto params = f.pebble_params(n)) return std::make_unique<PebbleOracle>(n, std::move(*params));
  if (n > 16) {
    throw BudgetExceeded("set function " + f.describe() +
                         " has no pebble parameters and n > 16");
  }
  if (require_matroid) {
    if (n > 10) throw BudgetExceeded("matroid check for " + f.describe() + " needs n <= 10");
    if (!property_report(f, n).matroidal()) {
      throw InvalidArgument("set function " + f.describe() +
                            " is not 2-intersecting supermodular and weakly subadditive");
    }
  }
  return std::make_unique<ExhaustiveOracle>(f, n);
}

// ---- sparsity queries ------------------------------------------------------

SparseVerdict is_sparse_edges(const MultiGraph& g, const SetFunc& f,
                              const std::vector<EdgeId>& edges) {
  SparseVerdict out;
  if (auto params = f.pebble_params(g.n())) {
    PebbleGame game(g.n(), std::move(*params));
    for (EdgeId e : edges) {
      const Edge& edge = g.edge(e);
      if (!game.try_insert(e, edge.u, edge.v)) {
        out.witness.violation = game.minimal_tight(edge.u, edge.v);
        return out;
      }
    }
    out.sparse = true;
    out.witness.tight = edges;
    return out;
  }
  if (g.n() > 16) {
    throw BudgetExceeded("sparsity of " + f.describe() + " on more than 16 vertices");
  }
  const MultiGraph sub = g.edge_subgraph(edges);
  const std::vector<Count> counts = all_induced_counts(sub);
  for (std::uint64_t s = 1; s < counts.size(); ++s) {
    if (counts[s] > f.slack_bound(VertexSet(s))) {
      out.witness.violation = VertexSet(s);
      return out;
    }
  }
  out.sparse = true;
  out.witness.tight = edges;
  return out;
}

SparseVerdict is_sparse(const MultiGraph& g, const SetFunc& f) {
  std::vector<EdgeId> all(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) all[e] = e;
  return is_sparse_edges(g, f, all);
}

RankResult rank_and_rigid(const MultiGraph& g, const SetFunc& f) {
  RankResult out;
  const Count target = f.rigid_size(g.n());
  if (is_matroidal(f, g.n())) {
    auto oracle = make_oracle(f, g.n(), false);
    for (EdgeId e = 0; e < g.m(); ++e) {
      const Edge& edge = g.edge(e);
      if (oracle->can_add(edge.u, edge.v)) {
        oracle->add(e, edge.u, edge.v);
        out.witness.tight.push_back(e);
      }
    }
  } else {
    out.witness.tight = bf_rank(g, f).edges;
  }
  out.rank = static_cast<Count>(out.witness.tight.size());
  out.rigid = out.rank == target;
  return out;
}

std::vector<VertexSet> rigid_components(const MultiGraph& f_graph, const SetFunc& f) {
  const SparseVerdict verdict = is_sparse(f_graph, f);
  if (!verdict.sparse) {
    throw InvalidArgument("rigid_components: graph is not sparse, violated on " +
                          verdict.witness.violation->to_string());
  }
  const int n = f_graph.n();
  std::vector<VertexSet> found;
  auto covered_pair = [&found](VertexId u, VertexId v) {
    return std::any_of(found.begin(), found.end(),
                       [&](VertexSet s) { return s.contains(u) && s.contains(v); });
  };
  auto oracle = make_oracle(f, n, false);
  for (EdgeId e = 0; e < f_graph.m(); ++e) oracle->add(e, f_graph.edge(e).u, f_graph.edge(e).v);
  if (f.pebble_params(n)) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (covered_pair(u, v) || oracle->can_add(u, v)) continue;
        found.push_back(oracle->maximal_tight(u, v));
      }
    }
  } else {
    // every tight set of size >= 2, keep the maximal ones
    const std::vector<Count> counts = all_induced_counts(f_graph);
    std::vector<VertexSet> tight;
    for (std::uint64_t s = 1; s < counts.size(); ++s) {
      if (std::popcount(s) >= 2 && counts[s] == f.slack_bound(VertexSet(s))) {
        tight.push_back(VertexSet(s));
      }
    }
    for (VertexSet s : tight) {
      const bool maximal = std::none_of(tight.begin(), tight.end(), [&](VertexSet t) {
        return t != s && s.subset_of(t);
      });
      if (maximal) found.push_back(s);
    }
  }
  VertexSet covered;
  for (VertexSet s : found) covered = covered | s;
  for (VertexId v = 0; v < n; ++v) {
    if (!covered.contains(v)) found.push_back(VertexSet::single(v));
  }
  std::sort(found.begin(), found.end(), [](VertexSet a, VertexSet b) {
    return a.members() < b.members();
  });
  return found;
}

MinimalRigid minimal_rigid_between(const MultiGraph& f_graph, const SetFunc& f, VertexId x,
                                   VertexId y) {
  if (x == y) throw InvalidArgument("minimal_rigid_between: x and y must differ");
  const SparseVerdict verdict = is_sparse(f_graph, f);
  if (!verdict.sparse) throw InvalidArgument("minimal_rigid_between: graph is not sparse");
  auto oracle = make_oracle(f, f_graph.n(), false);
  for (EdgeId e = 0; e < f_graph.m(); ++e) oracle->add(e, f_graph.edge(e).u, f_graph.edge(e).v);
  MinimalRigid out;
  if (auto q = oracle->minimal_tight(x, y)) {
    out.q = *q;
  } else {
    out.free_pair = true;
  }
  return out;
}

std::optional<VertexSet> minimal_rigid_cut_violation(const MultiGraph& f_graph, VertexSet q,
                                                     VertexId x, VertexId y) {
  if (q.size() > 22) throw BudgetExceeded("minimal_rigid_cut_violation: |Q| > 22");
  const std::vector<VertexId> others = (q - VertexSet{x, y}).members();
  const std::uint64_t total = std::uint64_t{1} << others.size();
  std::vector<Edge> inside;
  for (const Edge& e : f_graph.edges()) {
    if (e.inside(q)) inside.push_back(e);
  }
  for (std::uint64_t s = 0; s + 1 < total; ++s) {
    VertexSet a{x, y};
    for (std::size_t i = 0; i < others.size(); ++i) {
      if ((s >> i) & 1U) a = a.with(others[i]);
    }
    const bool leaves = std::any_of(inside.begin(), inside.end(), [&](const Edge& e) {
      return a.contains(e.u) != a.contains(e.v);
    });
    if (!leaves) return a;
  }
  return std::nullopt;
}

MultiGraph exchange(const MultiGraph& f_graph, const SetFunc& f, VertexId x, VertexId y,
                    EdgeId e) {
  const MinimalRigid mr = minimal_rigid_between(f_graph, f, x, y);
  if (mr.free_pair) throw InvalidArgument("exchange: x and y are a free pair");
  if (e < 0 || e >= f_graph.m() || !f_graph.edge(e).inside(mr.q)) {
    throw InvalidArgument("exchange: edge is not inside the minimal rigid set " +
                          mr.q.to_string());
  }
  if (f.pebble_params(f_graph.n()) && mr.q.size() <= 16) {
    if (auto bad = minimal_rigid_cut_violation(f_graph, mr.q, x, y)) {
      throw InternalError("minimal rigid set " + mr.q.to_string() + " is split by " +
                          bad->to_string());
    }
  }
  std::vector<Edge> edges = f_graph.edges();
  edges[e] = {x, y};
  MultiGraph out(f_graph.n(), std::move(edges));
  const SparseVerdict verdict = is_sparse(out, f);
  if (!verdict.sparse) {
    throw InternalError("exchange result is not sparse on " +
                        verdict.witness.violation->to_string());
  }
  return out;
}

}  // namespace rigidpack
