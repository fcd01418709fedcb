#include "rigidpack/packing.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <set>

#include "rigidpack/error.hpp"
#include "rigidpack/hypothesis.hpp"
#include "rigidpack/oracle.hpp"
#include "rigidpack/sparsity.hpp"

namespace rigidpack {

namespace {

constexpr int kUncovered = -1;
constexpr int kForbidden = -2;

std::vector<EdgeId> sorted_unique(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

// Part oracles with their edge sets and the owner of every host edge.
class UnionState {
 public:
  UnionState(const MultiGraph& g, const std::vector<SetFunc>& funcs,
             const std::vector<EdgeId>& forbidden)
      : g_(g), owner_(g.m(), kUncovered), members_(funcs.size()) {
    for (const SetFunc& f : funcs) oracles_.push_back(make_oracle(f, g.n(), true));
    for (EdgeId e : forbidden) {
      if (e < 0 || e >= g.m()) throw InvalidArgument("forbidden edge id out of range");
      owner_[e] = kForbidden;
    }
  }

  int parts() const { return static_cast<int>(oracles_.size()); }
  int owner(EdgeId e) const { return owner_[e]; }
  const std::set<EdgeId>& members(int part) const { return members_[part]; }
  SparsityOracle& oracle(int part) { return *oracles_[part]; }

  void place(EdgeId e, int part) {
    const Edge& edge = g_.edge(e);
    if (!oracles_[part]->can_add(edge.u, edge.v)) {
      throw InternalError("augmenting chain produced a dependent set in part " +
                          std::to_string(part) + " at edge " + std::to_string(e));
    }
    oracles_[part]->add(e, edge.u, edge.v);
    members_[part].insert(e);
    owner_[e] = part;
  }
  void lift(EdgeId e) {
    const int part = owner_[e];
    oracles_[part]->remove(e);
    members_[part].erase(e);
    owner_[e] = kUncovered;
  }

  struct Step {
    EdgeId from;
    int part;
  };

  // Breadth-first search over single replacements from `sources`. With augment set, the
  // first accepting chain is applied and true returned. Without it, reaching an acceptance
  // is an error and `reached` holds the explored closure.
  bool search(const std::vector<EdgeId>& sources, bool augment, std::vector<bool>* reached) {
    std::vector<bool> seen(g_.m(), false);
    std::vector<Step> parent(g_.m(), Step{-1, -1});
    std::deque<EdgeId> queue;
    for (EdgeId s : sources) {
      seen[s] = true;
      queue.push_back(s);
    }
    while (!queue.empty()) {
      const EdgeId x = queue.front();
      queue.pop_front();
      const Edge& edge = g_.edge(x);
      for (int i = 0; i < parts(); ++i) {
        if (i == owner_[x]) continue;
        const std::optional<VertexSet> q = oracles_[i]->minimal_tight(edge.u, edge.v);
        if (!q) {
          if (!augment) {
            throw InternalError("packing is not maximum: edge " + std::to_string(x) +
                                " reaches an acceptance in part " + std::to_string(i));
          }
          apply(x, i, parent);
          return true;
        }
        for (EdgeId y : members_[i]) {
          if (seen[y] || !g_.edge(y).inside(*q)) continue;
          seen[y] = true;
          parent[y] = Step{x, i};
          queue.push_back(y);
        }
      }
    }
    if (reached) *reached = std::move(seen);
    return false;
  }

 private:
  void apply(EdgeId last, int part, const std::vector<Step>& parent) {
    std::vector<std::pair<EdgeId, int>> moves{{last, part}};
    for (EdgeId y = last; parent[y].from >= 0; y = parent[y].from) {
      moves.emplace_back(parent[y].from, parent[y].part);
    }
    for (const auto& [e, to] : moves) {
      if (owner_[e] >= 0) lift(e);
    }
    for (const auto& [e, to] : moves) place(e, to);
  }

  const MultiGraph& g_;
  std::vector<std::unique_ptr<SparsityOracle>> oracles_;
  std::vector<int> owner_;
  std::vector<std::set<EdgeId>> members_;
};

UnionState rebuild(const Packing& pk, std::vector<SetFunc>& funcs) {
  for (const PackPart& part : pk.parts) funcs.push_back(part.func);
  UnionState state(pk.host, funcs, pk.forbidden);
  for (std::size_t i = 0; i < pk.parts.size(); ++i) {
    for (EdgeId e : pk.parts[i].edges) state.place(e, static_cast<int>(i));
  }
  return state;
}

std::vector<EdgeId> inside(const MultiGraph& g, const std::vector<EdgeId>& ids, VertexSet a) {
  std::vector<EdgeId> out;
  for (EdgeId e : ids) {
    if (g.edge(e).inside(a)) out.push_back(e);
  }
  return out;
}

// e_F(P) >= sum_{X in P} f(X) - f(A) over every partition P of A.
bool partition_connected_on(const MultiGraph& g, const std::vector<EdgeId>& ids,
                            const SetFunc& f, VertexSet a) {
  const std::vector<VertexId> members = a.members();
  const Count whole = f.eval(a);
  bool ok = true;
  for_each_partition(static_cast<int>(members.size()), [&](const std::vector<VertexSet>& p) {
    std::vector<VertexSet> mapped;
    Count need = -whole;
    for (VertexSet local : p) {
      VertexSet x;
      for (VertexId i : local.members()) x = x.with(members[i]);
      mapped.push_back(x);
      need += f.eval(x);
    }
    Count cross = 0;
    for (EdgeId e : ids) {
      const Edge& edge = g.edge(e);
      const bool same = std::any_of(mapped.begin(), mapped.end(),
                                    [&](VertexSet x) { return edge.inside(x); });
      if (!same) ++cross;
    }
    ok = cross >= need;
    return ok;
  });
  return ok;
}

std::vector<EdgeId> union_of(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  std::vector<EdgeId> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return sorted_unique(std::move(out));
}

std::vector<Count> degrees_in(const MultiGraph& g, const std::vector<EdgeId>& ids) {
  std::vector<Count> d(g.n(), 0);
  for (EdgeId e : ids) {
    ++d[g.edge(e).u];
    ++d[g.edge(e).v];
  }
  return d;
}

std::vector<EdgeId> lift_ids(const std::vector<EdgeId>& local, const std::vector<EdgeId>& map) {
  std::vector<EdgeId> out;
  out.reserve(local.size());
  for (EdgeId e : local) out.push_back(map[e]);
  return sorted_unique(std::move(out));
}

Count ceil_div(Count num, Count den) {
  Count q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return q;
}

}  // namespace

// ---- Packing -----------------------------------------------------------------

bool Packing::full(std::size_t part) const {
  return static_cast<Count>(parts.at(part).edges.size()) == parts[part].func.rigid_size(host.n());
}

bool Packing::all_full() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!full(i)) return false;
  }
  return true;
}

Count Packing::covered() const {
  Count total = 0;
  for (const PackPart& p : parts) total += static_cast<Count>(p.edges.size());
  return total;
}

std::vector<int> Packing::owners() const {
  std::vector<int> owner(host.m(), kUncovered);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (EdgeId e : parts[i].edges) owner[e] = static_cast<int>(i);
  }
  for (EdgeId e : forbidden) owner[e] = kForbidden;
  return owner;
}

std::vector<EdgeId> complement_edges(const MultiGraph& g, const std::vector<EdgeId>& used) {
  std::vector<bool> taken(g.m(), false);
  for (EdgeId e : used) taken[e] = true;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (!taken[e]) out.push_back(e);
  }
  return out;
}

Packing matroid_union_pack(const MultiGraph& g, const std::vector<SetFunc>& funcs,
                           const std::vector<EdgeId>& forbidden) {
  Packing pk;
  pk.host = g;
  pk.forbidden = sorted_unique(forbidden);
  UnionState state(g, funcs, pk.forbidden);
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (state.owner(e) == kForbidden) continue;
    if (!state.search({e}, true, nullptr)) pk.uncovered.push_back(e);
  }
  for (int i = 0; i < state.parts(); ++i) {
    const auto& members = state.members(i);
    pk.parts.push_back(PackPart{funcs[i], std::vector<EdgeId>(members.begin(), members.end())});
  }
  verify_packing(pk);
  return pk;
}

void verify_packing(const Packing& pk) {
  std::vector<int> hits(pk.host.m(), 0);
  auto mark = [&](const std::vector<EdgeId>& ids) {
    for (EdgeId e : ids) {
      if (e < 0 || e >= pk.host.m()) throw InternalError("packing names an unknown edge");
      ++hits[e];
    }
  };
  for (const PackPart& part : pk.parts) mark(part.edges);
  mark(pk.uncovered);
  mark(pk.forbidden);
  for (EdgeId e = 0; e < pk.host.m(); ++e) {
    if (hits[e] != 1) {
      throw InternalError("packing does not partition the edges: edge " + std::to_string(e) +
                          " appears " + std::to_string(hits[e]) + " times");
    }
  }
  for (std::size_t i = 0; i < pk.parts.size(); ++i) {
    const SparseVerdict v = is_sparse_edges(pk.host, pk.parts[i].func, pk.parts[i].edges);
    if (!v.sparse) {
      throw InternalError("part " + std::to_string(i) + " is not sparse on " +
                          (v.witness.violation ? v.witness.violation->to_string() : "?"));
    }
  }
}

// ---- structure partition ---------------------------------------------------------

StructureCertificate structure_partition(const Packing& pk) {
  const MultiGraph& g = pk.host;
  std::vector<SetFunc> funcs;
  UnionState state = rebuild(pk, funcs);
  StructureCertificate cert;

  std::vector<bool> reached(g.m(), false);
  if (!pk.uncovered.empty()) state.search(pk.uncovered, false, &reached);
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (reached[e]) cert.closure.push_back(e);
  }

  if (pk.all_full()) {
    cert.partition = Partition(g.n(), {g.vertices()});
  } else {
    std::vector<Edge> closure_edges;
    for (EdgeId e : cert.closure) closure_edges.push_back(g.edge(e));
    cert.partition = Partition(g.n(), components(MultiGraph(g.n(), closure_edges)));
  }
  const Partition& p = cert.partition;

  if (!pk.parts.empty()) {
    const PackPart& first = pk.parts[0];
    for (VertexSet a : p.parts()) {
      const std::vector<EdgeId> local = inside(g, first.edges, a);
      const bool tight = static_cast<Count>(local.size()) == first.func.slack_bound(a);
      if (tight) continue;
      if (a.size() > 9 || !partition_connected_on(g, local, first.func, a)) {
        throw InternalError("structure partition: property (1) fails, F[" + a.to_string() +
                            "] is not partition-connected");
      }
    }
  }
  cert.first_part_connected = true;

  for (EdgeId e : pk.uncovered) {
    if (p.part_of(g.edge(e).u) != p.part_of(g.edge(e).v)) {
      throw InternalError("structure partition: property (2) fails at uncovered edge " +
                          std::to_string(e));
    }
  }
  cert.no_uncovered_crossing = true;

  for (int j = 1; j < state.parts(); ++j) {
    for (EdgeId e = 0; e < g.m(); ++e) {
      const int owner = state.owner(e);
      if (owner == j || owner == kForbidden) continue;
      if (owner != 0 && !reached[e]) continue;
      const Edge& edge = g.edge(e);
      const int at = p.part_of(edge.u);
      if (at != p.part_of(edge.v)) continue;
      const VertexSet a = p.parts()[at];
      const std::optional<VertexSet> q = state.oracle(j).minimal_tight(edge.u, edge.v);
      if (!q || !q->subset_of(a)) {
        throw InternalError("structure partition: property (3) fails for edge " +
                            std::to_string(e) + " in part " + std::to_string(j));
      }
      cert.rigid_sets.push_back({j, e, *q});
    }
  }
  cert.rigid_sets_inside = true;
  return cert;
}

// ---- decomposition -------------------------------------------------------------------

Decomposition decompose_p_rigid(const MultiGraph& g, const SetFunc& ell, Count p) {
  if (p < 1) throw InvalidArgument("p must be at least 1");
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& edge = g.edge(e);
    const Count lhs = ell.at(edge.u) + ell.at(edge.v);
    const Count rhs = ell.eval(VertexSet{edge.u, edge.v}) + 1;
    if (lhs != rhs) {
      throw InvalidArgument("adjacency clause fails at edge " + std::to_string(e) + " (" +
                            std::to_string(edge.u) + "," + std::to_string(edge.v) + "): " +
                            std::to_string(lhs) + " != " + std::to_string(rhs));
    }
  }
  const SetFunc scaled = derived_scaled(ell, p);
  const RankResult rank = rank_and_rigid(g, scaled);
  if (!rank.rigid) {
    throw InvalidArgument("graph is not " + scaled.describe() + "-rigid: rank " +
                          std::to_string(rank.rank) + " < " +
                          std::to_string(scaled.rigid_size(g.n())) + " (deficit " +
                          std::to_string(scaled.rigid_size(g.n()) - rank.rank) + ")");
  }
  const std::vector<EdgeId> tight = sorted_unique(rank.witness.tight);
  const MultiGraph sub = g.edge_subgraph(tight);
  const Packing pk = matroid_union_pack(sub, std::vector<SetFunc>(p, ell));
  Decomposition out;
  for (std::size_t i = 0; i < pk.parts.size(); ++i) {
    if (!pk.full(i)) {
      throw InternalError("decomposition part " + std::to_string(i) + " is not rigid");
    }
    out.parts.push_back(lift_ids(pk.parts[i].edges, tight));
    const RankResult check = rank_and_rigid(g.edge_subgraph(out.parts.back()), ell);
    if (!check.rigid) {
      throw InternalError("decomposition part " + std::to_string(i) + " fails re-verification");
    }
  }
  out.leftover = complement_edges(g, tight);
  return out;
}

// ---- partition-connected plus rigid --------------------------------------------------

namespace {

PartitionRigidResult run_with_extra(const MultiGraph& g, const std::optional<SetFunc>& extra,
                                    const SetFunc& l, const SetFunc& ell,
                                    const std::vector<EdgeId>& forbidden,
                                    std::vector<Count> bound) {
  std::vector<SetFunc> funcs;
  if (extra) funcs.push_back(*extra);
  funcs.push_back(l);
  funcs.push_back(ell);
  PartitionRigidResult out;
  out.l_part = extra ? 1 : 0;
  out.ell_part = out.l_part + 1;
  out.packing = matroid_union_pack(g, funcs, forbidden);
  out.degree_bound = std::move(bound);
  out.h = union_of(out.packing.parts[out.l_part].edges, out.packing.parts[out.ell_part].edges);
  if (!out.packing.all_full()) {
    out.deficiency = structure_partition(out.packing);
    return out;
  }
  if (!out.degree_bound.empty()) {
    const std::vector<Count> d = degrees_in(g, out.h);
    for (VertexId v = 0; v < g.n(); ++v) {
      if (d[v] > out.degree_bound[v]) {
        throw InternalError("degree bound fails at vertex " + std::to_string(v) + ": " +
                            std::to_string(d[v]) + " > " +
                            std::to_string(out.degree_bound[v]));
      }
    }
  }
  out.success = true;
  return out;
}

}  // namespace

PartitionRigidResult pack_partition_rigid(const MultiGraph& g, const SetFunc& l,
                                          const SetFunc& ell,
                                          const std::vector<EdgeId>& forbidden,
                                          const DegreeSpec& degree) {
  switch (degree.mode) {
    case DegreeMode::None:
      return run_with_extra(g, std::nullopt, l, ell, forbidden, {});
    case DegreeMode::Halved: {
      const SetFunc extra = derived_halved(g, l, ell, degree.ceil_vertex);
      std::vector<Count> bound(g.n());
      for (VertexId v = 0; v < g.n(); ++v) {
        const Count d = g.degree(v);
        const Count half = (degree.ceil_vertex && *degree.ceil_vertex == v) ? d / 2 : (d + 1) / 2;
        bound[v] = half + l.at(v) + ell.at(v);
      }
      return run_with_extra(g, extra, l, ell, forbidden, std::move(bound));
    }
    case DegreeMode::Rho: {
      const SetFunc extra =
          derived_rho(g, SetFunc::constant(0), l.plus(ell), degree.k_num, degree.k_den,
                      degree.rho);
      std::vector<Count> bound(g.n());
      for (VertexId v = 0; v < g.n(); ++v) {
        // ceil((d - 2 rho) / k) + rho + l + ell with k = k_num / k_den
        const Count num = (g.degree(v) - 2 * degree.rho[v]) * degree.k_den;
        bound[v] = ceil_div(num, degree.k_num) + degree.rho[v] + l.at(v) + ell.at(v);
      }
      return run_with_extra(g, extra, l, ell, forbidden, std::move(bound));
    }
  }
  throw InvalidArgument("unknown degree mode");
}

// ---- presets -----------------------------------------------------------------------

namespace {

DegreeSpec halved_spec() {
  DegreeSpec spec;
  spec.mode = DegreeMode::Halved;
  return spec;
}

void require_simple(const MultiGraph& g, const std::string& preset) {
  if (!g.is_simple()) {
    HypothesisReport report;
      report.tag = preset;
      report.holds = false;
    report.detail = "graph is not simple";
    throw HypothesisFailure(report);
  }
}

void require_weakly(const MultiGraph& g, Count k, Count c, const std::string& preset) {
  HypothesisReport report =
      check_weakly_connected(g, SetFunc::constant(k), SetFunc::constant(c));
  if (!report.holds) {
    report.tag = preset;
    report.detail = std::to_string(k) + "-weakly " + std::to_string(c) +
                    "-connected fails, " + report.detail;
    throw HypothesisFailure(report);
  }
}

void require_success(const PartitionRigidResult& base, const std::string& preset) {
  if (!base.success) {
    throw InternalError(preset + ": packing is deficient although the hypothesis holds");
  }
}

std::vector<std::vector<EdgeId>> split(const MultiGraph& g, const std::vector<EdgeId>& ids,
                                       const std::vector<SetFunc>& funcs,
                                       const std::string& what) {
  const Packing pk = matroid_union_pack(g.edge_subgraph(ids), funcs);
  std::vector<std::vector<EdgeId>> out;
  for (std::size_t i = 0; i < pk.parts.size(); ++i) {
    if (!pk.full(i)) {
      throw InternalError(what + ": part " + std::to_string(i) + " is not full");
    }
    out.push_back(lift_ids(pk.parts[i].edges, ids));
  }
  return out;
}

void check_degrees(const MultiGraph& g, const std::vector<EdgeId>& h,
                   const std::vector<Count>& bound, VertexSet where, PresetResult& out) {
  const std::vector<Count> d = degrees_in(g, h);
  for (VertexId v : where.members()) {
    if (d[v] > bound[v]) {
      throw InternalError(out.preset + ": degree bound fails at vertex " + std::to_string(v));
    }
  }
  out.checks.push_back("degree bound holds on " + std::to_string(where.size()) + " vertices");
}

void check_rigid(const MultiGraph& g, const std::vector<EdgeId>& ids, Count k,
                 PresetResult& out, const std::string& name) {
  const MultiGraph sub = g.edge_subgraph(ids);
  if (!rank_and_rigid(sub, SetFunc::lmn(k, 2 * k - 1)).rigid) {
    throw InternalError(out.preset + ": " + name + " is not " + std::to_string(k) + "-rigid");
  }
  out.checks.push_back(name + " is " + std::to_string(k) + "-rigid");
}

}  // namespace

PresetResult preset_thm10_1(const MultiGraph& g, Count k, Count p, Count m, bool force) {
  PresetResult out;
  out.preset = "thm10_1";
  if (k < 2 || p < 1 || m < 0) throw InvalidArgument("thm10_1 needs k >= 2, p >= 1, m >= 0");
  if (!force) {
    require_simple(g, out.preset);
    require_weakly(g, k, 4 * k * p - 2 * p + 2 * m, out.preset);
  }
  const SetFunc l = SetFunc::lmn(m, m);
  const SetFunc ell = SetFunc::lmn(p * k, p * (2 * k - 1));
  out.base = pack_partition_rigid(g, l, ell, {}, halved_spec());
  require_success(out.base, out.preset);
  const auto& l_edges = out.base.packing.parts[out.base.l_part].edges;
  const auto& ell_edges = out.base.packing.parts[out.base.ell_part].edges;
  if (m > 0) out.trees = split(g, l_edges, std::vector<SetFunc>(m, SetFunc::lmn(1, 1)), "trees");
  const Decomposition dec = decompose_p_rigid(g.edge_subgraph(ell_edges), SetFunc::lmn(k, 2 * k - 1), p);
  for (const auto& part : dec.parts) out.rigid.push_back(lift_ids(part, ell_edges));
  out.h = out.base.h;
  out.degree_bound = out.base.degree_bound;
  out.checks.push_back(std::to_string(m) + " spanning trees");
  for (std::size_t i = 0; i < out.rigid.size(); ++i) {
    check_rigid(g, out.rigid[i], k, out, "G_" + std::to_string(i + 1));
  }
  check_degrees(g, out.h, out.degree_bound, g.vertices(), out);
  return out;
}

PresetResult preset_thm10_2(const MultiGraph& g, Count k, Count p, Count m, bool force) {
  PresetResult out;
  out.preset = "thm10_2";
  if (k < 2 || p < 1 || m < 0) throw InvalidArgument("thm10_2 needs k >= 2, p >= 1, m >= 0");
  if (!force) {
    require_simple(g, out.preset);
    require_weakly(g, k, 4 * k * p - 2 * p + 2 * m, out.preset);
  }
  const SetFunc l = SetFunc::lmn(k * p - p + m, m);
  const SetFunc ell = SetFunc::lmn(p * k, p * (2 * k - 1));
  out.base = pack_partition_rigid(g, l, ell, {}, halved_spec());
  require_success(out.base, out.preset);
  const auto& l_edges = out.base.packing.parts[out.base.l_part].edges;
  const auto& ell_edges = out.base.packing.parts[out.base.ell_part].edges;

  std::vector<SetFunc> pieces(p, SetFunc::lmn(k - 1, 0));
  for (Count i = 0; i < m; ++i) pieces.push_back(SetFunc::lmn(1, 1));
  const auto split_parts = split(g, l_edges, pieces, "connectors");
  out.connectors.assign(split_parts.begin(), split_parts.begin() + p);
  out.trees.assign(split_parts.begin() + p, split_parts.end());
  const Decomposition dec = decompose_p_rigid(g.edge_subgraph(ell_edges), SetFunc::lmn(k, 2 * k - 1), p);
  for (const auto& part : dec.parts) out.rigid.push_back(lift_ids(part, ell_edges));

  out.h = out.base.h;
  out.degree_bound = out.base.degree_bound;
  for (Count i = 0; i < p; ++i) {
    const std::string name = "H_" + std::to_string(i + 1);
    check_rigid(g, out.rigid[i], k, out, "G_" + std::to_string(i + 1));
    out.h_parts.push_back(union_of(out.rigid[i], out.connectors[i]));
    const MultiGraph hi = g.edge_subgraph(out.h_parts.back());
    if (edge_connectivity(hi) < 2 * k - 1) {
      throw InternalError(out.preset + ": " + name + " is not (2k-1)-edge-connected");
    }
    out.checks.push_back(name + " is " + std::to_string(2 * k - 1) + "-edge-connected");
    for (VertexId v = 0; v < g.n(); ++v) {
      if (edge_connectivity(hi, VertexSet::single(v)) < k - 1) {
        throw InternalError(out.preset + ": " + name + " - " + std::to_string(v) +
                            " is not (k-1)-edge-connected");
      }
    }
    out.checks.push_back(name + " - v is " + std::to_string(k - 1) +
                         "-edge-connected for every v");
  }
  check_degrees(g, out.h, out.degree_bound, g.vertices(), out);
  return out;
}

PresetResult preset_cor82(const MultiGraph& g, Count k_num, Count k_den, VertexSet side,
                          bool force) {
  PresetResult out;
  out.preset = "cor82";
  if (k_num <= 0 || k_den <= 0 || k_num < k_den) throw InvalidArgument("cor82 needs k >= 1");
  for (const Edge& e : g.edges()) {
    if (!force && side.contains(e.u) == side.contains(e.v)) {
      HypothesisReport report;
      report.tag = out.preset;
      report.holds = false;
      report.detail = "graph is not bipartite with the given side";
      throw HypothesisFailure(report);
    }
  }
  if (!force) require_weakly(g, 1, ceil_div(6 * k_num, k_den), out.preset);

  // rho = 0 on the side, d elsewhere; the extra part is clamped at zero.
  std::vector<Count> singles(g.n(), 0);
  std::vector<Count> bound(g.n(), 0);
  const SetFunc ell = SetFunc::lmn(2, 3);
  for (VertexId v = 0; v < g.n(); ++v) {
    const Count d = g.degree(v);
    if (side.contains(v)) {
      const Count keep = ceil_div(d * k_den, k_num);
      singles[v] = std::max<Count>(0, d - keep - 2);
      bound[v] = keep + 2;
    } else {
      bound[v] = d;
    }
  }
  out.base = run_with_extra(g, SetFunc::vertex_weighted(singles, 0), SetFunc::constant(0), ell,
                            {}, bound);
  require_success(out.base, out.preset);
  out.h = out.base.h;
  out.rigid.push_back(out.base.packing.parts[out.base.ell_part].edges);
  out.degree_bound = bound;
  check_rigid(g, out.h, 2, out, "H");
  if (vertex_connectivity(g.edge_subgraph(out.h)) < 2) {
    throw InternalError(out.preset + ": H is not 2-connected");
  }
  out.checks.push_back("H is 2-connected");
  check_degrees(g, out.h, bound, side, out);
  return out;
}

}  // namespace rigidpack
