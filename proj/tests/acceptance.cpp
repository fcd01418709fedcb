// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rigidpack/error.hpp"
#include "rigidpack/generators.hpp"
#include "rigidpack/hypothesis.hpp"
#include "rigidpack/oracle.hpp"
#include "rigidpack/orientation.hpp"
#include "rigidpack/packing.hpp"
#include "rigidpack/sparsity.hpp"

using namespace rigidpack;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

/// k-rigid graphs built by the other criteria, re-checked by the necessary-condition criterion.
struct Witness {
  MultiGraph graph;
  Count k;
  std::string origin;
};
std::vector<Witness> g_witnesses;

std::vector<MultiGraph> census_upto(int n_max) {
  std::vector<MultiGraph> out;
  for (int n = 2; n <= n_max; ++n) {
    std::vector<MultiGraph> level = census(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Count> degrees(const MultiGraph& g, const std::vector<EdgeId>& ids) {
  std::vector<Count> d(g.n(), 0);
  for (EdgeId e : ids) {
    ++d[g.edge(e).u];
    ++d[g.edge(e).v];
  }
  return d;
}

bool disjoint(const std::vector<std::vector<EdgeId>>& lists, int m) {
  std::vector<int> seen(m, 0);
  for (const auto& list : lists) {
    for (EdgeId e : list) {
      if (seen[e]++) return false;
    }
  }
  return true;
}

/// Minimum boundary over all nonempty proper subsets of the vertices outside `removed`.
Count cut_min(const MultiGraph& g, VertexSet removed = {}) {
  std::vector<VertexId> live;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!removed.contains(v)) live.push_back(v);
  }
  Count best = kUnbounded;
  for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << live.size()); ++s) {
    VertexSet a;
    for (std::size_t i = 0; i < live.size(); ++i) {
      if ((s >> i) & 1U) a = a.with(live[i]);
    }
    best = std::min(best, boundary_minus(g, a, removed));
  }
  return best;
}

/// Minimum number of arcs entering a nonempty proper subset of the live vertices.
Count arc_min(const Orientation& d, VertexSet removed = {}) {
  const MultiGraph& g = d.host();
  std::vector<VertexId> live;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!removed.contains(v)) live.push_back(v);
  }
  Count best = kUnbounded;
  for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << live.size()); ++s) {
    VertexSet a;
    for (std::size_t i = 0; i < live.size(); ++i) {
      if ((s >> i) & 1U) a = a.with(live[i]);
    }
    Count in = 0;
    for (EdgeId e = 0; e < g.m(); ++e) {
      VertexId t = d.tail(e);
      VertexId h = d.head(e);
      in += a.contains(h) && !a.contains(t) && !removed.contains(t);
    }
    best = std::min(best, in);
  }
  return best;
}

bool tnw_condition(const MultiGraph& g, Count trees) {
  bool ok = true;
  for_each_partition(g.n(), [&](const std::vector<VertexSet>& parts) {
    if (partition_cross(g, Partition(g.n(), parts)) < trees * (static_cast<Count>(parts.size()) - 1)) {
      ok = false;
    }
    return ok;
  });
  return ok;
}

// ---- criteria ----------------------------------------------------------------------------

Verdict oracle_equivalence() {
  const std::vector<std::pair<Count, Count>> params = {{1, 1}, {2, 2}, {2, 3}, {3, 5}};
  long checks = 0;
  long bad = 0;
  auto check = [&](const MultiGraph& g) {
    for (auto [k, l] : params) {
      SetFunc f = SetFunc::lmn(k, l);
      ++checks;
      if (is_sparse(g, f).sparse != bf_sparse(g, f).holds) ++bad;
    }
  };
  for (int n = 1; n <= 6; ++n) {
    for_each_census_graph(n, {}, [&](const MultiGraph& g) {
      check(g);
      return true;
    });
  }
  std::mt19937_64 rng(20240101);
  for (int i = 0; i < 500; ++i) {
    int n = std::uniform_int_distribution<int>(2, 6)(rng);
    int m = std::uniform_int_distribution<int>(0, 12)(rng);
    check(random_multigraph(n, m, rng()));
  }
  return {bad == 0, std::to_string(checks) + " comparisons, " + std::to_string(bad) +
                        " disagreements"};
}

Verdict matroid_union_optimality() {
  const std::vector<SetFunc> pool = {SetFunc::lmn(1, 1), SetFunc::lmn(1, 0), SetFunc::lmn(2, 3),
                                     SetFunc::lmn(2, 2), SetFunc::lmn(2, 1)};
  std::mt19937_64 rng(7);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    int m = std::uniform_int_distribution<int>(1, 8)(rng);
    int parts = std::uniform_int_distribution<int>(1, 3)(rng);
    MultiGraph g = random_multigraph(n, m, rng());
    std::vector<SetFunc> funcs;
    for (int j = 0; j < parts; ++j) {
      funcs.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
    }
    Packing pk = matroid_union_pack(g, funcs);
    verify_packing(pk);
    if (pk.covered() != edmonds_bound(g, funcs)) ++bad;
  }
  return {bad == 0, "100 instances, " + std::to_string(bad) + " disagreements"};
}

Verdict tree_packing() {
  std::vector<MultiGraph> graphs;
  for (int n = 2; n <= 6; ++n) {
    for_each_census_graph(n, {}, [&](const MultiGraph& g) {
      if (edge_connectivity(g) >= 4) graphs.push_back(g);
      return true;
    });
  }
  std::mt19937_64 rng(11);
  for (int i = 0; graphs.size() < 400 && i < 4000; ++i) {
    MultiGraph g = random_multigraph(7, std::uniform_int_distribution<int>(14, 24)(rng), rng());
    if (edge_connectivity(g) >= 4) graphs.push_back(g);
  }
  int bad = 0;
  const SetFunc tree = SetFunc::lmn(1, 1);
  for (const MultiGraph& g : graphs) {
    Packing pk = matroid_union_pack(g, {tree, tree});
    bool trees = pk.all_full() && is_connected(g.edge_subgraph(pk.parts[0].edges)) &&
                 is_connected(g.edge_subgraph(pk.parts[1].edges));
    if (!trees || !tnw_condition(g, 2)) ++bad;
  }
  // The partition condition also decides fullness on graphs below the threshold.
  int mismatched = 0;
  for (int i = 0; i < 300; ++i) {
    MultiGraph g = random_multigraph(std::uniform_int_distribution<int>(2, 7)(rng),
                                     std::uniform_int_distribution<int>(1, 14)(rng), rng());
    if (matroid_union_pack(g, {tree, tree}).all_full() != tnw_condition(g, 2)) ++mismatched;
  }
  return {bad == 0 && mismatched == 0 && graphs.size() >= 100,
          std::to_string(graphs.size()) + " 4-edge-connected graphs, " + std::to_string(bad) +
              " failures, " + std::to_string(mismatched) + " partition mismatches on 300 others"};
}

Verdict rigid_decomposition() {
  const SetFunc tree = SetFunc::lmn(1, 1);
  const SetFunc double_tree = SetFunc::lmn(2, 2);
  long graphs = 0;
  long rigid = 0;
  int bad = 0;
  for (const MultiGraph& g : census_upto(6)) {
    ++graphs;
    bool bf = bf_rigid(g, double_tree).holds;
    bool ok = true;
    try {
      Decomposition d = decompose_p_rigid(g, tree, 2);
      for (const auto& part : d.parts) {
        ok = ok && bf_rigid(g.edge_subgraph(part), tree).holds;
      }
      ok = ok && d.parts.size() == 2 && disjoint(d.parts, g.m());
    } catch (const InvalidArgument&) {
      ok = false;
    }
    rigid += bf;
    if (bf != ok) ++bad;
  }
  return {bad == 0, std::to_string(graphs) + " census graphs, " + std::to_string(rigid) +
                        " rigid, " + std::to_string(bad) + " one-sided failures"};
}

Verdict rigid_orientation_round_trip() {
  struct Family {
    std::string name;
    std::function<SetFunc(int)> make;
  };
  auto as_table = [](const SetFunc& f, int n) {
    std::vector<Count> values(std::size_t{1} << n);
    for (std::uint64_t s = 0; s < values.size(); ++s) values[s] = f(VertexSet(s));
    return SetFunc::table(n, values);
  };
  const std::vector<Family> families = {
      {"singletons 1, sets 1, V 0",
       [&](int n) { return as_table(SetFunc::constant(1).with_override(VertexSet::full(n), 0), n); }},
      {"lmn 2,2 with V 0",
       [&](int n) { return as_table(SetFunc::lmn(2, 2).with_override(VertexSet::full(n), 0), n); }},
      {"lmn 2,3 with V 0",
       [&](int n) { return as_table(SetFunc::lmn(2, 3).with_override(VertexSet::full(n), 0), n); }},
      {"lmn 1,0 with V 0",
       [&](int n) { return as_table(SetFunc::lmn(1, 0).with_override(VertexSet::full(n), 0), n); }},
  };
  long minimal = 0;
  long oriented = 0;
  int bad = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const Family& fam : families) {
      SetFunc ell = fam.make(n);
      Count size = 0;
      std::vector<Count> targets(n);
      for (VertexId v = 0; v < n; ++v) size += targets[v] = ell.at(v);
      for_each_census_graph(n, {}, [&](const MultiGraph& g) {
        if (g.m() != size) return true;
        bool min_rigid = bf_sparse(g, ell).holds;
        EquivResult to = rigid_to_orientation(g, ell);
        if (to.holds != min_rigid) ++bad;
        if (min_rigid) {
          ++minimal;
          bool ok = to.orientation.has_value();
          for (VertexId v = 0; ok && v < n; ++v) ok = to.orientation->in_degree(v) == ell.at(v);
          ok = ok && verify_arc(*to.orientation, ell).holds &&
               orientation_to_rigid(*to.orientation, ell).holds;
          if (!ok) ++bad;
        }
        // Reverse direction: an arc-connected orientation with the right in-degrees certifies.
        HakimiResult h = hakimi_orient(g, targets);
        if (h.feasible && verify_arc(*h.orientation, ell).holds) {
          ++oriented;
          if (!orientation_to_rigid(*h.orientation, ell).holds || !min_rigid) ++bad;
        }
        return true;
      });
    }
  }
  return {bad == 0 && minimal > 0, std::to_string(minimal) + " minimally rigid graphs, " +
                                       std::to_string(oriented) + " arc-connected orientations, " +
                                       std::to_string(bad) + " failures"};
}

Verdict necessary_conditions() {
  for (Count k : {2, 3}) {
    SetFunc f = SetFunc::lmn(k, 2 * k - 1);
    for (const MultiGraph& g : census_upto(6)) {
      if (g.n() < 3) continue;
      RankResult r = rank_and_rigid(g, f);
      if (r.rigid) {
        g_witnesses.push_back({g.edge_subgraph(r.witness.tight), k, "census tight witness"});
        g_witnesses.push_back({g, k, "census graph"});
      }
    }
  }
  int bad = 0;
  for (const Witness& w : g_witnesses) {
    if (!rank_and_rigid(w.graph, SetFunc::lmn(w.k, 2 * w.k - 1)).rigid) {
      ++bad;
      continue;
    }
    HypothesisReport h = check_cor32(w.graph, w.k);
    bool direct = cut_min(w.graph) >= w.k;
    for (VertexId v = 0; direct && v < w.graph.n(); ++v) {
      direct = cut_min(w.graph, VertexSet::single(v)) >= w.k - 1 || w.graph.n() <= 2;
    }
    if (!h.holds || !direct) ++bad;
  }
  return {bad == 0, std::to_string(g_witnesses.size()) + " k-rigid witnesses, " +
                        std::to_string(bad) + " failures"};
}

Verdict thm10_1_instance() {
  MultiGraph g = complete_graph(9);
  PresetResult r = preset_thm10_1(g, 2, 1, 1);
  bool ok = r.trees.size() == 1 && r.rigid.size() == 1;
  ok = ok && r.trees[0].size() == 8 && is_connected(g.edge_subgraph(r.trees[0]));
  ok = ok && bf_rigid(g.edge_subgraph(r.rigid[0]), SetFunc::lmn(2, 3)).holds;
  ok = ok && disjoint({r.trees[0], r.rigid[0]}, g.m());
  std::vector<Count> d = degrees(g, r.h);
  Count worst = *std::max_element(d.begin(), d.end());
  ok = ok && worst <= 7;
  g_witnesses.push_back({g.edge_subgraph(r.rigid[0]), 2, "K9 preset 1"});
  return {ok, "max d_H = " + std::to_string(worst) + " (bound 7)"};
}

Verdict thm10_2_instance() {
  MultiGraph g = complete_graph(9);
  PresetResult r = preset_thm10_2(g, 2, 1, 1);
  bool ok = r.h_parts.size() == 1 && r.trees.size() == 1;
  MultiGraph h1 = g.edge_subgraph(r.h_parts.at(0));
  Count lambda = cut_min(h1);
  Count lambda_v = kUnbounded;
  for (VertexId v = 0; v < 9; ++v) lambda_v = std::min(lambda_v, cut_min(h1, VertexSet::single(v)));
  ok = ok && lambda >= 3 && lambda_v >= 1;
  ok = ok && bf_rigid(g.edge_subgraph(r.rigid.at(0)), SetFunc::lmn(2, 3)).holds;
  ok = ok && disjoint({r.trees[0], r.h_parts[0]}, g.m());
  std::vector<Count> d = degrees(g, r.h);
  Count worst = *std::max_element(d.begin(), d.end());
  ok = ok && worst <= 8;
  g_witnesses.push_back({g.edge_subgraph(r.rigid[0]), 2, "K9 preset 2"});
  return {ok, "H_1 edge connectivity " + std::to_string(lambda) + ", min over v of H_1 - v " +
                  std::to_string(lambda_v) + ", max d_H = " + std::to_string(worst) + " (bound 8)"};
}

Verdict robust_instance() {
  MultiGraph g = complete_graph(13);
  RobustResult r = robust_arc_strong(g, 1);
  if (!r.verified) return {false, "retry budget exhausted: " + r.detail};
  bool smooth = is_smooth(r.orientation);
  Count strength = arc_min(r.orientation);
  Count robust = kUnbounded;
  for (VertexId v = 0; v < 13; ++v) {
    robust = std::min(robust, arc_min(r.orientation, VertexSet::single(v)));
  }
  return {smooth && strength >= 3 && robust >= 1,
          std::string(smooth ? "smooth" : "not smooth") + ", arc strength " +
              std::to_string(strength) + ", min over v of D - v " + std::to_string(robust) +
              ", attempts " + std::to_string(r.attempts)};
}

Verdict exchange_property() {
  const std::vector<std::pair<Count, Count>> params = {{1, 1}, {2, 2}, {2, 3}, {3, 5}, {1, 0}};
  std::vector<std::vector<MultiGraph>> sparse(params.size());
  for (int n = 3; n <= 6; ++n) {
    for_each_census_graph(n, {}, [&](const MultiGraph& g) {
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (g.m() > 0 && is_sparse(g, SetFunc::lmn(params[i].first, params[i].second)).sparse) {
          sparse[i].push_back(g);
        }
      }
      return true;
    });
  }
  std::mt19937_64 rng(1000);
  int done = 0;
  int free_pairs = 0;
  int bad = 0;
  while (done < 1000) {
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, params.size() - 1)(rng);
    SetFunc f = SetFunc::lmn(params[i].first, params[i].second);
    const MultiGraph& g = sparse[i][std::uniform_int_distribution<std::size_t>(0, sparse[i].size() - 1)(rng)];
    VertexId x = std::uniform_int_distribution<VertexId>(0, g.n() - 1)(rng);
    VertexId y = std::uniform_int_distribution<VertexId>(0, g.n() - 2)(rng);
    if (y >= x) ++y;
    MinimalRigid q = minimal_rigid_between(g, f, x, y);
    if (q.free_pair) {
      ++free_pairs;
      continue;
    }
    std::vector<EdgeId> inside;
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (g.edge(e).inside(q.q)) inside.push_back(e);
    }
    EdgeId e = inside[std::uniform_int_distribution<std::size_t>(0, inside.size() - 1)(rng)];
    MultiGraph swapped = exchange(g, f, x, y, e);
    if (!bf_sparse(swapped, f).holds) ++bad;
    ++done;
  }
  return {bad == 0, "1000 exchanges (" + std::to_string(free_pairs) + " free pairs skipped), " +
                        std::to_string(bad) + " failures"};
}

Verdict hakimi_correctness() {
  std::mt19937_64 rng(50);
  long runs = 0;
  long infeasible = 0;
  int bad = 0;
  for (const MultiGraph& g : census_upto(6)) {
    const int n = g.n();
    std::vector<Count> counts = all_induced_counts(g);
    for (int t = 0; t < 50; ++t) {
      std::vector<Count> targets(n, 0);
      // Alternate uniform spreads with spreads confined to a random subset.
      std::uint64_t allowed = t % 2 ? (rng() & ((std::uint64_t{1} << n) - 1)) : 0;
      if (allowed == 0) allowed = (std::uint64_t{1} << n) - 1;
      std::vector<VertexId> pool;
      for (VertexId v = 0; v < n; ++v) {
        if ((allowed >> v) & 1U) pool.push_back(v);
      }
      for (int e = 0; e < g.m(); ++e) {
        ++targets[pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]];
      }
      bool condition = true;
      for (std::uint64_t s = 1; condition && s < counts.size(); ++s) {
        Count sum = 0;
        for (VertexId v = 0; v < n; ++v) {
          if ((s >> v) & 1U) sum += targets[v];
        }
        condition = counts[s] <= sum;
      }
      HakimiResult h = hakimi_orient(g, targets);
      ++runs;
      if (h.feasible != condition) {
        ++bad;
        continue;
      }
      if (h.feasible) {
        for (VertexId v = 0; v < n; ++v) {
          if (h.orientation->in_degree(v) != targets[v]) {
            ++bad;
            break;
          }
        }
      } else {
        ++infeasible;
        Count sum = 0;
        for (VertexId v : h.witness->members()) sum += targets[v];
        if (induced_count(g, *h.witness) <= sum) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(runs) + " target vectors (" + std::to_string(infeasible) +
                        " infeasible), " + std::to_string(bad) + " failures"};
}

Verdict cor82_instance() {
  MultiGraph g = complete_bipartite(6, 6);
  VertexSet side{0, 1, 2, 3, 4, 5};
  PresetResult r = preset_cor82(g, 1, 1, side);
  MultiGraph h = g.edge_subgraph(r.h);
  // Exhaustive subset check of the tight witness; H has too many edges for the rank oracle.
  OracleBudget budget;
  budget.subset_n = 12;
  std::vector<EdgeId> tight = rank_and_rigid(h, SetFunc::lmn(2, 3)).witness.tight;
  bool rigid = static_cast<Count>(tight.size()) == 2 * h.n() - 3 &&
               bf_sparse(h.edge_subgraph(tight), SetFunc::lmn(2, 3), budget).holds;
  bool connected = is_connected(h);
  for (VertexId v = 0; connected && v < h.n(); ++v) {
    connected = is_connected(h, VertexSet::single(v));
  }
  std::vector<Count> d = degrees(g, r.h);
  Count worst = 0;
  for (VertexId v : side.members()) worst = std::max(worst, d[v]);
  g_witnesses.push_back({h, 2, "K6,6 preset"});
  return {rigid && connected && worst <= 8,
          std::string(rigid ? "2-rigid" : "not 2-rigid") + ", " +
              (connected ? "2-connected" : "not 2-connected") + ", max d_H on A = " +
              std::to_string(worst) + " (bound 8)"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  ///< 0 for no limit
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "sparsity oracle equivalence", 60, oracle_equivalence},
      {2, "matroid union optimality", 0, matroid_union_optimality},
      {3, "two spanning trees in 4-edge-connected graphs", 0, tree_packing},
      {4, "double-tree rigidity equals two rigid parts", 0, rigid_decomposition},
      {5, "rigidity and orientation round trip", 0, rigid_orientation_round_trip},
      {7, "K9 tree plus 2-rigid part", 10, thm10_1_instance},
      {8, "K9 tree plus 3-edge-connected 2-rigid part", 30, thm10_2_instance},
      {9, "K13 smooth robust 3-arc-strong orientation", 120, robust_instance},
      {10, "exchange keeps sparsity", 0, exchange_property},
      {11, "in-degree orientation correctness", 0, hakimi_correctness},
      {12, "K6,6 2-rigid 2-connected bounded subgraph", 30, cor82_instance},
      {6, "necessary conditions on k-rigid witnesses", 0, necessary_conditions},
  };
  int failures = 0;
  std::vector<std::string> lines(13);
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      v.pass = false;
      v.detail += ", over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    failures += !v.pass;
    char buf[64];
    std::snprintf(buf, sizeof buf, " [%.2f s]", secs);
    lines[c.id] = std::string(v.pass ? "PASS" : "FAIL") + " " + std::to_string(c.id) + " " +
                  c.name + ": " + v.detail + buf;
  }
  for (int id = 1; id <= 12; ++id) std::printf("%s\n", lines[id].c_str());
  std::printf("%d of 12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
