#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "rigidpack/error.hpp"
#include "rigidpack/generators.hpp"
#include "rigidpack/hypothesis.hpp"
#include "rigidpack/oracle.hpp"
#include "rigidpack/orientation.hpp"
#include "rigidpack/packing.hpp"
#include "rigidpack/sparsity.hpp"

namespace rigidpack::cli {

namespace {

struct Options {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string budget;
  bool force = false;
  std::string format = "structured";

  std::string graph;
  std::string func;
  std::vector<std::string> funcs;
  std::string l = "const:0";
  std::string ell;
  std::string forbidden;
  std::string preset;
  std::string mode;
  std::string check;
  std::string targets;
  std::string r1;
  std::string r2;
  std::string rho;
  std::string phi;
  std::string side;
  std::string offsets;
  std::string report;
  std::string out;
  std::string family;
  std::string name;
  std::string k = "2";
  Count p = 1;
  Count m = 1;
  Count r = 0;
  Count excluded = 0;
  int n = 0;
  int a = 0;
  int b = 0;
  int edges = 0;
  int multiplicity = 2;
  int retries = 64;
  int census_n = 0;
  bool connected = false;
  bool shuffle = false;
  std::optional<VertexId> u;
};

struct Outcome {
  bool verdict = false;
  std::string status;
  Json input = Json::object();
  Json certificates = Json::object();
};

Count ceil_div(Count a, Count b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  std::vector<Count> num = parse_count_list(text.substr(0, slash));
  Count den = 1;
  if (slash != std::string::npos) den = parse_count_list(text.substr(slash + 1)).at(0);
  if (num.size() != 1 || den == 0) throw InvalidArgument("bad rational '" + text + "'");
  return Rational(num[0], den);
}

std::string rational_text(Rational x) {
  return x.denominator() == 1 ? std::to_string(x.numerator())
                              : std::to_string(x.numerator()) + "/" +
                                    std::to_string(x.denominator());
}

OracleBudget budget_of(const Options& o) {
  return o.budget.empty() ? OracleBudget::from_env() : OracleBudget::parse(o.budget);
}

SetFunc func_of(const std::string& text, int n, const char* what) {
  if (text.empty()) throw InvalidArgument(std::string("missing ") + what);
  return parse_set_func(text, n);
}

std::vector<Count> per_vertex(const std::string& text, int n, const char* what,
                              Count fill = 0) {
  if (text.empty()) return std::vector<Count>(n, fill);
  std::vector<Count> xs = parse_count_list(text);
  if (static_cast<int>(xs.size()) != n) {
    throw InvalidArgument(std::string(what) + " must list " + std::to_string(n) + " values");
  }
  return xs;
}

VertexSet set_of_list(const std::string& text, int n) {
  VertexSet out;
  for (Count v : parse_count_list(text)) {
    if (v < 0 || v >= n) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    out = out.with(static_cast<VertexId>(v));
  }
  return out;
}

Json pair_json(const std::pair<VertexSet, VertexSet>& p) {
  return Json{{"a", set_to_json(p.first)}, {"b", set_to_json(p.second)}};
}

Json hypothesis_json(const HypothesisReport& h) {
  Json out;
  out["tag"] = h.tag;
  out["holds"] = h.holds;
  if (h.pair) out["pair"] = pair_json(*h.pair);
  if (h.set) out["set"] = set_to_json(*h.set);
  if (h.vertex) out["vertex"] = *h.vertex;
  if (h.lambda) out["lambda"] = *h.lambda;
  if (!h.detail.empty()) out["detail"] = h.detail;
  return out;
}

Json bf_json(const BfVerdict& v) {
  Json out;
  out["holds"] = v.holds;
  if (v.set) out["set"] = set_to_json(*v.set);
  if (v.pair) out["pair"] = pair_json(*v.pair);
  if (v.partition) out["partition"] = sets_to_json(*v.partition);
  if (!v.edges_a.empty()) out["edges_a"] = v.edges_a;
  if (!v.edges_b.empty()) out["edges_b"] = v.edges_b;
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

Json structure_json(const StructureCertificate& s) {
  Json out;
  out["partition"] = sets_to_json(s.partition.parts());
  out["closure"] = s.closure;
  out["first_part_connected"] = s.first_part_connected;
  out["no_uncovered_crossing"] = s.no_uncovered_crossing;
  out["rigid_sets_inside"] = s.rigid_sets_inside;
  Json sets = Json::array();
  for (const auto& rs : s.rigid_sets) {
    sets.push_back({{"part", rs.part}, {"edge", rs.edge}, {"set", set_to_json(rs.set)}});
  }
  out["rigid_sets"] = std::move(sets);
  return out;
}

Json packing_json(const Packing& pk) {
  Json parts = Json::array();
  for (std::size_t i = 0; i < pk.parts.size(); ++i) {
    parts.push_back({{"func", pk.parts[i].func.describe()},
                     {"edges", pk.parts[i].edges},
                     {"full", pk.full(i)}});
  }
  return Json{{"parts", parts},
              {"uncovered", pk.uncovered},
              {"forbidden", pk.forbidden},
              {"covered", pk.covered()}};
}

std::vector<EdgeId> ids_of(const Json& doc, const MultiGraph& g) { return edges_from_json(doc, g.m()); }

bool distinct_ids(const std::vector<std::vector<EdgeId>>& lists) {
  std::set<EdgeId> seen;
  for (const auto& list : lists) {
    for (EdgeId e : list) {
      if (!seen.insert(e).second) return false;
    }
  }
  return true;
}

bool edges_rigid(const MultiGraph& g, const std::vector<EdgeId>& ids, const SetFunc& f) {
  return rank_and_rigid(g.edge_subgraph(ids), f).rigid;
}

bool spanning_tree(const MultiGraph& g, const std::vector<EdgeId>& ids) {
  return static_cast<int>(ids.size()) == g.n() - 1 && is_connected(g.edge_subgraph(ids));
}

std::vector<Count> degrees_on(const MultiGraph& g, const std::vector<EdgeId>& ids) {
  std::vector<Count> deg(g.n(), 0);
  for (EdgeId e : ids) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return deg;
}

// ---- commands ----------------------------------------------------------------------

Outcome cmd_sparse(const GraphFile& gf, const Options& o) {
  const MultiGraph& g = gf.graph;
  SetFunc f = func_of(o.func, g.n(), "--func");
  Outcome out;
  out.input["func"] = f.describe();
  SparseVerdict v = is_sparse(g, f);
  out.verdict = v.sparse;
  out.status = v.sparse ? "true" : "false";
  if (v.witness.violation) {
    VertexSet a = *v.witness.violation;
    out.certificates["violation"] = set_to_json(a);
    out.certificates["induced"] = induced_count(g, a);
    out.certificates["bound"] = f.slack_bound(a);
  }
  return out;
}

Outcome cmd_rigid(const GraphFile& gf, const Options& o) {
  const MultiGraph& g = gf.graph;
  SetFunc f = func_of(o.func, g.n(), "--func");
  Outcome out;
  out.input["func"] = f.describe();
  RankResult r = rank_and_rigid(g, f);
  out.verdict = r.rigid;
  out.status = r.rigid ? "true" : "false";
  out.certificates["rank"] = r.rank;
  out.certificates["rigid_size"] = f.rigid_size(g.n());
  out.certificates["witness"] = r.witness.tight;
  return out;
}

Outcome cmd_components(const GraphFile& gf, const Options& o) {
  const MultiGraph& g = gf.graph;
  SetFunc f = func_of(o.func, g.n(), "--func");
  Outcome out;
  out.input["func"] = f.describe();
  RankResult r = rank_and_rigid(g, f);
  std::vector<VertexSet> comps = rigid_components(g.edge_subgraph(r.witness.tight), f);
  out.verdict = true;
  out.status = "true";
  out.certificates["basis"] = r.witness.tight;
  out.certificates["components"] = sets_to_json(comps);
  return out;
}

Json preset_json(const PresetResult& p) {
  Json out;
  out["trees"] = p.trees;
  out["rigid"] = p.rigid;
  if (!p.connectors.empty()) out["connectors"] = p.connectors;
  if (!p.h_parts.empty()) out["h_parts"] = p.h_parts;
  out["h"] = p.h;
  out["degree_bound"] = p.degree_bound;
  out["h_degree"] = degrees_on(p.base.packing.host, p.h);
  out["checks"] = p.checks;
  return out;
}

Outcome cmd_pack(const GraphFile& gf, const Options& o) {
  const MultiGraph& g = gf.graph;
  Outcome out;
  if (!o.preset.empty()) {
    Rational k = parse_rational(o.k);
    out.input["preset"] = o.preset;
    out.input["k"] = rational_text(k);
    PresetResult p;
    if (o.preset == "thm10_1" || o.preset == "thm10_2") {
      if (k.denominator() != 1) throw InvalidArgument("k must be an integer for " + o.preset);
      out.input["p"] = o.p;
      out.input["m"] = o.m;
      p = o.preset == "thm10_1" ? preset_thm10_1(g, k.numerator(), o.p, o.m, o.force)
                                : preset_thm10_2(g, k.numerator(), o.p, o.m, o.force);
    } else if (o.preset == "cor82") {
      VertexSet side = set_of_list(o.side, g.n());
      out.input["side"] = set_to_json(side);
      p = preset_cor82(g, k.numerator(), k.denominator(), side, o.force);
    } else {
      throw InvalidArgument("unknown preset '" + o.preset + "'");
    }
    out.verdict = true;
    out.status = "success";
    out.certificates = preset_json(p);
    return out;
  }
  if (o.funcs.empty()) throw InvalidArgument("pack needs --funcs or --preset");
  std::vector<SetFunc> funcs;
  Json names = Json::array();
  for (const std::string& text : o.funcs) {
    funcs.push_back(parse_set_func(text, g.n()));
    names.push_back(funcs.back().describe());
  }
  std::vector<EdgeId> forbidden;
  for (Count e : parse_count_list(o.forbidden)) forbidden.push_back(static_cast<EdgeId>(e));
  out.input["funcs"] = names;
  out.input["forbidden"] = forbidden;
  Packing pk = matroid_union_pack(g, funcs, forbidden);
  out.certificates = packing_json(pk);
  out.verdict = pk.all_full();
  out.status = out.verdict ? "success" : "deficient";
  if (!out.verdict) out.certificates["structure"] = structure_json(structure_partition(pk));
  return out;
}

Outcome cmd_decompose(const GraphFile& gf, const Options& o) {
  const MultiGraph& g = gf.graph;
  SetFunc ell = func_of(o.func, g.n(), "--func");
  Outcome out;
  out.input["func"] = ell.describe();
  out.input["p"] = o.p;
  SetFunc scaled = derived_scaled(ell, o.p);
  RankResult r = rank_and_rigid(g, scaled);
  out.certificates["rank"] = r.rank;
  out.certificates["rigid_size"] = scaled.rigid_size(g.n());
  if (!r.rigid) {
    out.verdict = false;
    out.status = "false";
    return out;
  }
  Decomposition d = decompose_p_rigid(g, ell, o.p);
  out.verdict = true;
  out.status = "true";
  out.certificates["parts"] = d.parts;
  out.certificates["leftover"] = d.leftover;
  return out;
}

Outcome cmd_orient(const GraphFile& gf, const Options& o) {
  const MultiGraph& g = gf.graph;
  Outcome out;
  out.input["mode"] = o.mode;
  Json& c = out.certificates;
  if (o.mode == "hakimi") {
    std::vector<Count> targets = per_vertex(o.targets, g.n(), "--targets");
    out.input["targets"] = targets;
    HakimiResult h = hakimi_orient(g, targets);
    out.verdict = h.feasible;
    if (h.orientation) c["orientation"] = orientation_to_json(*h.orientation);
    if (h.witness) c["witness"] = set_to_json(*h.witness);
  } else if (o.mode == "eulerian" || o.mode == "smooth") {
    std::optional<std::uint64_t> seed;
    if (o.shuffle) seed = o.seed;
    out.input["shuffle"] = o.shuffle;
    Orientation d =
        euler_smooth_orient(g, o.mode == "eulerian" ? EulerMode::Eulerian : EulerMode::Smooth, seed);
    out.verdict = true;
    c["orientation"] = orientation_to_json(d);
  } else if (o.mode == "robust") {
    Count k = parse_rational(o.k).numerator();
    out.input["k"] = k;
    out.input["retries"] = o.retries;
    RobustOptions opts;
    opts.seed = o.seed;
    opts.retries = o.retries;
    opts.force = o.force;
    RobustResult res = robust_arc_strong(g, k, opts);
    out.verdict = res.verified;
    c["orientation"] = orientation_to_json(res.orientation);
    c["tree"] = res.tree;
    c["attempts"] = res.attempts;
    if (!res.detail.empty()) c["detail"] = res.detail;
    if (res.verified) {
      c["checks"] = Json::array({"smooth", std::to_string(2 * k + 1) + "-arc-strong",
                                 "every D - v is " + std::to_string(k) + "-arc-strong"});
    }
  } else if (o.mode == "packed") {
    SetFunc l = func_of(o.l, g.n(), "--l");
    SetFunc ell = func_of(o.ell, g.n(), "--ell");
    std::vector<Count> r1 = per_vertex(o.r1, g.n(), "--r1");
    std::vector<Count> r2 = per_vertex(o.r2, g.n(), "--r2");
    out.input["l"] = l.describe();
    out.input["ell"] = ell.describe();
    out.input["r1"] = r1;
    out.input["r2"] = r2;
    if (o.u) out.input["u"] = *o.u;
    PackedOrientation res = packed_orientation(g, l, ell, r1, r2, o.u, o.force);
    out.verdict = res.success;
    c["orientation"] = orientation_to_json(res.orientation);
    c["h0"] = res.h0;
    c["h1"] = res.h1;
    c["h2"] = res.h2;
    c["rest"] = res.rest;
    c["checks"] = res.checks;
    if (res.deficiency) c["structure"] = structure_json(*res.deficiency);
  } else if (o.mode == "rigid") {
    SetFunc ell = func_of(o.func, g.n(), "--func");
    out.input["func"] = ell.describe();
    EquivResult res = rigid_to_orientation(g, ell);
    out.verdict = res.holds;
    if (res.orientation) c["orientation"] = orientation_to_json(*res.orientation);
    if (res.witness) c["witness"] = set_to_json(*res.witness);
    if (!res.detail.empty()) c["detail"] = res.detail;
  } else if (o.mode == "factor") {
    Count k = parse_rational(o.k).numerator();
    out.input["k"] = k;
    out.input["r"] = o.r;
    FactorResult res = rigid_factor(g, k, o.r, o.force);
    out.verdict = res.success;
    c["factor"] = res.factor;
    c["forest"] = res.forest;
    c["rigid"] = res.rigid;
    c["forest_bound"] = res.forest_bound;
    if (!res.detail.empty()) c["detail"] = res.detail;
  } else {
    throw InvalidArgument("unknown orientation mode '" + o.mode + "'");
  }
  out.status = out.verdict ? "success" : "false";
  return out;
}

HypothesisReport run_hypothesis(const MultiGraph& g, const Json& in) {
  const std::string check = in.at("check");
  auto func = [&](const char* key) { return parse_set_func(in.at(key), g.n()); };
  if (check == "necessary") return check_necessary_rigid(g, func("ell"));
  if (check == "cor32") return check_cor32(g, in.at("k").get<Count>());
  if (check == "sufficient") {
    return check_sufficient_rigid(g, func("ell"), in.at("excluded").get<Count>());
  }
  if (check == "pack61") return check_pack61(g, func("l"), func("ell"), in.at("excluded"));
  if (check == "weakly") return check_weakly_connected(g, func("ell"), func("l"));
  if (check == "pack63") {
    SizeFunction phi;
    for (const Json& x : in.at("phi")) phi.by_size.push_back(parse_rational(x.get<std::string>()));
    return check_pack63(g, func("l"), func("ell"), phi, in.at("excluded"));
  }
  if (check == "pack81") {
    return check_pack81(g, func("l"), func("ell"), parse_rational(in.at("k").get<std::string>()),
                        in.at("rho").get<std::vector<Count>>());
  }
  throw InvalidArgument("unknown hypothesis check '" + check + "'");
}

Outcome cmd_hypothesis(const GraphFile& gf, const Options& o) {
  const MultiGraph& g = gf.graph;
  Outcome out;
  Json& in = out.input;
  in["check"] = o.check;
  auto put_func = [&](const char* key, const std::string& text) {
    in[key] = func_of(text, g.n(), key).describe();
  };
  if (o.check == "necessary" || o.check == "sufficient" || o.check == "pack61" ||
      o.check == "pack63" || o.check == "pack81" || o.check == "weakly") {
    put_func("ell", o.ell.empty() ? o.func : o.ell);
  }
  if (o.check == "pack61" || o.check == "pack63" || o.check == "pack81" || o.check == "weakly") {
    put_func("l", o.l);
  }
  if (o.check == "cor32") in["k"] = parse_rational(o.k).numerator();
  if (o.check == "sufficient" || o.check == "pack61" || o.check == "pack63") {
    in["excluded"] = o.excluded;
  }
  if (o.check == "pack63") {
    Json phi = Json::array();
    std::vector<std::string> items;
    std::stringstream ss(o.phi);
    for (std::string item; std::getline(ss, item, ',');) items.push_back(item);
    if (items.size() == 1) items.assign(g.n() + 1, items[0]);
    if (static_cast<int>(items.size()) != g.n() + 1) {
      throw InvalidArgument("--phi must give one value or n+1 values by set size");
    }
    for (const std::string& item : items) phi.push_back(rational_text(parse_rational(item)));
    in["phi"] = phi;
  }
  if (o.check == "pack81") {
    in["k"] = rational_text(parse_rational(o.k));
    in["rho"] = per_vertex(o.rho, g.n(), "--rho");
  }
  HypothesisReport h = run_hypothesis(g, in);
  out.verdict = h.holds;
  out.status = h.holds ? "true" : "false";
  out.certificates = hypothesis_json(h);
  return out;
}

BfVerdict run_oracle(const MultiGraph& g, const Json& in, const OracleBudget& budget) {
  const std::string check = in.at("check");
  auto func = [&](const char* key) { return parse_set_func(in.at(key), g.n()); };
  if (check == "sparse") return bf_sparse(g, func("func"), budget);
  if (check == "partition") return bf_partition_connected(g, func("func"), budget);
  if (check == "rigid") return bf_rigid(g, func("func"));
  if (check == "edge") return bf_edge_connected(g, func("func"), budget);
  if (check == "weakly") return bf_weakly_connected(g, func("ell"), func("l"), budget);
  if (check == "matroid") return bf_matroid_axioms(g, func("func"));
  throw InvalidArgument("unknown oracle check '" + check + "'");
}

Outcome cmd_oracle(const std::optional<GraphFile>& gf, const Options& o) {
  Outcome out;
  Json& in = out.input;
  in["check"] = o.check;
  OracleBudget budget = budget_of(o);
  in["budget"] = {budget.subset_n, budget.partition_n, budget.pair_n};
  if (o.check == "census") {
    CensusFilter filter;
    filter.connected = o.connected;
    in["n"] = o.census_n;
    in["connected"] = o.connected;
    if (!o.func.empty()) {
      filter.tight_for = parse_set_func(o.func, o.census_n);
      in["func"] = filter.tight_for->describe();
    }
    Count count = 0;
    for_each_census_graph(o.census_n, filter, [&count](const MultiGraph&) {
      ++count;
      return true;
    });
    out.verdict = true;
    out.status = "true";
    out.certificates["count"] = count;
    return out;
  }
  if (!gf) throw InvalidArgument("oracle needs --graph");
  const MultiGraph& g = gf->graph;
  if (o.check == "rank") {
    SetFunc f = func_of(o.func, g.n(), "--func");
    in["func"] = f.describe();
    BfRank r = bf_rank(g, f);
    out.verdict = true;
    out.status = "true";
    out.certificates["rank"] = r.rank;
    out.certificates["edges"] = r.edges;
    return out;
  }
  if (o.check == "weakly") {
    in["ell"] = func_of(o.ell, g.n(), "--ell").describe();
    in["l"] = func_of(o.l, g.n(), "--l").describe();
  } else {
    in["func"] = func_of(o.func, g.n(), "--func").describe();
  }
  BfVerdict v = run_oracle(g, in, budget);
  out.verdict = v.holds;
  out.status = v.holds ? "true" : "false";
  out.certificates = bf_json(v);
  return out;
}

MultiGraph generate(const Json& in, const std::optional<GraphFile>& base) {
  const std::string family = in.at("family");
  if (family == "complete") return complete_graph(in.at("n"));
  if (family == "complete_bipartite") return complete_bipartite(in.at("a"), in.at("b"));
  if (family == "circulant") return circulant(in.at("n"), in.at("offsets").get<std::vector<Count>>());
  if (family == "random_simple") return random_simple(in.at("n"), in.at("m"), in.at("seed"));
  if (family == "random_regular") return random_regular(in.at("n"), in.at("r"), in.at("seed"));
  if (family == "doubled") {
    MultiGraph g = base ? base->graph : graph_from_json(in.at("base")).graph;
    return doubled(g, in.at("multiplicity"));
  }
  throw InvalidArgument("unknown family '" + family + "'");
}

Json gen_input(const Options& o, const std::optional<GraphFile>& base) {
  Json in;
  std::string family = o.family;
  std::replace(family.begin(), family.end(), '-', '_');
  in["family"] = family;
  if (family == "complete") {
    in["n"] = o.n;
  } else if (family == "complete_bipartite") {
    in["a"] = o.a;
    in["b"] = o.b;
  } else if (family == "circulant") {
    in["n"] = o.n;
    in["offsets"] = parse_count_list(o.offsets);
  } else if (family == "random_simple" || family == "random_regular") {
    if (!o.seed_given) throw InvalidArgument("random families need an explicit --seed");
    in["n"] = o.n;
    if (family == "random_simple") {
      in["m"] = o.edges;
    } else {
      in["r"] = o.r;
    }
    in["seed"] = o.seed;
  } else if (family == "doubled") {
    if (!base) throw InvalidArgument("doubled needs --graph");
    in["base"] = graph_to_json(*base);
    in["multiplicity"] = o.multiplicity;
  } else {
    throw InvalidArgument("unknown family '" + o.family + "'");
  }
  return in;
}

std::string default_name(const Json& in) {
  std::string family = in.at("family");
  if (family == "complete") return "K" + std::to_string(in.at("n").get<int>());
  if (family == "complete_bipartite") {
    return "K" + std::to_string(in.at("a").get<int>()) + "," + std::to_string(in.at("b").get<int>());
  }
  return family;
}

// ---- certificate re-verification -------------------------------------------------------

struct Checker {
  Recheck& rc;
  void expect(bool cond, const std::string& what) {
    rc.notes.push_back((cond ? "ok: " : "FAILED: ") + what);
    if (!cond) rc.ok = false;
  }
};

void recheck_sparse(const MultiGraph& g, const Json& in, const Json& c, bool verdict, Checker& ck) {
  SetFunc f = parse_set_func(in.at("func"), g.n());
  if (verdict) {
    ck.expect(!c.contains("violation"), "no violation listed");
    if (g.n() <= OracleBudget{}.subset_n) {
      ck.expect(bf_sparse(g, f).holds, "exhaustive sparsity check");
    } else {
      ck.expect(is_sparse(g, f).sparse, "pebble sparsity check");
    }
  } else {
    VertexSet a = set_from_json(c.at("violation"), g.n());
    ck.expect(induced_count(g, a) > f.slack_bound(a), "violation exceeds its bound");
  }
}

void recheck_rigid(const MultiGraph& g, const Json& in, const Json& c, bool verdict, Checker& ck) {
  SetFunc f = parse_set_func(in.at("func"), g.n());
  std::vector<EdgeId> w = ids_of(c.at("witness"), g);
  ck.expect(distinct_ids({w}), "witness edges distinct");
  ck.expect(is_sparse_edges(g, f, w).sparse, "witness is sparse");
  ck.expect(static_cast<Count>(w.size()) == c.at("rank").get<Count>(), "witness size equals rank");
  Count size = f.rigid_size(g.n());
  if (verdict) {
    ck.expect(static_cast<Count>(w.size()) == size, "witness reaches the rigid size");
  } else {
    Count rank = g.m() <= 20 && g.n() <= 16 ? bf_rank(g, f).rank : rank_and_rigid(g, f).rank;
    ck.expect(rank == c.at("rank").get<Count>() && rank < size, "rank below the rigid size");
  }
}

void recheck_components(const MultiGraph& g, const Json& in, const Json& c, Checker& ck) {
  SetFunc f = parse_set_func(in.at("func"), g.n());
  std::vector<EdgeId> basis = ids_of(c.at("basis"), g);
  ck.expect(is_sparse_edges(g, f, basis).sparse, "basis is sparse");
  ck.expect(static_cast<Count>(basis.size()) == rank_and_rigid(g, f).rank, "basis has full rank");
  MultiGraph fg = g.edge_subgraph(basis);
  for (const Json& s : c.at("components")) {
    VertexSet x = set_from_json(s, g.n());
    if (x.size() < 2) continue;
    ck.expect(induced_count(fg, x) == f.slack_bound(x), "component " + x.to_string() + " is rigid");
  }
  ck.expect(sets_to_json(rigid_components(fg, f)) == c.at("components"), "components are maximal");
}

void recheck_preset(const MultiGraph& g, const Json& in, const Json& c, Checker& ck) {
  const std::string preset = in.at("preset");
  std::vector<std::vector<EdgeId>> all;
  for (const Json& t : c.at("trees")) {
    all.push_back(ids_of(t, g));
    ck.expect(spanning_tree(g, all.back()), "tree is spanning");
  }
  Rational k = parse_rational(in.at("k").get<std::string>());
  Count kr = preset == "cor82" ? 2 : k.numerator();
  for (const Json& r : c.at("rigid")) {
    all.push_back(ids_of(r, g));
    ck.expect(edges_rigid(g, all.back(), SetFunc::lmn(kr, 2 * kr - 1)),
              "part is " + std::to_string(kr) + "-rigid");
  }
  if (c.contains("connectors")) {
    for (const Json& r : c.at("connectors")) all.push_back(ids_of(r, g));
  }
  if (preset != "cor82") ck.expect(distinct_ids(all), "parts are edge-disjoint");
  std::vector<EdgeId> h = ids_of(c.at("h"), g);
  std::vector<Count> deg = degrees_on(g, h);
  std::vector<Count> bound = c.at("degree_bound").get<std::vector<Count>>();
  VertexSet where = preset == "cor82" ? set_from_json(in.at("side"), g.n()) : g.vertices();
  bool ok = true;
  for (VertexId v : where.members()) ok = ok && deg[v] <= bound[v];
  ck.expect(ok, "degree bound");
  if (preset == "thm10_1" || preset == "thm10_2") {
    Count kk = k.numerator();
    Count p = in.at("p");
    Count m = in.at("m");
    Count cap = (preset == "thm10_1" ? kk * p : 2 * kk * p - p) + m;
    bool bound_ok = true;
    for (VertexId v = 0; v < g.n(); ++v) bound_ok = bound_ok && bound[v] == ceil_div(g.degree(v), 2) + cap;
    ck.expect(bound_ok, "degree bound matches ceil(d/2) + " + std::to_string(cap));
  }
  if (preset == "thm10_2") {
    Count kk = k.numerator();
    for (const Json& hp : c.at("h_parts")) {
      MultiGraph hi = g.edge_subgraph(ids_of(hp, g));
      ck.expect(edge_connectivity(hi) >= 2 * kk - 1,
                "H_i is " + std::to_string(2 * kk - 1) + "-edge-connected");
      bool each = true;
      for (VertexId v = 0; v < g.n(); ++v) {
        each = each && edge_connectivity(hi, VertexSet::single(v)) >= kk - 1;
      }
      ck.expect(each, "every H_i - v is " + std::to_string(kk - 1) + "-edge-connected");
    }
  }
  if (preset == "cor82") {
    ck.expect(edges_rigid(g, h, SetFunc::lmn(2, 3)), "H is 2-rigid");
    ck.expect(vertex_connectivity(g.edge_subgraph(h)) >= 2, "H is 2-connected");
  }
}

void recheck_pack(const MultiGraph& g, const Json& in, const Json& c, bool verdict, Checker& ck) {
  if (in.contains("preset")) {
    recheck_preset(g, in, c, ck);
    return;
  }
  std::vector<SetFunc> funcs;
  for (const Json& f : in.at("funcs")) funcs.push_back(parse_set_func(f, g.n()));
  std::vector<EdgeId> forbidden = ids_of(in.at("forbidden"), g);
  std::vector<std::vector<EdgeId>> parts;
  bool all_full = true;
  for (std::size_t i = 0; i < funcs.size(); ++i) {
    parts.push_back(ids_of(c.at("parts").at(i).at("edges"), g));
    ck.expect(is_sparse_edges(g, funcs[i], parts.back()).sparse, "part " + std::to_string(i) + " is sparse");
    bool full = static_cast<Count>(parts.back().size()) == funcs[i].rigid_size(g.n());
    all_full = all_full && full;
  }
  std::vector<EdgeId> uncovered = ids_of(c.at("uncovered"), g);
  std::vector<std::vector<EdgeId>> everything = parts;
  everything.push_back(uncovered);
  everything.push_back(forbidden);
  std::size_t total = 0;
  for (const auto& list : everything) total += list.size();
  ck.expect(distinct_ids(everything) && static_cast<int>(total) == g.m(),
            "parts, uncovered and forbidden edges partition E");
  ck.expect(all_full == verdict, "verdict matches the part sizes");
  if (verdict) return;
  std::vector<VertexSet> sets;
  for (const Json& s : c.at("structure").at("partition")) sets.push_back(set_from_json(s, g.n()));
  Partition part(g.n(), sets);
  bool inside = true;
  for (EdgeId e : uncovered) inside = inside && part.part_of(g.edge(e).u) == part.part_of(g.edge(e).v);
  ck.expect(inside, "no uncovered edge crosses the structure partition");
  if (g.m() <= 12) {
    Count covered = static_cast<Count>(total - uncovered.size() - forbidden.size());
    ck.expect(covered == edmonds_bound(g, funcs, forbidden), "covered size equals the exhaustive bound");
  } else {
    Packing again = matroid_union_pack(g, funcs, forbidden);
    ck.expect(!again.all_full(), "repacking is also deficient");
  }
}

void recheck_decompose(const MultiGraph& g, const Json& in, const Json& c, bool verdict,
                       Checker& ck) {
  SetFunc ell = parse_set_func(in.at("func"), g.n());
  Count p = in.at("p");
  SetFunc scaled = derived_scaled(ell, p);
  if (!verdict) {
    ck.expect(rank_and_rigid(g, scaled).rank == c.at("rank").get<Count>() &&
                  c.at("rank").get<Count>() < scaled.rigid_size(g.n()),
              "rank below the rigid size");
    return;
  }
  std::vector<std::vector<EdgeId>> parts;
  for (const Json& part : c.at("parts")) {
    parts.push_back(ids_of(part, g));
    ck.expect(edges_rigid(g, parts.back(), ell), "part is rigid");
  }
  ck.expect(static_cast<Count>(parts.size()) == p, "part count");
  ck.expect(distinct_ids(parts), "parts are edge-disjoint");
}

void recheck_orient(const MultiGraph& g, const Json& in, const Json& c, bool verdict, Checker& ck) {
  const std::string mode = in.at("mode");
  std::optional<Orientation> d;
  if (c.contains("orientation")) d = orientation_from_json(g, c.at("orientation"));
  if (mode == "hakimi") {
    std::vector<Count> t = in.at("targets").get<std::vector<Count>>();
    if (verdict) {
      bool ok = true;
      for (VertexId v = 0; v < g.n(); ++v) ok = ok && d->in_degree(v) == t[v];
      ck.expect(ok, "in-degrees equal the targets");
    } else {
      VertexSet a = set_from_json(c.at("witness"), g.n());
      Count sum = 0;
      for (VertexId v : a.members()) sum += t[v];
      Count total = 0;
      for (Count x : t) total += x;
      ck.expect(induced_count(g, a) > sum || total != g.m(), "witness violates the subset condition");
    }
  } else if (mode == "eulerian" || mode == "smooth") {
    ck.expect(is_smooth(*d), "orientation is smooth");
    if (mode == "eulerian") {
      bool ok = true;
      for (VertexId v = 0; v < g.n(); ++v) ok = ok && d->in_degree(v) == d->out_degree(v);
      ck.expect(ok, "orientation is balanced");
    }
  } else if (mode == "robust") {
    Count k = in.at("k");
    bool ok = is_smooth(*d) && arc_strength(*d) >= 2 * k + 1;
    for (VertexId v = 0; ok && v < g.n(); ++v) ok = arc_strength(*d, VertexSet::single(v)) >= k;
    ck.expect(ok == verdict, "smooth, arc-strong and vertex-robust as reported");
  } else if (mode == "packed") {
    if (!verdict) {
      ck.expect(c.contains("structure"), "deficiency certificate present");
      return;
    }
    SetFunc l = parse_set_func(in.at("l"), g.n());
    SetFunc ell = parse_set_func(in.at("ell"), g.n());
    std::vector<Count> r1 = in.at("r1").get<std::vector<Count>>();
    std::vector<Count> r2 = in.at("r2").get<std::vector<Count>>();
    std::vector<EdgeId> h1 = ids_of(c.at("h1"), g);
    std::vector<EdgeId> h2 = ids_of(c.at("h2"), g);
    ck.expect(distinct_ids({h1, h2}), "H1 and H2 are edge-disjoint");
    Orientation d1 = sub_orientation(*d, h1);
    Orientation d2 = sub_orientation(*d, h2);
    bool deg = true;
    for (VertexId v = 0; v < g.n(); ++v) {
      deg = deg && d1.in_degree(v) == l.at(v) - r1[v] && d2.in_degree(v) == ell.at(v) - r2[v];
    }
    ck.expect(deg, "in-degrees of H1 and H2");
    if (g.n() <= 20) {
      ck.expect(verify_arc(d1, l, r1).holds, "H1 is rooted l-arc-connected");
      ck.expect(verify_arc(d2, ell, r2).holds, "H2 is rooted ell-arc-connected");
    }
    std::optional<VertexId> u;
    if (in.contains("u")) u = in.at("u").get<VertexId>();
    bool out_ok = true;
    for (VertexId v = 0; v < g.n(); ++v) {
      Count cap = u && *u == v ? g.degree(v) / 2 : ceil_div(g.degree(v), 2);
      out_ok = out_ok && d->out_degree(v) <= cap;
    }
    ck.expect(out_ok, "out-degree bound");
  } else if (mode == "rigid") {
    SetFunc ell = parse_set_func(in.at("func"), g.n());
    if (!verdict) {
      ck.expect(!d.has_value(), "no orientation on a false verdict");
      return;
    }
    bool deg = true;
    for (VertexId v = 0; v < g.n(); ++v) deg = deg && d->in_degree(v) == ell.at(v);
    ck.expect(deg, "in-degree equals ell");
    ck.expect(verify_arc(*d, ell).holds, "orientation is ell-arc-connected");
    ck.expect(orientation_to_rigid(*d, ell).holds, "orientation certifies minimal rigidity");
  } else if (mode == "factor") {
    if (!verdict) return;
    Count k = in.at("k");
    Count r = in.at("r");
    std::vector<EdgeId> f = ids_of(c.at("factor"), g);
    std::vector<Count> deg = degrees_on(g, f);
    bool ok = true;
    for (Count x : deg) ok = ok && (x == r - 1 || x == r - 3);
    ck.expect(ok, "factor degrees in {r-3, r-1}");
    ck.expect(edges_rigid(g, f, SetFunc::lmn(k, 2 * k - 1)), "factor is k-rigid");
  }
}

// ---- output -------------------------------------------------------------------------

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (const std::string& a : args) {
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

void print_human(const Json& report, std::ostream& out) {
  out << report.value("subcommand", "?") << ": verdict "
      << (report.value("verdict", false) ? "true" : "false") << " ("
      << report.value("status", "") << "), seed " << report.value("seed", 0) << ", "
      << std::fixed << std::setprecision(2) << report.value("timing_ms", 0.0) << " ms\n";
  auto table = [&out](const char* title, const Json& obj) {
    if (!obj.is_object() || obj.empty()) return;
    out << title << ":\n";
    std::size_t width = 0;
    for (const auto& [key, _] : obj.items()) width = std::max(width, key.size());
    for (const auto& [key, value] : obj.items()) {
      if (key == "graph" || key == "base") continue;
      out << "  " << std::left << std::setw(static_cast<int>(width)) << key << "  "
          << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  };
  table("input", report.value("input", Json::object()));
  table("certificates", report.value("certificates", Json::object()));
}

void emit(const Json& report, const std::string& format, std::ostream& out) {
  if (format == "human") {
    print_human(report, out);
  } else {
    out << report.dump(2) << '\n';
  }
}

}  // namespace

Recheck verify_report(const Json& report) {
  Recheck rc;
  Checker ck{rc};
  const std::string sub = report.at("subcommand");
  const Json& in = report.at("input");
  const Json& c = report.at("certificates");
  const bool verdict = report.at("verdict");
  if (sub == "gen") {
    std::optional<GraphFile> none;
    MultiGraph again = generate(in, none);
    GraphFile gf = graph_from_json(report.at("certificates").at("graph"));
    ck.expect(again.edges() == gf.graph.edges() && again.n() == gf.graph.n(),
              "regenerated graph matches");
    return rc;
  }
  if (sub == "oracle" && in.at("check") == "census") {
    CensusFilter filter;
    filter.connected = in.at("connected");
    if (in.contains("func")) filter.tight_for = parse_set_func(in.at("func"), in.at("n"));
    ck.expect(static_cast<Count>(census(in.at("n"), filter).size()) == c.at("count").get<Count>(),
              "census count reproduces");
    return rc;
  }
  GraphFile gf = graph_from_json(in.at("graph"));
  const MultiGraph& g = gf.graph;
  if (sub == "sparse") {
    recheck_sparse(g, in, c, verdict, ck);
  } else if (sub == "rigid") {
    recheck_rigid(g, in, c, verdict, ck);
  } else if (sub == "components") {
    recheck_components(g, in, c, ck);
  } else if (sub == "pack") {
    recheck_pack(g, in, c, verdict, ck);
  } else if (sub == "decompose") {
    recheck_decompose(g, in, c, verdict, ck);
  } else if (sub == "orient") {
    recheck_orient(g, in, c, verdict, ck);
  } else if (sub == "hypothesis") {
    ck.expect(run_hypothesis(g, in).holds == verdict, "hypothesis verdict reproduces");
  } else if (sub == "oracle") {
    if (in.at("check") == "rank") {
      std::vector<EdgeId> ids = ids_of(c.at("edges"), g);
      SetFunc f = parse_set_func(in.at("func"), g.n());
      ck.expect(is_sparse_edges(g, f, ids).sparse, "rank witness is sparse");
      ck.expect(rank_and_rigid(g, f).rank == c.at("rank").get<Count>(), "rank reproduces");
    } else {
      OracleBudget budget;
      std::vector<int> caps = in.at("budget").get<std::vector<int>>();
      budget.subset_n = caps.at(0);
      budget.partition_n = caps.at(1);
      budget.pair_n = caps.at(2);
      ck.expect(run_oracle(g, in, budget).holds == verdict, "oracle verdict reproduces");
    }
  } else {
    throw InvalidArgument("cannot verify a '" + sub + "' report");
  }
  return rc;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Sparsity, packing and orientation certificates for multigraphs", "rigidpack"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "random seed")->each([&o](const std::string&) {
    o.seed_given = true;
  });
  app.add_option("--budget", o.budget, "exhaustive sweep caps: N or S,P,Q (default from RIGIDPACK_BUDGET)");
  app.add_flag("--force", o.force, "skip hypothesis checks");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"human", "structured"}));

  auto graph_opt = [&o](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--graph", o.graph, "graph file");
    if (required) opt->required();
  };
  auto* sparse = app.add_subcommand("sparse", "decide f-sparsity");
  graph_opt(sparse, true);
  sparse->add_option("--func", o.func)->required();
  auto* rigid = app.add_subcommand("rigid", "decide f-rigidity with a witness");
  graph_opt(rigid, true);
  rigid->add_option("--func", o.func)->required();
  auto* comps = app.add_subcommand("components", "rigid components of a maximum sparse subgraph");
  graph_opt(comps, true);
  comps->add_option("--func", o.func)->required();
  auto* pack = app.add_subcommand("pack", "matroid union packing or a constructive preset");
  graph_opt(pack, true);
  pack->add_option("--funcs", o.funcs);
  pack->add_option("--forbidden", o.forbidden, "edge ids, comma separated");
  pack->add_option("--preset", o.preset)->check(CLI::IsMember({"thm10_1", "thm10_2", "cor82"}));
  pack->add_option("--k", o.k, "integer, or a/b for cor82");
  pack->add_option("--p", o.p);
  pack->add_option("--m", o.m);
  pack->add_option("--side", o.side, "vertex list");
  auto* decompose = app.add_subcommand("decompose", "p edge-disjoint spanning rigid subgraphs");
  graph_opt(decompose, true);
  decompose->add_option("--func", o.func)->required();
  decompose->add_option("--p", o.p);
  auto* orient = app.add_subcommand("orient", "orientations with certificates");
  graph_opt(orient, true);
  orient->add_option("--mode", o.mode)
      ->required()
      ->check(CLI::IsMember({"hakimi", "eulerian", "smooth", "robust", "packed", "rigid", "factor"}));
  orient->add_option("--targets", o.targets);
  orient->add_option("--k", o.k);
  orient->add_option("--r", o.r);
  orient->add_option("--func", o.func);
  orient->add_option("--l", o.l);
  orient->add_option("--ell", o.ell);
  orient->add_option("--r1", o.r1);
  orient->add_option("--r2", o.r2);
  orient->add_option("--u", o.u);
  orient->add_option("--retries", o.retries);
  orient->add_flag("--shuffle", o.shuffle);
  auto* verify = app.add_subcommand("verify", "re-verify the certificates of a report");
  verify->add_option("--report", o.report, "report file, - for stdin")->required();
  auto* hyp = app.add_subcommand("hypothesis", "check a theorem hypothesis");
  graph_opt(hyp, true);
  hyp->add_option("--check", o.check)
      ->required()
      ->check(CLI::IsMember({"necessary", "cor32", "sufficient", "pack61", "pack63", "pack81", "weakly"}));
  hyp->add_option("--func", o.func);
  hyp->add_option("--l", o.l);
  hyp->add_option("--ell", o.ell);
  hyp->add_option("--k", o.k);
  hyp->add_option("--excluded", o.excluded);
  hyp->add_option("--rho", o.rho);
  hyp->add_option("--phi", o.phi, "one value or n+1 values by set size");
  auto* oracle = app.add_subcommand("oracle", "brute-force checks and census counts");
  graph_opt(oracle, false);
  oracle->add_option("--check", o.check)
      ->required()
      ->check(CLI::IsMember({"sparse", "partition", "rigid", "edge", "weakly", "matroid", "rank", "census"}));
  oracle->add_option("--func", o.func);
  oracle->add_option("--l", o.l);
  oracle->add_option("--ell", o.ell);
  oracle->add_option("--n", o.census_n);
  oracle->add_flag("--connected", o.connected);
  auto* gen = app.add_subcommand("gen", "generate a graph file");
  gen->add_option("family", o.family)
      ->required()
      ->check(CLI::IsMember({"complete", "complete_bipartite", "complete-bipartite", "circulant",
                             "random_simple", "random-simple", "random_regular", "random-regular",
                             "doubled"}));
  gen->add_option("--n", o.n);
  gen->add_option("--m", o.edges);
  gen->add_option("--a", o.a);
  gen->add_option("--b", o.b);
  gen->add_option("--r", o.r);
  gen->add_option("--offsets", o.offsets);
  gen->add_option("--graph", o.graph, "base graph for doubled");
  gen->add_option("--multiplicity", o.multiplicity);
  gen->add_option("--name", o.name);
  gen->add_option("--out", o.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Json report;
  report["command"] = join_args(args);
  report["engine_version"] = kEngineVersion;
  report["seed"] = o.seed;
  try {
    std::optional<GraphFile> gf;
    if (!o.graph.empty()) gf = load_graph(o.graph);
    Outcome result;
    std::string sub;
    if (*verify) {
      sub = "verify";
      Json target;
      try {
        target = Json::parse(o.report == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                             : read_text(o.report));
      } catch (const Json::parse_error& e) {
        throw InvalidArgument(std::string("report: ") + e.what());
      }
      Recheck rc = verify_report(target);
      result.verdict = rc.ok;
      result.status = rc.ok ? "true" : "false";
      result.input["report"] = o.report;
      result.input["subcommand"] = target.at("subcommand");
      result.input["verdict"] = target.at("verdict");
      result.certificates["notes"] = rc.notes;
    } else if (*gen) {
      sub = "gen";
      Json in = gen_input(o, gf);
      GraphFile file;
      file.graph = generate(in, gf);
      file.name = o.name.empty() ? default_name(in) : o.name;
      if (o.out.empty()) {
        out << serialize_graph(file);
        return 0;
      }
      save_graph(file, o.out);
      result.verdict = true;
      result.status = "success";
      result.input = in;
      result.certificates["file"] = o.out;
      result.certificates["graph"] = graph_to_json(file);
    } else if (*oracle) {
      sub = "oracle";
      result = cmd_oracle(gf, o);
    } else {
      if (*sparse) {
        sub = "sparse";
        result = cmd_sparse(*gf, o);
      } else if (*rigid) {
        sub = "rigid";
        result = cmd_rigid(*gf, o);
      } else if (*comps) {
        sub = "components";
        result = cmd_components(*gf, o);
      } else if (*pack) {
        sub = "pack";
        result = cmd_pack(*gf, o);
      } else if (*decompose) {
        sub = "decompose";
        result = cmd_decompose(*gf, o);
      } else if (*orient) {
        sub = "orient";
        result = cmd_orient(*gf, o);
      } else {
        sub = "hypothesis";
        result = cmd_hypothesis(*gf, o);
      }
    }
    if (gf && sub != "gen") result.input["graph"] = graph_to_json(*gf);
    report["subcommand"] = sub;
    report["verdict"] = result.verdict;
    report["status"] = result.status;
    report["input"] = std::move(result.input);
    report["certificates"] = std::move(result.certificates);
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(report, o.format, out);
    return result.verdict ? 0 : 1;
  } catch (const HypothesisFailure& e) {
    report["error"] = e.what();
    report["kind"] = "hypothesis";
    report["hypothesis"] = hypothesis_json(e.report());
  } catch (const BudgetExceeded& e) {
    report["error"] = e.what();
    report["kind"] = "budget";
  } catch (const InvalidArgument& e) {
    report["error"] = e.what();
    report["kind"] = "invalid_argument";
  } catch (const InternalError& e) {
    report["error"] = e.what();
    report["kind"] = "internal";
  } catch (const Json::exception& e) {
    report["error"] = e.what();
    report["kind"] = "invalid_argument";
  }
  err << "error: " << report["error"].get<std::string>() << '\n';
  if (o.format == "structured") out << report.dump(2) << '\n';
  return 2;
}

}  // namespace rigidpack::cli
