#include "rigidpack/set_function.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rigidpack/error.hpp"

namespace rigidpack {

struct SetFunc::Node {
  Kind kind = Kind::Constant;
  Count a = 0;  // m, c, or p
  Count b = 0;  // n
  int ground = 0;
  std::vector<Count> values;  // table values or per-vertex numbers
  VertexSet target;           // override set
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

namespace {

using NodePtr = std::shared_ptr<const SetFunc::Node>;

Count sum_over(const std::vector<Count>& per_vertex, VertexSet a) {
  Count s = 0;
  for (VertexId v : a.members()) {
    if (v >= static_cast<int>(per_vertex.size())) {
      throw InvalidArgument("per-vertex table has no entry for vertex " + std::to_string(v));
    }
    s += per_vertex[v];
  }
  return s;
}

Count eval_node(const SetFunc::Node& node, VertexSet a) {
  if (a.empty()) return 0;
  switch (node.kind) {
    case SetFunc::Kind::Lmn:
      return a.size() == 1 ? node.a : node.b;
    case SetFunc::Kind::Constant:
      return node.a;
    case SetFunc::Kind::Table:
      if (!a.subset_of(VertexSet::full(node.ground))) {
        throw InvalidArgument("set " + a.to_string() + " outside table ground of size " +
                              std::to_string(node.ground));
      }
      return node.values[a.mask()];
    case SetFunc::Kind::VertexWeighted:
      if (a.size() == 1) {
        const VertexId v = a.first();
        if (v >= static_cast<int>(node.values.size())) {
          throw InvalidArgument("vertex-weighted function has no value for vertex " +
                                std::to_string(v));
        }
        return node.values[v];
      }
      return eval_node(*node.left, a);
    case SetFunc::Kind::Scaled:
      return node.a * eval_node(*node.left, a);
    case SetFunc::Kind::Sum:
      return eval_node(*node.left, a) + eval_node(*node.right, a);
    case SetFunc::Kind::Shift:
      return eval_node(*node.left, a) - sum_over(node.values, a);
    case SetFunc::Kind::Override:
      return a == node.target ? node.a : eval_node(*node.left, a);
  }
  return 0;
}

std::optional<PebbleParams> params_node(const SetFunc::Node& node, int n) {
  switch (node.kind) {
    case SetFunc::Kind::Lmn:
      return PebbleParams{std::vector<Count>(n, node.a), node.b};
    case SetFunc::Kind::Constant:
      return PebbleParams{std::vector<Count>(n, node.a), node.a};
    case SetFunc::Kind::Table:
    case SetFunc::Kind::Override:
      return std::nullopt;
    case SetFunc::Kind::VertexWeighted: {
      auto base = params_node(*node.left, n);
      if (!base || static_cast<int>(node.values.size()) < n) return std::nullopt;
      base->capacity.assign(node.values.begin(), node.values.begin() + n);
      return base;
    }
    case SetFunc::Kind::Scaled: {
      auto base = params_node(*node.left, n);
      if (!base) return std::nullopt;
      for (Count& k : base->capacity) k *= node.a;
      base->c *= node.a;
      return base;
    }
    case SetFunc::Kind::Sum: {
      auto x = params_node(*node.left, n);
      auto y = params_node(*node.right, n);
      if (!x || !y) return std::nullopt;
      for (int v = 0; v < n; ++v) x->capacity[v] += y->capacity[v];
      x->c += y->c;
      return x;
    }
    case SetFunc::Kind::Shift:
      // sum_{v in A} f(v) - f(A) is unchanged by a modular shift.
      return params_node(*node.left, n);
  }
  return std::nullopt;
}

std::optional<int> ground_node(const SetFunc::Node& node) {
  if (node.kind == SetFunc::Kind::Table) return node.ground;
  std::optional<int> g;
  for (const NodePtr& child : {node.left, node.right}) {
    if (!child) continue;
    auto cg = ground_node(*child);
    if (cg) g = g ? std::min(*g, *cg) : *cg;
  }
  return g;
}

std::string describe_node(const SetFunc::Node& node) {
  std::ostringstream os;
  auto list = [&os](const std::vector<Count>& xs) {
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << ']';
  };
  switch (node.kind) {
    case SetFunc::Kind::Lmn:
      os << "lmn:" << node.a << ',' << node.b;
      break;
    case SetFunc::Kind::Constant:
      os << "const:" << node.a;
      break;
    case SetFunc::Kind::Table:
      os << "table" << node.ground << ':';
      list(node.values);
      break;
    case SetFunc::Kind::VertexWeighted:
      os << "vertex:";
      list(node.values);
      os << ':' << describe_node(*node.left);
      break;
    case SetFunc::Kind::Scaled:
      os << "scale:" << node.a << ':' << describe_node(*node.left);
      break;
    case SetFunc::Kind::Sum:
      os << "sum(" << describe_node(*node.left) << ")(" << describe_node(*node.right) << ')';
      break;
    case SetFunc::Kind::Shift:
      os << "shift:";
      list(node.values);
      os << ':' << describe_node(*node.left);
      break;
    case SetFunc::Kind::Override:
      os << "mod:" << describe_node(*node.left) << ':' << node.target.to_string() << '='
         << node.a;
      break;
  }
  return os.str();
}

bool structured_node(const SetFunc::Node& node) {
  if (node.kind == SetFunc::Kind::Table || node.kind == SetFunc::Kind::Override) return false;
  for (const NodePtr& child : {node.left, node.right}) {
    if (child && !structured_node(*child)) return false;
  }
  return true;
}

}  // namespace

SetFunc::SetFunc() : SetFunc(constant(0)) {}

SetFunc SetFunc::lmn(Count m, Count n) {
  Node node;
  node.kind = Kind::Lmn;
  node.a = m;
  node.b = n;
  return SetFunc(std::make_shared<const Node>(std::move(node)));
}

SetFunc SetFunc::constant(Count c) {
  Node node;
  node.kind = Kind::Constant;
  node.a = c;
  return SetFunc(std::make_shared<const Node>(std::move(node)));
}

SetFunc SetFunc::table(int ground, std::vector<Count> values) {
  if (ground < 0 || ground > 16) throw InvalidArgument("table ground must be in 0..16");
  if (values.size() != (std::size_t{1} << ground)) {
    throw InvalidArgument("table needs " + std::to_string(std::size_t{1} << ground) +
                          " values, got " + std::to_string(values.size()));
  }
  if (values[0] != 0) throw InvalidArgument("table value on the empty set must be 0");
  Node node;
  node.kind = Kind::Table;
  node.ground = ground;
  node.values = std::move(values);
  return SetFunc(std::make_shared<const Node>(std::move(node)));
}

SetFunc SetFunc::vertex_weighted(std::vector<Count> singles, Count c) {
  return constant(c).with_singletons(std::move(singles));
}

SetFunc SetFunc::with_singletons(std::vector<Count> singles) const {
  Node node;
  node.kind = Kind::VertexWeighted;
  node.values = std::move(singles);
  node.left = node_;
  return SetFunc(std::make_shared<const Node>(std::move(node)));
}

SetFunc SetFunc::scaled(Count p) const {
  if (p < 0) throw InvalidArgument("scale factor must be nonnegative");
  Node node;
  node.kind = Kind::Scaled;
  node.a = p;
  node.left = node_;
  return SetFunc(std::make_shared<const Node>(std::move(node)));
}

SetFunc SetFunc::plus(const SetFunc& other) const {
  Node node;
  node.kind = Kind::Sum;
  node.left = node_;
  node.right = other.node_;
  return SetFunc(std::make_shared<const Node>(std::move(node)));
}

SetFunc SetFunc::shifted(std::vector<Count> r) const {
  Node node;
  node.kind = Kind::Shift;
  node.values = std::move(r);
  node.left = node_;
  return SetFunc(std::make_shared<const Node>(std::move(node)));
}

SetFunc SetFunc::with_override(VertexSet a, Count value) const {
  if (a.empty()) throw InvalidArgument("cannot override the value on the empty set");
  Node node;
  node.kind = Kind::Override;
  node.target = a;
  node.a = value;
  node.left = node_;
  return SetFunc(std::make_shared<const Node>(std::move(node)));
}

Count SetFunc::eval(VertexSet a) const { return eval_node(*node_, a); }

SetFunc::Kind SetFunc::kind() const { return node_->kind; }

std::optional<int> SetFunc::ground() const { return ground_node(*node_); }

bool SetFunc::structured() const { return structured_node(*node_); }

std::optional<PebbleParams> SetFunc::pebble_params(int n) const {
  auto params = params_node(*node_, n);
  if (!params) return std::nullopt;
  if (params->c < 0) return std::nullopt;
  std::vector<Count> caps = params->capacity;
  if (std::any_of(caps.begin(), caps.end(), [](Count k) { return k < 0; })) return std::nullopt;
  if (n >= 2) {
    std::partial_sort(caps.begin(), caps.begin() + 2, caps.end());
    if (params->c > caps[0] + caps[1]) return std::nullopt;
  }
  return params;
}

Count SetFunc::slack_bound(VertexSet a) const {
  Count s = 0;
  for (VertexId v : a.members()) s += at(v);
  return s - eval(a);
}

Count SetFunc::rigid_size(int n) const { return slack_bound(VertexSet::full(n)); }

std::string SetFunc::describe() const { return describe_node(*node_); }

// ---- property report -------------------------------------------------------

PropertyReport property_report(const SetFunc& f, int ground) {
  if (ground > 16) throw BudgetExceeded("property_report: ground set larger than 16");
  if (ground < 0) throw InvalidArgument("property_report: negative ground size");
  const std::uint64_t total = std::uint64_t{1} << ground;
  std::vector<Count> val(total);
  for (std::uint64_t s = 0; s < total; ++s) val[s] = f.eval(VertexSet(s));

  PropertyReport rep;
  rep.ground = ground;

  // supermodularity over intersecting pairs, A <= B by mask
  bool one = true;
  bool two = true;
  for (std::uint64_t a = 1; a < total && (one || two); ++a) {
    for (std::uint64_t b = a; b < total; ++b) {
      const std::uint64_t inter = a & b;
      if (inter == 0) continue;
      if (val[inter] + val[a | b] >= val[a] + val[b]) continue;
      if (one) {
        one = false;
        rep.intersecting_witness = Counterexample{VertexSet(a), VertexSet(b)};
      }
      if (two && std::popcount(inter) >= 2) {
        two = false;
        rep.two_intersecting_witness = Counterexample{VertexSet(a), VertexSet(b)};
        break;
      }
    }
  }
  rep.intersecting_supermodular = one;
  rep.two_intersecting_supermodular = two;
  if (one) {
    rep.c_intersecting = 1;
  } else if (two) {
    rep.c_intersecting = 2;
  }

  rep.nonincreasing = true;
  for (std::uint64_t a = 1; a < total && rep.nonincreasing; ++a) {
    for (int v = 0; v < ground; ++v) {
      const std::uint64_t b = a | (std::uint64_t{1} << v);
      if (b != a && val[a] < val[b]) {
        rep.nonincreasing = false;
        rep.nonincreasing_witness = Counterexample{VertexSet(a), VertexSet(b)};
        break;
      }
    }
  }

  rep.subadditive = true;
  for (std::uint64_t a = 0; a < total && rep.subadditive; ++a) {
    const std::uint64_t rest = (total - 1) & ~a;
    for (std::uint64_t b = rest;; b = (b - 1) & rest) {
      if (val[a] + val[b] < val[a | b]) {
        rep.subadditive = false;
        rep.subadditive_witness = Counterexample{VertexSet(a), VertexSet(b)};
        break;
      }
      if (b == 0) break;
    }
  }

  rep.weakly_subadditive = true;
  rep.nonnegative = true;
  for (std::uint64_t a = 1; a < total; ++a) {
    Count singles = 0;
    for (std::uint64_t r = a; r != 0; r &= r - 1) {
      singles += val[std::uint64_t{1} << std::countr_zero(r)];
    }
    if (rep.weakly_subadditive && singles < val[a]) {
      rep.weakly_subadditive = false;
      rep.weakly_subadditive_witness = Counterexample{VertexSet(a), {}};
    }
    if (rep.nonnegative && val[a] < 0) {
      rep.nonnegative = false;
      rep.nonnegative_witness = Counterexample{VertexSet(a), {}};
    }
  }
  return rep;
}

// ---- derived functions -----------------------------------------------------

SetFunc derived_scaled(const SetFunc& l, Count p) { return l.scaled(p); }

SetFunc derived_halved(const MultiGraph& g, const SetFunc& l, const SetFunc& ell,
                       std::optional<VertexId> ceil_vertex) {
  std::vector<Count> singles(g.n());
  for (VertexId v = 0; v < g.n(); ++v) {
    const Count d = g.degree(v);
    const Count half = (ceil_vertex && *ceil_vertex == v) ? (d + 1) / 2 : d / 2;
    singles[v] = half - l.at(v) - ell.at(v);
    if (singles[v] < 0) {
      throw InvalidArgument("degree hypothesis fails at vertex " + std::to_string(v) +
                            ": d(v)/2 - l(v) - ell(v) = " + std::to_string(singles[v]));
    }
  }
  return SetFunc::vertex_weighted(std::move(singles), 0);
}

namespace {

Count floor_div(Count num, Count den) {
  Count q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace

SetFunc derived_rho(const MultiGraph& g, const SetFunc& l, const SetFunc& ell, Count k_num,
                    Count k_den, const std::vector<Count>& rho) {
  if (k_num <= 0 || k_den <= 0) throw InvalidArgument("k must be positive");
  if (static_cast<int>(rho.size()) != g.n()) throw InvalidArgument("rho needs one value per vertex");
  std::vector<Count> singles(g.n());
  for (VertexId v = 0; v < g.n(); ++v) {
    const Count d = g.degree(v);
    // ((k-1)/k) d - ((k-2)/k) rho with k = k_num / k_den
    const Count num = (k_num - k_den) * d - (k_num - 2 * k_den) * rho[v];
    singles[v] = floor_div(num, k_num) - ell.at(v);
    if (singles[v] < 0) {
      throw InvalidArgument("degree hypothesis fails at vertex " + std::to_string(v) +
                            ": derived value " + std::to_string(singles[v]));
    }
  }
  return l.with_singletons(std::move(singles));
}

SetFunc derived_rooted(const SetFunc& l, const std::vector<Count>& r) { return l.shifted(r); }

}  // namespace rigidpack
