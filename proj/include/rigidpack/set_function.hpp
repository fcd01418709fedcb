#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rigidpack/graph.hpp"

namespace rigidpack {

/// Capacities and pair constant of a function that behaves, for sparsity purposes, like
/// k_v on singletons and a constant c on every set with at least two vertices.
struct PebbleParams {
  std::vector<Count> capacity;
  Count c = 0;
};

/// Immutable integer set function, zero on the empty set. Cheap to copy.
class SetFunc {
 public:
  enum class Kind { Lmn, Constant, Table, VertexWeighted, Scaled, Sum, Shift, Override };

  SetFunc();  ///< constant 0

  /// m on singletons, n on sets of size >= 2.
  static SetFunc lmn(Count m, Count n);
  static SetFunc constant(Count c);
  /// values[mask] for every subset of {0..ground-1}; values[0] must be 0. ground <= 16.
  static SetFunc table(int ground, std::vector<Count> values);
  /// singles[v] on {v}, c on sets of size >= 2.
  static SetFunc vertex_weighted(std::vector<Count> singles, Count c);

  /// singles[v] on {v}, this function on sets of size >= 2.
  SetFunc with_singletons(std::vector<Count> singles) const;
  SetFunc scaled(Count p) const;
  SetFunc plus(const SetFunc& other) const;
  /// A -> f(A) - sum_{v in A} r(v).
  SetFunc shifted(std::vector<Count> r) const;
  /// Forces the value on one nonempty set.
  SetFunc with_override(VertexSet a, Count value) const;

  Count eval(VertexSet a) const;
  Count operator()(VertexSet a) const { return eval(a); }
  Count at(VertexId v) const { return eval(VertexSet::single(v)); }

  Kind kind() const;
  /// Ground size for table functions (and anything built on one).
  std::optional<int> ground() const;
  /// Sparsity-equivalent pebble parameters on n vertices, when the function has the
  /// singleton/pair-constant shape and the game is valid for it.
  std::optional<PebbleParams> pebble_params(int n) const;
  /// True when (k, c) parameters exist and no table or override is involved.
  bool structured() const;

  /// sum_{v in A} f(v) - f(A): the sparsity bound on e(A).
  Count slack_bound(VertexSet a) const;
  /// sum_v f(v) - f(V) on n vertices: the size of a rigid spanning sparse subgraph.
  Count rigid_size(int n) const;

  /// Syntax accepted by parse_set_func where possible.
  std::string describe() const;

  struct Node;

 private:
  explicit SetFunc(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Counterexample {
  VertexSet a;
  VertexSet b;
};

struct PropertyReport {
  int ground = 0;
  bool intersecting_supermodular = false;
  /// Least c in {1, 2} for which f is c-intersecting supermodular.
  std::optional<int> c_intersecting;
  bool two_intersecting_supermodular = false;
  bool nonincreasing = false;
  bool subadditive = false;
  bool weakly_subadditive = false;
  bool nonnegative = false;

  std::optional<Counterexample> intersecting_witness;
  std::optional<Counterexample> two_intersecting_witness;
  std::optional<Counterexample> nonincreasing_witness;
  std::optional<Counterexample> subadditive_witness;
  std::optional<Counterexample> weakly_subadditive_witness;  ///< b unused
  std::optional<Counterexample> nonnegative_witness;         ///< b unused

  /// Greedy extraction of a maximum sparse subgraph is valid.
  bool matroidal() const { return two_intersecting_supermodular && weakly_subadditive; }
};

/// Exhaustive over all pairs of subsets of {0..ground-1}. Throws BudgetExceeded above 16.
PropertyReport property_report(const SetFunc& f, int ground);

// ---- derived functions -----------------------------------------------------

/// p * l
SetFunc derived_scaled(const SetFunc& l, Count p);

/// floor(d(v)/2) - l(v) - ell(v) on singletons, 0 on larger sets. With `ceil_vertex` set,
/// that vertex uses ceil(d/2). Throws InvalidArgument naming the vertex if any value < 0.
SetFunc derived_halved(const MultiGraph& g, const SetFunc& l, const SetFunc& ell,
                       std::optional<VertexId> ceil_vertex = std::nullopt);

/// floor(((k-1)/k) d(v) - ((k-2)/k) rho(v)) - ell(v) on singletons, l(A) on larger sets.
/// k = k_num / k_den > 0. Throws InvalidArgument naming the vertex if a value < 0.
SetFunc derived_rho(const MultiGraph& g, const SetFunc& l, const SetFunc& ell, Count k_num,
                    Count k_den, const std::vector<Count>& rho);

/// A -> l(A) - sum_{v in A} r(v).
SetFunc derived_rooted(const SetFunc& l, const std::vector<Count>& r);

}  // namespace rigidpack
