#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigidpack/graph.hpp"
#include "rigidpack/orientation_types.hpp"
#include "rigidpack/packing.hpp"
#include "rigidpack/set_function.hpp"

namespace rigidpack {

struct HakimiResult {
  bool feasible = false;
  std::optional<Orientation> orientation;
  /// Infeasible: a set A with e(A) > sum_{v in A} target(v).
  std::optional<VertexSet> witness;
};

/// Orientation with d^-(v) = targets[v] by max flow. Throws InvalidArgument when a target
/// is negative or the targets do not sum to |E|.
HakimiResult hakimi_orient(const MultiGraph& g, const std::vector<Count>& targets);

struct ArcVerdict {
  bool holds = true;
  std::optional<VertexSet> witness;  ///< nonempty proper A with d^-(A) < f(A) - r(A)
  Count need = 0;
  Count have = 0;
};

/// d^-(A) >= f(A) - sum_{v in A} r(v) over nonempty proper A. Exhaustive for n <= 20;
/// constant f with zero r is handled by max flow at any size. r may be empty.
ArcVerdict verify_arc(const Orientation& d, const SetFunc& f, const std::vector<Count>& r = {});

/// Minimum over nonempty proper A of d^-(A) in D - removed, by max flow from a fixed root in
/// both directions. kUnbounded with fewer than two remaining vertices.
Count arc_strength(const Orientation& d, VertexSet removed = {});

enum class EulerMode { Eulerian, Smooth };

/// Orientation along Euler tours. Eulerian mode throws InvalidArgument naming an odd
/// vertex; smooth mode pairs odd vertices through auxiliary edges first. With a seed the
/// tour order is randomized.
Orientation euler_smooth_orient(const MultiGraph& g, EulerMode mode,
                                std::optional<std::uint64_t> seed = std::nullopt);

/// |d^+(v) - d^-(v)| <= 1 everywhere.
bool is_smooth(const Orientation& d);

struct EquivResult {
  bool holds = false;
  std::optional<Orientation> orientation;
  std::optional<VertexSet> witness;
  std::string detail;
};

/// Minimally ell-rigid G, ell(V) = 0: the orientation with d^-(v) = ell(v), verified
/// ell-arc-connected. Throws InvalidArgument when ell(V) != 0 or ell(v) < 0.
EquivResult rigid_to_orientation(const MultiGraph& g, const SetFunc& ell);
/// Certifies minimal ell-rigidity from an ell-arc-connected orientation with
/// d^-(v) = ell(v).
EquivResult orientation_to_rigid(const Orientation& d, const SetFunc& ell);

struct PackedOrientation {
  bool success = false;
  Orientation orientation;
  std::vector<EdgeId> h0;
  std::vector<EdgeId> h1;  ///< r1-rooted l-arc-connected
  std::vector<EdgeId> h2;  ///< r2-rooted ell-arc-connected
  std::vector<EdgeId> rest;
  std::optional<StructureCertificate> deficiency;
  std::vector<std::string> checks;
};

/// Orientation of G with edge-disjoint H1, H2 satisfying d^-_{H1} = l - r1,
/// d^-_{H2} = ell - r2 and d^+(v) <= ceil(d(v)/2) (floor at `u`). Unless forced, the pack61
/// hypothesis must hold (n <= 14).
PackedOrientation packed_orientation(const MultiGraph& g, const SetFunc& l, const SetFunc& ell,
                                     const std::vector<Count>& r1, const std::vector<Count>& r2,
                                     std::optional<VertexId> u = std::nullopt,
                                     bool force = false);

/// H's orientation restricted to the listed edges, on a copy of H with only those edges.
Orientation sub_orientation(const Orientation& d, const std::vector<EdgeId>& ids);

struct OddForest {
  std::vector<EdgeId> edges;
  bool bound_achieved = false;
  std::vector<Count> bound;  ///< ceil(d(v)/m)
};

/// Spanning forest with every degree odd, then tree swaps that reduce the excess over
/// ceil(d(v)/m). Throws InvalidArgument on a component of odd order.
OddForest odd_forest(const MultiGraph& g, Count m);

struct FactorResult {
  bool success = false;
  std::vector<EdgeId> factor;
  std::vector<EdgeId> forest;
  std::vector<EdgeId> rigid;  ///< the k-rigid part kept inside the factor
  bool forest_bound = false;
  std::string detail;
};

/// k-rigid {r-3, r-1}-factor of an r-regular graph of even order. The connectivity
/// hypothesis is checked unless forced.
FactorResult rigid_factor(const MultiGraph& g, Count k, Count r, bool force = false);

struct RobustOptions {
  std::uint64_t seed = 1;
  int retries = 64;
  int repairs = 256;  ///< cycle reversals per attempt
  bool force = false;
};

struct RobustResult {
  bool verified = false;
  Orientation orientation;
  std::vector<EdgeId> tree;
  std::vector<EdgeId> h;  ///< Eulerian part
  int attempts = 0;
  std::string detail;
};

/// Smooth (2k+1)-arc-strong orientation with every G - v k-arc-strong. When the retry
/// budget runs out the result is returned with verified = false and the reason in detail.
RobustResult robust_arc_strong(const MultiGraph& g, Count k, const RobustOptions& options = {});

}  // namespace rigidpack
