#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "rigidpack/error.hpp"
#include "rigidpack/graph.hpp"
#include "rigidpack/set_function.hpp"

namespace rigidpack {

using Rational = boost::rational<Count>;

/// Largest order accepted by the exhaustive (A, B) sweeps.
inline constexpr int kHypothesisMaxN = 14;

struct HypothesisReport {
  std::string tag;
  bool holds = true;
  std::optional<std::pair<VertexSet, VertexSet>> pair;  ///< failing (A, B)
  std::optional<VertexSet> set;                         ///< failing S
  std::optional<VertexId> vertex;                       ///< failing degree clause
  /// lambda of pack63: min |X| with e(X) > sum ell(v) - ell(X); nullopt if no such X.
  std::optional<Count> lambda;
  std::string detail;
};

/// Raised when a construction is refused because its hypothesis fails.
class HypothesisFailure : public InvalidArgument {
 public:
  explicit HypothesisFailure(HypothesisReport report)
      : InvalidArgument(report.tag + " hypothesis fails: " + report.detail),
        report_(std::move(report)) {}
  const HypothesisReport& report() const { return report_; }

 private:
  HypothesisReport report_;
};

/// phi for pack63, given by set size: by_size[|X|] for |X| = 0..n.
struct SizeFunction {
  std::vector<Rational> by_size;
  static SizeFunction constant(int n, Rational value);
  Rational operator()(VertexSet x) const { return by_size[x.size()]; }
};

/// d_{G-B}(A) >= ell(A u B) - sum_B ell(v) + ell(V \ A) - ell(V) for all disjoint A, B.
HypothesisReport check_necessary_rigid(const MultiGraph& g, const SetFunc& ell);
/// k-edge-connected, essentially (2k-1)-edge-connected, and G - v (k-1)-edge-connected.
/// Flow based; any order.
HypothesisReport check_cor32(const MultiGraph& g, Count k);
/// Degree clause d(v) >= 2 ell(v) and, for A u B proper with e(A u B) above the sparsity
/// bound, d_{G-B}(A) >= 2 ell(A u B) - sum_B ell(v); excluded set size <= ell(V).
HypothesisReport check_sufficient_rigid(const MultiGraph& g, const SetFunc& ell,
                                        Count excluded);
/// As check_sufficient_rigid with the extra 2 l(A u B) term for nonempty A, degree clause
/// d(v) >= 2 ell(v) + 2 l(v), and excluded set size <= l(V) + ell(V).
HypothesisReport check_pack61(const MultiGraph& g, const SetFunc& l, const SetFunc& ell,
                              Count excluded);
/// Refined condition with lambda, phi and epsilon; `excluded` is |M|.
HypothesisReport check_pack63(const MultiGraph& g, const SetFunc& l, const SetFunc& ell,
                              const SizeFunction& phi, Count excluded);
/// Conditions 1 and 2 of the rho-weighted degree theorem; requires k > 2 and
/// 0 <= rho <= d.
HypothesisReport check_pack81(const MultiGraph& g, const SetFunc& l, const SetFunc& ell,
                              Rational k, const std::vector<Count>& rho);
/// d_{G-B}(A) >= l(A u B) - sum_B ell(v) for disjoint A, B with A nonempty, A u B proper.
HypothesisReport check_weakly_connected(const MultiGraph& g, const SetFunc& ell,
                                        const SetFunc& l);

}  // namespace rigidpack
