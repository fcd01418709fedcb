#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigidpack/graph.hpp"
#include "rigidpack/set_function.hpp"

namespace rigidpack {

struct PackPart {
  SetFunc func;
  std::vector<EdgeId> edges;  ///< ascending
};

/// Edge-disjoint sparse spanning subgraphs of a host. parts, uncovered and forbidden
/// partition the host's edges.
struct Packing {
  MultiGraph host;
  std::vector<PackPart> parts;
  std::vector<EdgeId> uncovered;
  std::vector<EdgeId> forbidden;

  /// |edges| equals sum_v f(v) - f(V).
  bool full(std::size_t part) const;
  bool all_full() const;
  Count covered() const;
  /// Part index per edge, -1 for uncovered, -2 for forbidden.
  std::vector<int> owners() const;
};

/// Maximum packing of f_i-sparse subgraphs avoiding `forbidden`, by breadth-first
/// augmenting search over single-edge replacements (lowest edge id first).
Packing matroid_union_pack(const MultiGraph& g, const std::vector<SetFunc>& funcs,
                           const std::vector<EdgeId>& forbidden = {});

/// Throws InternalError unless the parts are disjoint, sparse and, with the uncovered and
/// forbidden edges, partition E.
void verify_packing(const Packing& pk);

struct StructureCertificate {
  Partition partition;
  /// G_0: uncovered edges and every edge reachable from them by replacements.
  std::vector<EdgeId> closure;
  bool first_part_connected = false;  ///< F[A] is partition-connected for every part A
  bool no_uncovered_crossing = false;
  bool rigid_sets_inside = false;
  /// For each checked edge and later part: the part index, edge, and minimal rigid set.
  struct RigidSet {
    int part;
    EdgeId edge;
    VertexSet set;
  };
  std::vector<RigidSet> rigid_sets;
};

/// Structure partition of a maximum packing. Throws InternalError naming the property that
/// fails verification.
StructureCertificate structure_partition(const Packing& pk);

struct Decomposition {
  std::vector<std::vector<EdgeId>> parts;
  std::vector<EdgeId> leftover;
};

/// p edge-disjoint spanning ell-rigid subgraphs. Throws InvalidArgument when the adjacency
/// clause fails (naming the edge) or when G is not p*ell-rigid (naming the deficit).
Decomposition decompose_p_rigid(const MultiGraph& g, const SetFunc& ell, Count p);

enum class DegreeMode { None, Halved, Rho };

struct DegreeSpec {
  DegreeMode mode = DegreeMode::None;
  std::optional<VertexId> ceil_vertex;  ///< halved: this vertex gets floor(d/2) + l + ell
  Count k_num = 3;                      ///< rho: k = k_num / k_den
  Count k_den = 1;
  std::vector<Count> rho;
};

struct PartitionRigidResult {
  Packing packing;
  int l_part = 0;    ///< index of the l part in packing.parts
  int ell_part = 1;  ///< index of the ell part
  std::vector<EdgeId> h;             ///< l part union ell part
  std::vector<Count> degree_bound;   ///< per vertex, empty for DegreeMode::None
  bool success = false;              ///< every part full and the degree bound holds
  std::optional<StructureCertificate> deficiency;
};

/// Packing of an l-partition-connected and an ell-rigid spanning subgraph avoiding
/// `forbidden`, optionally with the degree-reducing extra part. Hypotheses are checked by
/// the caller.
PartitionRigidResult pack_partition_rigid(const MultiGraph& g, const SetFunc& l,
                                          const SetFunc& ell,
                                          const std::vector<EdgeId>& forbidden,
                                          const DegreeSpec& degree);

struct PresetResult {
  std::string preset;
  PartitionRigidResult base;
  std::vector<std::vector<EdgeId>> trees;
  std::vector<std::vector<EdgeId>> rigid;       ///< k-rigid parts G_i
  std::vector<std::vector<EdgeId>> connectors;  ///< thm10_2: l_{k-1,0} parts G'_i
  std::vector<std::vector<EdgeId>> h_parts;     ///< thm10_2: H_i = G_i u G'_i
  std::vector<EdgeId> h;                        ///< union of the constructed subgraphs
  std::vector<Count> degree_bound;
  std::vector<std::string> checks;  ///< verified properties, human readable
};

/// Presets throw HypothesisFailure when the hypothesis fails, unless forced; outputs are
/// always post-verified.

/// m spanning trees and p spanning k-rigid subgraphs with
/// d_H(v) <= ceil(d(v)/2) + kp + m. Requires k >= 2.
PresetResult preset_thm10_1(const MultiGraph& g, Count k, Count p, Count m, bool force = false);
/// m trees and p spanning k-rigid (2k-1)-edge-connected H_i with
/// d_H(v) <= ceil(d(v)/2) + 2kp - p + m. Requires k >= 2.
PresetResult preset_thm10_2(const MultiGraph& g, Count k, Count p, Count m, bool force = false);
/// Spanning 2-rigid H with d_H(v) <= ceil(d(v)/k) + 2 on the partite set `side`,
/// k = k_num / k_den >= 1.
PresetResult preset_cor82(const MultiGraph& g, Count k_num, Count k_den, VertexSet side,
                          bool force = false);

/// Edges of g not listed in `used`, ascending.
std::vector<EdgeId> complement_edges(const MultiGraph& g, const std::vector<EdgeId>& used);

}  // namespace rigidpack
