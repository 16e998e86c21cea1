#ifndef SOFTCLUST_CLUSTER_HPP
#define SOFTCLUST_CLUSTER_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "softclust/core.hpp"
#include "softclust/crisp.hpp"
#include "softclust/ideal.hpp"
#include "softclust/topology.hpp"

namespace softclust {

/// The immutable (topology, ideal) pairing every cluster operator is
/// evaluated against.
struct ClusterContext {
  ClusterContext(SoftTopology topology, SoftIdeal ideal);
  SoftTopology topology;
  SoftIdeal ideal;
  const CarrierPtr& carrier() const { return topology.carrier(); }
};

/// Cluster set of r: the soft points whose every open neighborhood meets r
/// outside the ideal. With a down-closed ideal the minimal open
/// neighborhood settles the quantifier, which is what `fast` relies on.
SoftSet cluster_set(const ClusterContext& ctx, const SoftSet& r, EvalMode mode = EvalMode::fast);

/// Raw-mask fast path used by the harness sweeps.
CellMask cluster_mask(const std::vector<CellMask>& min_nbhds, CellMask ideal_top, CellMask r);

struct ClusterClassification {
  bool c_closed = false;   // cluster_set(r) subset of r
  bool c_open = false;     // complement is c-closed
  bool c_crowded = false;  // r subset of cluster_set(r)
  bool c_regular = false;  // cluster_set(r) == r
};

ClusterClassification classify(const ClusterContext& ctx, const SoftSet& r);

enum class ClusterRoute {
  automatic,
  closed_enumeration,  // keep complements of c-closed sets (all 2^cells masks)
  open_minus_ideal,    // {open - member : member subset of ideal top}
};

/// The topology whose closed sets are exactly the c-closed sets. Both
/// routes must produce it; `automatic` picks by the carrier size and caps.
SoftTopology cluster_topology(const ClusterContext& ctx,
                              ClusterRoute route = ClusterRoute::automatic,
                              std::size_t cap = std::size_t{1} << 16);

struct AdherenceReport {
  bool adherent = false;
  std::optional<SoftSet> witness;  // r with r - cluster_set(r) outside the ideal
};

/// Quantifies over every soft set; requires cells within the exhaustive cap.
AdherenceReport is_adherent(const ClusterContext& ctx);

enum class DecompositionKind { crowded_plus_ideal, regular_plus_ideal, closed_plus_ideal };

struct Decomposition {
  DecompositionKind kind;
  SoftSet part1;
  SoftSet part2;
};

/// r = (r n c(r)) disjoint-union (r - c(r)); part1 c-crowded, part2 in the ideal.
Decomposition decompose_crowded(const ClusterContext& ctx, const SoftSet& r);
/// For c-closed r: part1 = c(r) is c-regular, part2 = r - c(r) in the ideal;
/// the unique such disjoint pair. InputError when r is not c-closed.
Decomposition decompose_regular(const ClusterContext& ctx, const SoftSet& r);
/// For c-closed r: part1 = c(r) is soft closed, part2 = r - c(r) in the ideal.
Decomposition decompose_closed_plus_ideal(const ClusterContext& ctx, const SoftSet& r);

/// Evaluates both candidate identities for the cluster operator of a join
/// of ideals: the plain product form over the original topology, and the
/// refined form whose factors are taken over each other's cluster topology.
struct JoinFactorReport {
  bool stated_holds = false;
  bool refined_holds = false;
  CellMask lhs = 0;             // cluster over (topology, join ideal)
  CellMask stated_factor_i = 0;  // cluster over (topology, i)
  CellMask stated_factor_j = 0;  // cluster over (topology, j)
  CellMask stated_rhs = 0;
  CellMask refined_factor_i = 0;  // cluster over (cluster_topology(j), i)
  CellMask refined_factor_j = 0;  // cluster over (cluster_topology(i), j)
  CellMask refined_rhs = 0;
};

JoinFactorReport check_prop_4_9(const SoftTopology& t, const SoftIdeal& i, const SoftIdeal& j,
                                const SoftSet& r);

/// Behaviour under the ideal of finite soft sets, which on a finite carrier
/// is the full ideal: both equivalences collapse to discreteness of the
/// topology. The report carries that note and both independently computed
/// sides of each biconditional.
struct FiniteIdealReport {
  bool all_c_closed_are_closed = false;
  bool all_soft_sets_closed = false;
  bool closed_biconditional = false;
  bool t_equals_tc = false;
  bool complements_of_finite_open = false;
  bool topology_biconditional = false;
  std::string note;
};

FiniteIdealReport check_thm_5_1(const SoftTopology& t);

/// Slicing the cluster topology at a parameter against the crisp oracle's
/// ideal topology of the sliced inputs.
struct SliceCommutationReport {
  int parameter = 0;
  std::string parameter_label;
  CrispTopology cluster_then_slice;
  CrispTopology slice_then_crisp;
  bool equal = false;
};

SliceCommutationReport slice_commutation(const ClusterContext& ctx, int parameter);

}  // namespace softclust

#endif
