#include "softclust/cluster.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "softclust/oracle.hpp"

namespace softclust {

ClusterContext::ClusterContext(SoftTopology topology_in, SoftIdeal ideal_in)
    : topology(std::move(topology_in)), ideal(std::move(ideal_in)) {
  if (!topology.carrier()->same_as(*ideal.carrier())) throw InputError("carrier mismatch");
}

CellMask cluster_mask(const std::vector<CellMask>& min_nbhds, CellMask ideal_top, CellMask r) {
  CellMask out = 0;
  CellMask reachable = r & ~ideal_top;
  for (std::size_t cell = 0; cell < min_nbhds.size(); ++cell) {
    if (min_nbhds[cell] & reachable) out |= CellMask{1} << cell;
  }
  return out;
}

SoftSet cluster_set(const ClusterContext& ctx, const SoftSet& r, EvalMode mode) {
  require_same_carrier(SoftSet(ctx.carrier(), 0), r);
  if (mode == EvalMode::fast) {
    return SoftSet(ctx.carrier(),
                   cluster_mask(ctx.topology.min_nbhds(), ctx.ideal.top(), r.bits()));
  }
  int cells = ctx.carrier()->cells();
  CellMask out = 0;
  for (int cell = 0; cell < cells; ++cell) {
    bool cluster = true;
    for (CellMask open : ctx.topology.opens()) {
      if (((open >> cell) & 1u) == 0) continue;
      if (ctx.ideal.contains(r.bits() & open)) {
        cluster = false;
        break;
      }
    }
    if (cluster) out |= CellMask{1} << cell;
  }
  return SoftSet(ctx.carrier(), out);
}

ClusterClassification classify(const ClusterContext& ctx, const SoftSet& r) {
  CellMask c = cluster_set(ctx, r).bits();
  CellMask complement = ctx.carrier()->full() & ~r.bits();
  CellMask c_of_complement = cluster_set(ctx, SoftSet(ctx.carrier(), complement)).bits();
  ClusterClassification out;
  out.c_closed = (c & ~r.bits()) == 0;
  out.c_open = (c_of_complement & ~complement) == 0;
  out.c_crowded = (r.bits() & ~c) == 0;
  out.c_regular = c == r.bits();
  return out;
}

namespace {

std::vector<CellMask> cluster_opens_by_enumeration(const ClusterContext& ctx) {
  const CarrierPtr& carrier = ctx.carrier();
  int cells = carrier->cells();
  if (cells > Carrier::kMaxExhaustiveCells) {
    throw ResourceError("closed-set enumeration requires at most " +
                        std::to_string(Carrier::kMaxExhaustiveCells) + " cells");
  }
  CellMask full = carrier->full();
  const std::vector<CellMask>& nbhds = ctx.topology.min_nbhds();
  CellMask top = ctx.ideal.top();
  std::vector<CellMask> opens;
  for (CellMask r = 0; r <= full; ++r) {
    CellMask c = cluster_mask(nbhds, top, r);
    if ((c & ~r) == 0) opens.push_back(full & ~r);
  }
  std::sort(opens.begin(), opens.end());
  return opens;
}

std::vector<CellMask> cluster_opens_by_base(const ClusterContext& ctx, std::size_t cap) {
  const CarrierPtr& carrier = ctx.carrier();
  int cells = carrier->cells();
  if (cells > Carrier::kMaxExhaustiveCells) {
    throw ResourceError("cluster topology membership table requires at most " +
                        std::to_string(Carrier::kMaxExhaustiveCells) + " cells");
  }
  CellMask top = ctx.ideal.top();
  std::vector<bool> present(std::size_t{1} << cells, false);
  for (CellMask open : ctx.topology.opens()) {
    CellMask scope = open & top;
    if (static_cast<std::size_t>(std::popcount(scope)) > 0 &&
        (std::size_t{1} << std::popcount(scope)) > cap) {
      throw ResourceError("per-open ideal subset enumeration exceeds the cap of " +
                          std::to_string(cap));
    }
    CellMask sub = scope;
    while (true) {
      present[open & ~sub] = true;
      if (sub == 0) break;
      sub = (sub - 1) & scope;
    }
  }
  std::vector<CellMask> opens;
  CellMask full = carrier->full();
  for (CellMask m = 0; m <= full; ++m) {
    if (present[m]) opens.push_back(m);
  }
  return opens;
}

}  // namespace

SoftTopology cluster_topology(const ClusterContext& ctx, ClusterRoute route, std::size_t cap) {
  std::vector<CellMask> opens;
  switch (route) {
    case ClusterRoute::closed_enumeration:
      opens = cluster_opens_by_enumeration(ctx);
      break;
    case ClusterRoute::open_minus_ideal:
      opens = cluster_opens_by_base(ctx, cap);
      break;
    case ClusterRoute::automatic:
      if (ctx.carrier()->cells() <= Carrier::kMaxExhaustiveCells) {
        opens = cluster_opens_by_enumeration(ctx);
      } else {
        opens = cluster_opens_by_base(ctx, cap);
      }
      break;
  }
  return SoftTopology::from_opens_unchecked(ctx.carrier(), std::move(opens));
}

AdherenceReport is_adherent(const ClusterContext& ctx) {
  const CarrierPtr& carrier = ctx.carrier();
  int cells = carrier->cells();
  if (cells > Carrier::kMaxExhaustiveCells) {
    throw ResourceError("adherence check requires at most " +
                        std::to_string(Carrier::kMaxExhaustiveCells) + " cells");
  }
  CellMask full = carrier->full();
  const std::vector<CellMask>& nbhds = ctx.topology.min_nbhds();
  CellMask top = ctx.ideal.top();
  for (CellMask r = 0; r <= full; ++r) {
    CellMask leftover = r & ~cluster_mask(nbhds, top, r);
    if (leftover & ~top) {
      return AdherenceReport{false, SoftSet(carrier, r)};
    }
  }
  return AdherenceReport{true, std::nullopt};
}

Decomposition decompose_crowded(const ClusterContext& ctx, const SoftSet& r) {
  SoftSet c = cluster_set(ctx, r);
  return Decomposition{DecompositionKind::crowded_plus_ideal, r & c, r - c};
}

Decomposition decompose_regular(const ClusterContext& ctx, const SoftSet& r) {
  SoftSet c = cluster_set(ctx, r);
  if (!is_subset(c, r))
    throw InputError("decompose requires a cluster-closed set: " + to_text(r));
  return Decomposition{DecompositionKind::regular_plus_ideal, c, r - c};
}

Decomposition decompose_closed_plus_ideal(const ClusterContext& ctx, const SoftSet& r) {
  SoftSet c = cluster_set(ctx, r);
  if (!is_subset(c, r))
    throw InputError("decompose requires a cluster-closed set: " + to_text(r));
  return Decomposition{DecompositionKind::closed_plus_ideal, c, r - c};
}

JoinFactorReport check_prop_4_9(const SoftTopology& t, const SoftIdeal& i, const SoftIdeal& j,
                                const SoftSet& r) {
  if (!t.carrier()->same_as(*i.carrier()) || !t.carrier()->same_as(*j.carrier()))
    throw InputError("carrier mismatch");
  require_same_carrier(SoftSet(t.carrier(), 0), r);

  JoinFactorReport out;
  const std::vector<CellMask>& nbhds = t.min_nbhds();
  CellMask join_top = i.top() | j.top();
  out.lhs = cluster_mask(nbhds, join_top, r.bits());
  out.stated_factor_i = cluster_mask(nbhds, i.top(), r.bits());
  out.stated_factor_j = cluster_mask(nbhds, j.top(), r.bits());
  out.stated_rhs = out.stated_factor_i & out.stated_factor_j;
  out.stated_holds = out.lhs == out.stated_rhs;

  SoftTopology tc_i = cluster_topology(ClusterContext(t, i));
  SoftTopology tc_j = cluster_topology(ClusterContext(t, j));
  out.refined_factor_i = cluster_mask(tc_j.min_nbhds(), i.top(), r.bits());
  out.refined_factor_j = cluster_mask(tc_i.min_nbhds(), j.top(), r.bits());
  out.refined_rhs = out.refined_factor_i & out.refined_factor_j;
  out.refined_holds = out.lhs == out.refined_rhs;
  return out;
}

FiniteIdealReport check_thm_5_1(const SoftTopology& t) {
  const CarrierPtr& carrier = t.carrier();
  int cells = carrier->cells();
  if (cells > Carrier::kMaxExhaustiveCells) {
    throw ResourceError("finite-ideal report requires at most " +
                        std::to_string(Carrier::kMaxExhaustiveCells) + " cells");
  }
  CellMask full = carrier->full();
  SoftIdeal finite_members = SoftIdeal::full(carrier);
  ClusterContext ctx(t, finite_members);

  FiniteIdealReport out;
  out.all_c_closed_are_closed = true;
  for (CellMask r = 0; r <= full; ++r) {
    ClusterClassification cls = classify(ctx, SoftSet(carrier, r));
    if (cls.c_closed && !t.is_closed(r)) {
      out.all_c_closed_are_closed = false;
      break;
    }
  }
  out.all_soft_sets_closed = true;
  for (CellMask r = 0; r <= full; ++r) {
    if (!t.is_closed(r)) {
      out.all_soft_sets_closed = false;
      break;
    }
  }
  out.closed_biconditional = out.all_c_closed_are_closed == out.all_soft_sets_closed;

  SoftTopology tc = cluster_topology(ctx);
  out.t_equals_tc = t == tc;
  out.complements_of_finite_open = true;
  for (CellMask r = 0; r <= full; ++r) {
    if (!t.is_open(full & ~r)) {
      out.complements_of_finite_open = false;
      break;
    }
  }
  out.topology_biconditional = out.t_equals_tc == out.complements_of_finite_open;
  out.note =
      "every soft set over a finite carrier is finite, so the ideal of finite "
      "soft sets is the full ideal; its cluster operator is constantly null and "
      "both equivalences reduce to discreteness of the topology";
  return out;
}

SliceCommutationReport slice_commutation(const ClusterContext& ctx, int parameter) {
  const CarrierPtr& carrier = ctx.carrier();
  if (parameter < 0 || parameter >= carrier->parameter_count())
    throw InputError("parameter index out of range");

  SliceCommutationReport out;
  out.parameter = parameter;
  out.parameter_label = carrier->parameters()[parameter];
  out.cluster_then_slice = slice_topology(cluster_topology(ctx), parameter);
  CrispContext cctx{slice_topology(ctx.topology, parameter), slice_ideal(ctx.ideal, parameter)};
  out.slice_then_crisp = crisp_ideal_topology(cctx);
  out.equal = out.cluster_then_slice == out.slice_then_crisp;
  return out;
}

}  // namespace softclust
