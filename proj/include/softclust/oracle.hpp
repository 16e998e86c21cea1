#ifndef SOFTCLUST_ORACLE_HPP
#define SOFTCLUST_ORACLE_HPP

#include "softclust/crisp.hpp"

namespace softclust {

/// Crisp ideal-topology kernel. Deliberately self-contained: it quantifies
/// over every open of the crisp family and never touches the soft engine's
/// minimal-neighborhood tables, so agreement between the two sides is a
/// meaningful check rather than a restatement.
struct CrispContext {
  CrispTopology topology;
  CrispIdeal ideal;
};

/// Classical local function: points whose every open neighborhood meets
/// `a` outside the ideal.
std::uint64_t crisp_local_function(const CrispContext& cctx, std::uint64_t a);

/// The topology whose closed sets are exactly {f : local(f) subset of f}.
/// Filters all 2^ground subsets; ResourceError past `max_ground`.
CrispTopology crisp_ideal_topology(const CrispContext& cctx, int max_ground = 16);

/// Union closure of {open - member : member subset of ideal top}; equals
/// the ideal topology above, kept as a second route for cross-checks.
CrispTopology crisp_ideal_topology_from_base(const CrispContext& cctx, int max_ground = 16);

}  // namespace softclust

#endif
