#ifndef SOFTCLUST_TOPOLOGY_HPP
#define SOFTCLUST_TOPOLOGY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "softclust/core.hpp"
#include "softclust/crisp.hpp"

namespace softclust {

struct TopologyViolation {
  int axiom = 0;  // 1: null/absolute missing, 2: intersection, 3: union
  CellMask a = 0;
  CellMask b = 0;
  CellMask missing = 0;
};

struct TopologyCheck {
  bool valid = false;
  std::optional<TopologyViolation> violation;
};

/// Validates the three axioms over a family (deduplicated, canonical
/// ascending order). The witness is the first violating pair in that order,
/// intersection checked before union.
TopologyCheck check_topology_family(const CarrierPtr& carrier, std::vector<CellMask> family);

/// Point-wise evaluation strategy for operators quantified over open
/// neighborhoods. `fast` tests only the minimal open neighborhood, which is
/// decisive in a finite topology; `definitional` quantifies over every open.
enum class EvalMode { fast, definitional };

class SoftTopology {
 public:
  static constexpr std::size_t kDefaultGeneratedCap = std::size_t{1} << 16;

  /// Validates and throws InputError on an axiom violation.
  static SoftTopology from_opens(CarrierPtr carrier, std::vector<CellMask> opens);
  /// Skips the axiom check. Only for families already closed by
  /// construction (cluster topologies, generated closures); the law suite
  /// re-validates those on every sweep.
  static SoftTopology from_opens_unchecked(CarrierPtr carrier, std::vector<CellMask> opens);
  /// Smallest topology containing the family: worklist closure under
  /// pairwise union/intersection seeded with the null and absolute sets.
  /// ResourceError if the family grows past `cap` members.
  static SoftTopology generate_from_subbase(CarrierPtr carrier,
                                            const std::vector<CellMask>& subbase,
                                            std::size_t cap = kDefaultGeneratedCap);
  static SoftTopology indiscrete(CarrierPtr carrier);
  static SoftTopology discrete(CarrierPtr carrier);

  const CarrierPtr& carrier() const { return carrier_; }
  const std::vector<CellMask>& opens() const { return opens_; }
  bool is_open(CellMask m) const;
  bool is_closed(CellMask m) const { return is_open(carrier_->full() & ~m); }
  /// Intersection of every open containing the cell; open itself.
  CellMask min_nbhd(int cell) const { return min_nbhd_[cell]; }
  const std::vector<CellMask>& min_nbhds() const { return min_nbhd_; }

  friend bool operator==(const SoftTopology& a, const SoftTopology& b) {
    return a.opens_ == b.opens_ && a.carrier_->same_as(*b.carrier_);
  }

 private:
  SoftTopology(CarrierPtr carrier, std::vector<CellMask> opens);
  CarrierPtr carrier_;
  std::vector<CellMask> opens_;
  std::vector<CellMask> min_nbhd_;
};

SoftSet minimal_nbhd(const SoftTopology& t, SoftPoint p);

/// Smallest closed superset / largest open subset.
SoftSet closure(const SoftTopology& t, const SoftSet& a);
SoftSet interior(const SoftTopology& t, const SoftSet& a);

/// Limit points: cells whose every open neighborhood meets a \ {cell}.
SoftSet derived_set(const SoftTopology& t, const SoftSet& a, EvalMode mode = EvalMode::fast);

/// True iff every open is a union of members (the empty union yields the
/// null set, so it need not appear among the members). Throws InputError
/// when a member is not open.
bool is_base(const SoftTopology& t, const std::vector<CellMask>& members);

/// Fibers of a family at one parameter, deduplicated and sorted.
std::vector<std::uint64_t> slice_family(const CarrierPtr& carrier,
                                        const std::vector<CellMask>& family, int parameter);
CrispTopology slice_topology(const SoftTopology& t, int parameter);

/// The same open family viewed as a crisp topology on the cell grid.
CrispTopology graph_topology(const SoftTopology& t);

}  // namespace softclust

#endif
