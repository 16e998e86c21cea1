#ifndef SOFTCLUST_IDEAL_HPP
#define SOFTCLUST_IDEAL_HPP

#include <optional>
#include <vector>

#include "softclust/core.hpp"
#include "softclust/crisp.hpp"

namespace softclust {

struct IdealViolation {
  int condition = 0;  // 1: union closure, 2: down closure, 3: empty family
  CellMask a = 0;
  CellMask b = 0;
  CellMask missing = 0;
};

struct IdealCheck {
  bool valid = false;
  std::optional<IdealViolation> violation;
  CellMask top = 0;  // set when valid
};

/// Validates a family as a soft ideal: non-empty, union-closed, closed
/// under soft subsets. On a finite carrier such a family is exactly the
/// down-set of its largest member, which is reported as `top`.
IdealCheck check_ideal_family(const CarrierPtr& carrier, std::vector<CellMask> family);

/// Soft ideal in principal representation: membership is containment in
/// the unique top element.
class SoftIdeal {
 public:
  SoftIdeal(CarrierPtr carrier, CellMask top);

  /// Smallest ideal containing the generators: top is their union.
  static SoftIdeal from_generators(CarrierPtr carrier, const std::vector<CellMask>& generators);
  static SoftIdeal trivial(CarrierPtr carrier) { return SoftIdeal(std::move(carrier), 0); }
  static SoftIdeal full(CarrierPtr carrier);

  const CarrierPtr& carrier() const { return carrier_; }
  CellMask top() const { return top_; }
  bool contains(CellMask m) const { return (m & ~top_) == 0; }
  bool contains(const SoftSet& a) const;
  SoftSet top_set() const { return SoftSet(carrier_, top_); }

  friend bool operator==(const SoftIdeal& a, const SoftIdeal& b) {
    return a.top_ == b.top_ && a.carrier_->same_as(*b.carrier_);
  }

 private:
  CarrierPtr carrier_;
  CellMask top_;
};

/// Smallest ideal containing both; its members are exactly the unions of a
/// member of each.
SoftIdeal ideal_join(const SoftIdeal& i, const SoftIdeal& j);
/// Largest ideal contained in both; members are the common members.
SoftIdeal ideal_meet(const SoftIdeal& i, const SoftIdeal& j);

CrispIdeal slice_ideal(const SoftIdeal& i, int parameter);

/// On a finite carrier countable unions collapse to finite ones, so every
/// soft ideal satisfies the countable-union condition.
bool is_sigma_ideal(const SoftIdeal& i);

}  // namespace softclust

#endif
