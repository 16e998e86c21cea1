#include "softclust/ideal.hpp"

#include <algorithm>

namespace softclust {

IdealCheck check_ideal_family(const CarrierPtr& carrier, std::vector<CellMask> family) {
  for (CellMask m : family) {
    if (m & ~carrier->full()) throw InputError("family member has cells outside the carrier grid");
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  IdealCheck out;
  if (family.empty()) {
    out.violation = IdealViolation{3, 0, 0, 0};
    return out;
  }
  auto member = [&](CellMask m) {
    return std::binary_search(family.begin(), family.end(), m);
  };
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      CellMask uni = family[i] | family[j];
      if (!member(uni)) {
        out.violation = IdealViolation{1, family[i], family[j], uni};
        return out;
      }
    }
  }
  // Down closure: every submask of every member is a member. Checking
  // submasks of the top suffices once union closure holds, but the scan
  // below reports the first offending (member, submask) pair directly.
  for (CellMask m : family) {
    CellMask sub = m;
    while (true) {
      if (!member(sub)) {
        out.violation = IdealViolation{2, m, 0, sub};
        return out;
      }
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
  }
  out.valid = true;
  out.top = family.back();
  return out;
}

SoftIdeal::SoftIdeal(CarrierPtr carrier, CellMask top) : carrier_(std::move(carrier)), top_(top) {
  if (top_ & ~carrier_->full()) throw InputError("ideal top has cells outside the carrier grid");
}

SoftIdeal SoftIdeal::from_generators(CarrierPtr carrier,
                                     const std::vector<CellMask>& generators) {
  CellMask top = 0;
  for (CellMask g : generators) {
    if (g & ~carrier->full()) throw InputError("generator has cells outside the carrier grid");
    top |= g;
  }
  return SoftIdeal(std::move(carrier), top);
}

SoftIdeal SoftIdeal::full(CarrierPtr carrier) {
  CellMask top = carrier->full();
  return SoftIdeal(std::move(carrier), top);
}

bool SoftIdeal::contains(const SoftSet& a) const {
  if (!a.carrier()->same_as(*carrier_)) throw InputError("carrier mismatch");
  return contains(a.bits());
}

SoftIdeal ideal_join(const SoftIdeal& i, const SoftIdeal& j) {
  if (!i.carrier()->same_as(*j.carrier())) throw InputError("carrier mismatch");
  return SoftIdeal(i.carrier(), i.top() | j.top());
}

SoftIdeal ideal_meet(const SoftIdeal& i, const SoftIdeal& j) {
  if (!i.carrier()->same_as(*j.carrier())) throw InputError("carrier mismatch");
  return SoftIdeal(i.carrier(), i.top() & j.top());
}

CrispIdeal slice_ideal(const SoftIdeal& i, int parameter) {
  return CrispIdeal{i.carrier()->element_count(),
                    fiber_mask(i.top_set(), parameter)};
}

bool is_sigma_ideal(const SoftIdeal&) { return true; }

}  // namespace softclust
