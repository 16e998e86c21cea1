#include "softclust/topology.hpp"

#include <algorithm>
#include <set>

namespace softclust {

namespace {

void sort_dedup(std::vector<CellMask>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

void check_family_in_grid(const CarrierPtr& carrier, const std::vector<CellMask>& family) {
  for (CellMask m : family) {
    if (m & ~carrier->full()) throw InputError("family member has cells outside the carrier grid");
  }
}

}  // namespace

TopologyCheck check_topology_family(const CarrierPtr& carrier, std::vector<CellMask> family) {
  check_family_in_grid(carrier, family);
  sort_dedup(family);
  CellMask full = carrier->full();
  auto member = [&](CellMask m) {
    return std::binary_search(family.begin(), family.end(), m);
  };

  TopologyCheck out;
  if (!member(0) || !member(full)) {
    out.violation = TopologyViolation{1, 0, 0, member(0) ? full : CellMask{0}};
    return out;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      CellMask inter = family[i] & family[j];
      if (!member(inter)) {
        out.violation = TopologyViolation{2, family[i], family[j], inter};
        return out;
      }
      CellMask uni = family[i] | family[j];
      if (!member(uni)) {
        out.violation = TopologyViolation{3, family[i], family[j], uni};
        return out;
      }
    }
  }
  out.valid = true;
  return out;
}

SoftTopology::SoftTopology(CarrierPtr carrier, std::vector<CellMask> opens)
    : carrier_(std::move(carrier)), opens_(std::move(opens)) {
  sort_dedup(opens_);
  min_nbhd_.assign(carrier_->cells(), carrier_->full());
  for (int cell = 0; cell < carrier_->cells(); ++cell) {
    for (CellMask open : opens_) {
      if ((open >> cell) & 1u) min_nbhd_[cell] &= open;
    }
  }
}

SoftTopology SoftTopology::from_opens(CarrierPtr carrier, std::vector<CellMask> opens) {
  TopologyCheck check = check_topology_family(carrier, opens);
  if (!check.valid) {
    const TopologyViolation& v = *check.violation;
    std::string what;
    switch (v.axiom) {
      case 1:
        what = v.missing == 0 ? "null set missing" : "absolute set missing";
        break;
      case 2:
        what = "not closed under intersection: " + mask_to_text(carrier, v.a) + " n " +
               mask_to_text(carrier, v.b);
        break;
      default:
        what = "not closed under union: " + mask_to_text(carrier, v.a) + " u " +
               mask_to_text(carrier, v.b);
    }
    throw InputError("not a soft topology: " + what);
  }
  sort_dedup(opens);
  return SoftTopology(std::move(carrier), std::move(opens));
}

SoftTopology SoftTopology::from_opens_unchecked(CarrierPtr carrier,
                                                std::vector<CellMask> opens) {
  return SoftTopology(std::move(carrier), std::move(opens));
}

SoftTopology SoftTopology::generate_from_subbase(CarrierPtr carrier,
                                                 const std::vector<CellMask>& subbase,
                                                 std::size_t cap) {
  check_family_in_grid(carrier, subbase);
  std::set<CellMask> family(subbase.begin(), subbase.end());
  family.insert(0);
  family.insert(carrier->full());

  // Pairwise closure; for a finite family this reaches the smallest topology.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<CellMask> snapshot(family.begin(), family.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        changed |= family.insert(snapshot[i] & snapshot[j]).second;
        changed |= family.insert(snapshot[i] | snapshot[j]).second;
      }
    }
    if (family.size() > cap) {
      throw ResourceError("generated topology exceeds the cap of " + std::to_string(cap) +
                          " members");
    }
  }
  return SoftTopology(std::move(carrier), std::vector<CellMask>(family.begin(), family.end()));
}

SoftTopology SoftTopology::indiscrete(CarrierPtr carrier) {
  CellMask full = carrier->full();
  return SoftTopology(std::move(carrier), {0, full});
}

SoftTopology SoftTopology::discrete(CarrierPtr carrier) {
  if (carrier->cells() > Carrier::kMaxExhaustiveCells) {
    throw ResourceError("discrete topology enumeration requires at most " +
                        std::to_string(Carrier::kMaxExhaustiveCells) + " cells");
  }
  std::vector<CellMask> opens;
  opens.reserve(std::size_t{1} << carrier->cells());
  for (CellMask m = 0; m <= carrier->full(); ++m) opens.push_back(m);
  return SoftTopology(std::move(carrier), std::move(opens));
}

bool SoftTopology::is_open(CellMask m) const {
  return std::binary_search(opens_.begin(), opens_.end(), m);
}

SoftSet minimal_nbhd(const SoftTopology& t, SoftPoint p) {
  const CarrierPtr& carrier = t.carrier();
  if (p.parameter < 0 || p.parameter >= carrier->parameter_count() || p.element < 0 ||
      p.element >= carrier->element_count()) {
    throw InputError("soft point indices out of carrier range");
  }
  return SoftSet(carrier, t.min_nbhd(carrier->cell_index(p.parameter, p.element)));
}

SoftSet closure(const SoftTopology& t, const SoftSet& a) {
  require_same_carrier(SoftSet(t.carrier(), 0), a);
  CellMask full = t.carrier()->full();
  CellMask cl = full;
  for (CellMask open : t.opens()) {
    if ((a.bits() & open) == 0) cl &= full & ~open;
  }
  return SoftSet(t.carrier(), cl);
}

SoftSet interior(const SoftTopology& t, const SoftSet& a) {
  require_same_carrier(SoftSet(t.carrier(), 0), a);
  CellMask in = 0;
  for (CellMask open : t.opens()) {
    if ((open & ~a.bits()) == 0) in |= open;
  }
  return SoftSet(t.carrier(), in);
}

SoftSet derived_set(const SoftTopology& t, const SoftSet& a, EvalMode mode) {
  require_same_carrier(SoftSet(t.carrier(), 0), a);
  int cells = t.carrier()->cells();
  CellMask out = 0;
  for (int cell = 0; cell < cells; ++cell) {
    CellMask punctured = a.bits() & ~(CellMask{1} << cell);
    bool limit;
    if (mode == EvalMode::fast) {
      limit = (t.min_nbhd(cell) & punctured) != 0;
    } else {
      limit = true;
      for (CellMask open : t.opens()) {
        if (((open >> cell) & 1u) && (open & punctured) == 0) {
          limit = false;
          break;
        }
      }
    }
    if (limit) out |= CellMask{1} << cell;
  }
  return SoftSet(t.carrier(), out);
}

bool is_base(const SoftTopology& t, const std::vector<CellMask>& members) {
  for (CellMask m : members) {
    if (!t.is_open(m))
      throw InputError("base candidate is not open: " + mask_to_text(t.carrier(), m));
  }
  for (CellMask open : t.opens()) {
    CellMask covered = 0;
    for (CellMask m : members) {
      if ((m & ~open) == 0) covered |= m;
    }
    if (covered != open) return false;
  }
  return true;
}

std::vector<std::uint64_t> slice_family(const CarrierPtr& carrier,
                                        const std::vector<CellMask>& family, int parameter) {
  if (parameter < 0 || parameter >= carrier->parameter_count())
    throw InputError("parameter index out of range");
  std::vector<std::uint64_t> out;
  out.reserve(family.size());
  for (CellMask m : family) {
    out.push_back(fiber_mask(SoftSet(carrier, m), parameter));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CrispTopology slice_topology(const SoftTopology& t, int parameter) {
  return CrispTopology{t.carrier()->element_count(),
                       slice_family(t.carrier(), t.opens(), parameter)};
}

CrispTopology graph_topology(const SoftTopology& t) {
  return CrispTopology{t.carrier()->cells(), t.opens()};
}

}  // namespace softclust
