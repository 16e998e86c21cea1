#include "softclust/core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace softclust {

Carrier::Carrier(std::vector<std::string> universe, std::vector<std::string> parameters)
    : universe_(std::move(universe)), parameters_(std::move(parameters)) {
  for (int i = 0; i < static_cast<int>(universe_.size()); ++i) {
    universe_index_.emplace(universe_[i], i);
  }
  for (int i = 0; i < static_cast<int>(parameters_.size()); ++i) {
    parameter_index_.emplace(parameters_[i], i);
  }
}

CarrierPtr Carrier::make(std::vector<std::string> universe,
                         std::vector<std::string> parameters) {
  if (universe.empty()) throw InputError("carrier universe must be non-empty");
  if (parameters.empty()) throw InputError("carrier parameter list must be non-empty");
  auto check_labels = [](const std::vector<std::string>& labels, const char* what) {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i].empty())
        throw InputError(std::string(what) + " labels must be non-empty");
      if (i + 1 < sorted.size() && sorted[i] == sorted[i + 1])
        throw InputError(std::string(what) + " label duplicated: " + sorted[i]);
    }
  };
  check_labels(universe, "universe");
  check_labels(parameters, "parameter");
  std::size_t cells = universe.size() * parameters.size();
  if (cells > Carrier::kMaxCells) {
    throw InputError("carrier has " + std::to_string(cells) + " cells, cap is " +
                     std::to_string(Carrier::kMaxCells));
  }
  return CarrierPtr(new Carrier(std::move(universe), std::move(parameters)));
}

int Carrier::parameter_index(const std::string& label) const {
  auto it = parameter_index_.find(label);
  if (it == parameter_index_.end()) throw InputError("unknown parameter label: " + label);
  return it->second;
}

int Carrier::element_index(const std::string& label) const {
  auto it = universe_index_.find(label);
  if (it == universe_index_.end()) throw InputError("unknown element label: " + label);
  return it->second;
}

SoftSet::SoftSet(CarrierPtr carrier, CellMask bits) : carrier_(std::move(carrier)), bits_(bits) {
  if (!carrier_) throw InputError("soft set requires a carrier");
  if (bits_ & ~carrier_->full()) throw InputError("soft set has cells outside its carrier grid");
}

int SoftSet::cell_count() const { return std::popcount(bits_); }

void require_same_carrier(const SoftSet& a, const SoftSet& b) {
  if (a.carrier().get() == b.carrier().get()) return;
  if (!a.carrier()->same_as(*b.carrier())) throw InputError("carrier mismatch");
}

SoftSet make_soft_set(const CarrierPtr& carrier, const FiberMap& fibers) {
  CellMask bits = 0;
  for (const auto& [parameter, elements] : fibers) {
    int p = carrier->parameter_index(parameter);
    for (const auto& element : elements) {
      bits |= CellMask{1} << carrier->cell_index(p, carrier->element_index(element));
    }
  }
  return SoftSet(carrier, bits);
}

SoftSet null_set(const CarrierPtr& carrier) { return SoftSet(carrier, 0); }

SoftSet absolute_set(const CarrierPtr& carrier) { return SoftSet(carrier, carrier->full()); }

SoftSet point_set(const CarrierPtr& carrier, SoftPoint p) {
  if (p.parameter < 0 || p.parameter >= carrier->parameter_count() || p.element < 0 ||
      p.element >= carrier->element_count()) {
    throw InputError("soft point indices out of carrier range");
  }
  return SoftSet(carrier, CellMask{1} << carrier->cell_index(p.parameter, p.element));
}

SoftSet soft_union(const SoftSet& a, const SoftSet& b) {
  require_same_carrier(a, b);
  return SoftSet(a.carrier(), a.bits() | b.bits());
}

SoftSet soft_intersect(const SoftSet& a, const SoftSet& b) {
  require_same_carrier(a, b);
  return SoftSet(a.carrier(), a.bits() & b.bits());
}

SoftSet soft_difference(const SoftSet& a, const SoftSet& b) {
  require_same_carrier(a, b);
  return SoftSet(a.carrier(), a.bits() & ~b.bits());
}

SoftSet soft_complement(const SoftSet& a) {
  return SoftSet(a.carrier(), a.carrier()->full() & ~a.bits());
}

bool is_subset(const SoftSet& a, const SoftSet& b) {
  require_same_carrier(a, b);
  return (a.bits() & ~b.bits()) == 0;
}

std::uint64_t fiber_mask(const SoftSet& a, int parameter) {
  const Carrier& c = *a.carrier();
  if (parameter < 0 || parameter >= c.parameter_count())
    throw InputError("parameter index out of range");
  int n = c.element_count();
  std::uint64_t ones = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return (a.bits() >> (parameter * n)) & ones;
}

std::vector<std::string> fiber(const SoftSet& a, const std::string& parameter) {
  const Carrier& c = *a.carrier();
  std::uint64_t mask = fiber_mask(a, c.parameter_index(parameter));
  std::vector<std::string> out;
  for (int e = 0; e < c.element_count(); ++e) {
    if ((mask >> e) & 1u) out.push_back(c.universe()[e]);
  }
  return out;
}

CellGraph graph_encode(const SoftSet& a) {
  return CellGraph{a.carrier()->cells(), a.bits()};
}

SoftSet graph_decode(const CellGraph& graph, const CarrierPtr& carrier) {
  if (graph.cell_count != carrier->cells())
    throw InputError("cell graph does not match the carrier grid");
  if (graph.bits & ~carrier->full())
    throw InputError("cell graph has cells outside the carrier grid");
  return SoftSet(carrier, graph.bits);
}

std::string mask_to_text(const CarrierPtr& carrier, CellMask bits) {
  std::ostringstream out;
  out << '{';
  for (int p = 0; p < carrier->parameter_count(); ++p) {
    if (p > 0) out << ", ";
    out << carrier->parameters()[p] << ": {";
    bool first = true;
    for (int e = 0; e < carrier->element_count(); ++e) {
      if ((bits >> carrier->cell_index(p, e)) & 1u) {
        if (!first) out << ", ";
        out << carrier->universe()[e];
        first = false;
      }
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

std::string to_text(const SoftSet& a) { return mask_to_text(a.carrier(), a.bits()); }

FiberMap to_fiber_map(const SoftSet& a) {
  FiberMap out;
  const Carrier& c = *a.carrier();
  for (int p = 0; p < c.parameter_count(); ++p) {
    std::vector<std::string> elements;
    for (int e = 0; e < c.element_count(); ++e) {
      if ((a.bits() >> c.cell_index(p, e)) & 1u) elements.push_back(c.universe()[e]);
    }
    out.emplace(c.parameters()[p], std::move(elements));
  }
  return out;
}

}  // namespace softclust
