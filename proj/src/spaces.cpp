#include "softclust/spaces.hpp"

#include <algorithm>

namespace softclust {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t DetRng::next() {
  state_ = splitmix64(state_);
  return state_;
}

std::uint64_t DetRng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and platform-independent.
  if (bound == 0) throw InputError("bounded draw requires a positive bound");
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

std::vector<std::pair<int, int>> carrier_shapes(int cells) {
  std::vector<std::pair<int, int>> shapes;
  for (int p = 1; p <= cells; ++p) {
    if (cells % p == 0) shapes.emplace_back(p, cells / p);
  }
  return shapes;
}

CarrierPtr enumerated_carrier(int parameters, int elements) {
  std::vector<std::string> universe;
  universe.reserve(elements);
  for (int e = 1; e <= elements; ++e) universe.push_back("e" + std::to_string(e));
  std::vector<std::string> params;
  params.reserve(parameters);
  for (int p = 1; p <= parameters; ++p) params.push_back("p" + std::to_string(p));
  return Carrier::make(std::move(universe), std::move(params));
}

std::pair<int, int> default_shape(int cells) {
  std::pair<int, int> best{1, cells};
  for (auto [p, n] : carrier_shapes(cells)) {
    if (p <= n) best = {p, n};
  }
  return best;
}

std::vector<std::vector<CellMask>> enumerate_topologies(int cells) {
  if (cells < 1 || cells > 4)
    throw ResourceError("full topology enumeration is capped at 4 cells");
  const int subset_count = 1 << cells;
  const CellMask full = (CellMask{1} << cells) - 1;
  const std::uint64_t family_count = std::uint64_t{1} << subset_count;

  std::vector<std::vector<CellMask>> out;
  std::vector<CellMask> members;
  for (std::uint64_t fam = 0; fam < family_count; ++fam) {
    if (((fam >> 0) & 1u) == 0) continue;
    if (((fam >> full) & 1u) == 0) continue;
    members.clear();
    for (int m = 0; m < subset_count; ++m) {
      if ((fam >> m) & 1u) members.push_back(static_cast<CellMask>(m));
    }
    bool closed = true;
    for (std::size_t i = 0; i < members.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (((fam >> (members[i] & members[j])) & 1u) == 0 ||
            ((fam >> (members[i] | members[j])) & 1u) == 0) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(members);
  }
  return out;
}

EnumerationStats enumerate_spaces(
    int max_cells, const std::function<void(const SpaceSample&, std::size_t index)>& visit) {
  if (max_cells < 1 || max_cells > 4)
    throw ResourceError("space enumeration is capped at 4 cells");
  EnumerationStats stats;
  std::size_t index = 0;
  for (int cells = 1; cells <= max_cells; ++cells) {
    std::vector<std::vector<CellMask>> topologies = enumerate_topologies(cells);
    for (auto [params, elements] : carrier_shapes(cells)) {
      CarrierPtr carrier = enumerated_carrier(params, elements);
      CarrierEnumeration entry;
      entry.cells = cells;
      entry.parameters = params;
      entry.elements = elements;
      entry.topologies = topologies.size();
      entry.ideals = std::size_t{1} << cells;
      entry.spaces = entry.topologies * entry.ideals;
      stats.carriers.push_back(entry);

      for (std::size_t t = 0; t < topologies.size(); ++t) {
        SoftTopology topology = SoftTopology::from_opens(carrier, topologies[t]);
        for (CellMask top = 0; top <= carrier->full(); ++top) {
          SpaceSample sample{carrier, topology, SoftIdeal(carrier, top),
                             "enumerated cells=" + std::to_string(cells) + " shape=" +
                                 std::to_string(params) + "x" + std::to_string(elements) +
                                 " topology=" + std::to_string(t) +
                                 " ideal=" + std::to_string(top)};
          if (visit) visit(sample, index);
          ++index;
        }
      }
      stats.total_spaces += entry.spaces;
    }
  }
  return stats;
}

SpaceSample random_space(const CarrierPtr& carrier, std::uint64_t seed) {
  DetRng rng(seed);
  int cells = carrier->cells();
  std::uint64_t k = rng.below(static_cast<std::uint64_t>(cells) + 1);
  std::vector<CellMask> subbase;
  subbase.reserve(k);
  for (std::uint64_t s = 0; s < k; ++s) {
    subbase.push_back(rng.next() & carrier->full());
  }
  SoftTopology topology = SoftTopology::generate_from_subbase(carrier, subbase);
  CellMask top = rng.next() & carrier->full();
  return SpaceSample{carrier, std::move(topology), SoftIdeal(carrier, top),
                     "random seed=" + std::to_string(seed)};
}

}  // namespace softclust
