#ifndef SOFTCLUST_SPACES_HPP
#define SOFTCLUST_SPACES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "softclust/cluster.hpp"
#include "softclust/core.hpp"
#include "softclust/ideal.hpp"
#include "softclust/topology.hpp"

namespace softclust {

/// One (carrier, topology, principal ideal) instance fed to the law suite.
struct SpaceSample {
  CarrierPtr carrier;
  SoftTopology topology;
  SoftIdeal ideal;
  std::string provenance;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic bounded draw on top of a seeded mt19937_64 stream; avoids
/// std::uniform_int_distribution, whose output differs across standard
/// library implementations.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(splitmix64(seed ^ 0x9e3779b97f4a7c15ull)) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)

 private:
  std::uint64_t state_;
};

/// (parameter count, element count) factorizations of a cell count, in
/// ascending parameter order.
std::vector<std::pair<int, int>> carrier_shapes(int cells);
/// Carrier with labels p1..pk / e1..en.
CarrierPtr enumerated_carrier(int parameters, int elements);
/// The most balanced shape (largest parameter count <= element count),
/// used when only a cell count is specified.
std::pair<int, int> default_shape(int cells);

/// All soft topologies on a grid of `cells` cells, each as a sorted open
/// family, ordered by the family's characteristic index over the powerset.
/// Requires cells <= 4 (filters all 2^(2^cells) candidate families).
std::vector<std::vector<CellMask>> enumerate_topologies(int cells);

struct CarrierEnumeration {
  int cells = 0;
  int parameters = 0;
  int elements = 0;
  std::size_t topologies = 0;
  std::size_t ideals = 0;
  std::size_t spaces = 0;
};

struct EnumerationStats {
  std::vector<CarrierEnumeration> carriers;
  std::size_t total_spaces = 0;
};

/// Streams every (topology, principal ideal) pair over every carrier shape
/// with at most `max_cells` cells, in canonical order: cell count, then
/// parameter count, then topology index, then ideal top. Duplicate-free and
/// identical across runs.
EnumerationStats enumerate_spaces(
    int max_cells, const std::function<void(const SpaceSample&, std::size_t index)>& visit);

/// Topology generated from a seeded subbase (k sets, k drawn from
/// 0..cells) plus a seeded principal ideal. Same seed, same sample.
SpaceSample random_space(const CarrierPtr& carrier, std::uint64_t seed);

}  // namespace softclust

#endif
