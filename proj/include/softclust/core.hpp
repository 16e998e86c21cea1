#ifndef SOFTCLUST_CORE_HPP
#define SOFTCLUST_CORE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace softclust {

/// Bad labels, malformed input, carrier mismatches, precondition violations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured enumeration or generation cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A soft set over a carrier is a subset of the parameter×element cell grid.
/// Cells are numbered parameter-major: cell(p, e) = p * element_count + e,
/// and a set is the bitmask with exactly those cells lit.
using CellMask = std::uint64_t;

class Carrier;
using CarrierPtr = std::shared_ptr<const Carrier>;

/// The fixed pair (parameter list, universe) every soft set lives on.
/// Immutable; shared by all values built over it. At most 64 cells so a
/// soft set fits in one machine word.
class Carrier {
 public:
  static constexpr int kMaxCells = 64;
  /// Cap for routines that enumerate all 2^cells soft sets.
  static constexpr int kMaxExhaustiveCells = 16;

  static CarrierPtr make(std::vector<std::string> universe,
                         std::vector<std::string> parameters);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<std::string>& parameters() const { return parameters_; }
  int element_count() const { return static_cast<int>(universe_.size()); }
  int parameter_count() const { return static_cast<int>(parameters_.size()); }
  int cells() const { return element_count() * parameter_count(); }
  CellMask full() const {
    int n = cells();
    return n == 64 ? ~CellMask{0} : (CellMask{1} << n) - 1;
  }

  int cell_index(int parameter, int element) const {
    return parameter * element_count() + element;
  }
  int cell_parameter(int cell) const { return cell / element_count(); }
  int cell_element(int cell) const { return cell % element_count(); }

  /// Throws InputError naming the label when it is unknown.
  int parameter_index(const std::string& label) const;
  int element_index(const std::string& label) const;

  bool same_as(const Carrier& other) const {
    return universe_ == other.universe_ && parameters_ == other.parameters_;
  }

 private:
  Carrier(std::vector<std::string> universe, std::vector<std::string> parameters);
  std::vector<std::string> universe_;
  std::vector<std::string> parameters_;
  std::map<std::string, int> universe_index_;
  std::map<std::string, int> parameter_index_;
};

/// A single cell of the grid, i.e. the soft set with one lit cell.
struct SoftPoint {
  int parameter = 0;
  int element = 0;
};

class SoftSet {
 public:
  SoftSet(CarrierPtr carrier, CellMask bits);

  const CarrierPtr& carrier() const { return carrier_; }
  CellMask bits() const { return bits_; }
  bool is_null() const { return bits_ == 0; }
  bool is_absolute() const { return bits_ == carrier_->full(); }
  bool contains(SoftPoint p) const {
    return (bits_ >> carrier_->cell_index(p.parameter, p.element)) & 1u;
  }
  int cell_count() const;

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return a.bits_ == b.bits_ && a.carrier_->same_as(*b.carrier_);
  }
  friend bool operator!=(const SoftSet& a, const SoftSet& b) { return !(a == b); }

 private:
  CarrierPtr carrier_;
  CellMask bits_;
};

/// parameter label -> element labels; missing parameters mean empty fibers.
using FiberMap = std::map<std::string, std::vector<std::string>>;

SoftSet make_soft_set(const CarrierPtr& carrier, const FiberMap& fibers);
SoftSet null_set(const CarrierPtr& carrier);
SoftSet absolute_set(const CarrierPtr& carrier);
SoftSet point_set(const CarrierPtr& carrier, SoftPoint p);

SoftSet soft_union(const SoftSet& a, const SoftSet& b);
SoftSet soft_intersect(const SoftSet& a, const SoftSet& b);
SoftSet soft_difference(const SoftSet& a, const SoftSet& b);
SoftSet soft_complement(const SoftSet& a);
bool is_subset(const SoftSet& a, const SoftSet& b);

inline SoftSet operator|(const SoftSet& a, const SoftSet& b) { return soft_union(a, b); }
inline SoftSet operator&(const SoftSet& a, const SoftSet& b) { return soft_intersect(a, b); }
inline SoftSet operator-(const SoftSet& a, const SoftSet& b) { return soft_difference(a, b); }
inline SoftSet operator~(const SoftSet& a) { return soft_complement(a); }

/// Fiber at one parameter, as a bitmask over element indices.
std::uint64_t fiber_mask(const SoftSet& a, int parameter);
/// Fiber at one parameter label, as element labels in carrier order.
std::vector<std::string> fiber(const SoftSet& a, const std::string& parameter);

/// The set-valued map's graph: the same cells viewed as an untyped subset
/// of the product grid.
struct CellGraph {
  int cell_count = 0;
  CellMask bits = 0;
};

CellGraph graph_encode(const SoftSet& a);
SoftSet graph_decode(const CellGraph& graph, const CarrierPtr& carrier);

/// Canonical text: `{alpha: {x, y}, beta: {}}`, fibers in carrier parameter
/// order, elements in carrier element order.
std::string to_text(const SoftSet& a);
std::string mask_to_text(const CarrierPtr& carrier, CellMask bits);
FiberMap to_fiber_map(const SoftSet& a);

/// Throws InputError unless both sets share a carrier.
void require_same_carrier(const SoftSet& a, const SoftSet& b);

}  // namespace softclust

#endif
