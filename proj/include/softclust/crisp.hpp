#ifndef SOFTCLUST_CRISP_HPP
#define SOFTCLUST_CRISP_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace softclust {

/// A family of subsets of a finite ground set {0, ..., ground-1}, each
/// subset a bitmask. Used for parameter slices and for the product-grid
/// view of a soft topology.
struct CrispTopology {
  int ground = 0;
  std::vector<std::uint64_t> opens;  // sorted ascending, deduplicated

  friend bool operator==(const CrispTopology& a, const CrispTopology& b) {
    return a.ground == b.ground && a.opens == b.opens;
  }
};

/// Principal crisp ideal: members are exactly the subsets of `top`.
struct CrispIdeal {
  int ground = 0;
  std::uint64_t top = 0;

  bool contains(std::uint64_t a) const { return (a & ~top) == 0; }
  friend bool operator==(const CrispIdeal& a, const CrispIdeal& b) {
    return a.ground == b.ground && a.top == b.top;
  }
};

struct CrispCheck {
  bool valid = false;
  int axiom = 0;  // 1: missing empty/ground, 2: intersection, 3: union
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t missing = 0;
};

/// Validates the crisp topology axioms over a family (sorted + deduped
/// internally). Witnesses are first-found in ascending mask order.
CrispCheck check_crisp_topology(int ground, std::vector<std::uint64_t> family);

std::uint64_t crisp_full(int ground);
std::string crisp_set_text(int ground, std::uint64_t mask,
                           const std::vector<std::string>& labels);

}  // namespace softclust

#endif
