#ifndef SOFTCLUST_TEST_HELPERS_HPP
#define SOFTCLUST_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "softclust/core.hpp"

namespace softclust::test {

// The six-cell worked space shipped as fixtures/example_4_7.json:
// universe {x, y, z}, parameters {alpha, beta}. Cell bits are
// parameter-major, so alpha:x=1, alpha:y=2, alpha:z=4, beta:x=8,
// beta:y=16, beta:z=32.
inline CarrierPtr worked_carrier() {
  return Carrier::make({"x", "y", "z"}, {"alpha", "beta"});
}

inline constexpr CellMask kR1 = 0b010001;  // {alpha: {x}, beta: {y}}
inline constexpr CellMask kR2 = 0b011011;  // {alpha: {x, y}, beta: {x, y}}
inline constexpr CellMask kR3 = 0b110011;  // {alpha: {x, y}, beta: {y, z}}
inline constexpr CellMask kR4 = 0b011101;  // {alpha: {x, z}, beta: {x, y}}
inline constexpr CellMask kIdealTop = 0b101110;  // {alpha: {y, z}, beta: {x, z}}

inline std::vector<CellMask> worked_open_family() {
  return {0, kR1, kR2, kR3, kR4, 0b111111};
}

// All sixteen members of the worked ideal: the submasks of its top.
inline std::vector<CellMask> worked_ideal_family() {
  std::vector<CellMask> out;
  CellMask sub = kIdealTop;
  while (true) {
    out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & kIdealTop;
  }
  return out;
}

inline std::string fixtures_dir() { return SOFTCLUST_FIXTURES_DIR; }
inline std::string fixture_path(const std::string& name) {
  return fixtures_dir() + "/" + name;
}

}  // namespace softclust::test

#endif
