#include "doctest.h"
#include "helpers.hpp"
#include "softclust/oracle.hpp"
#include "softclust/spaces.hpp"
#include "softclust/topology.hpp"

using namespace softclust;
using namespace softclust::test;

namespace {

// The alpha slice of the worked space: ground {x, y, z} with x=1, y=2, z=4.
CrispContext worked_alpha_slice() {
  return CrispContext{CrispTopology{3, {0b000, 0b001, 0b011, 0b101, 0b111}},
                      CrispIdeal{3, 0b110}};
}

}  // namespace

TEST_CASE("local function with the trivial ideal is the crisp closure") {
  CrispTopology tau{3, {0b000, 0b001, 0b011, 0b111}};
  CrispContext cctx{tau, CrispIdeal{3, 0}};
  for (std::uint64_t a = 0; a < 8; ++a) {
    // Independent closure: intersect the closed supersets.
    std::uint64_t cl = 0b111;
    for (std::uint64_t open : tau.opens) {
      if ((a & open) == 0) cl &= 0b111 & ~open;
    }
    REQUIRE(crisp_local_function(cctx, a) == cl);
  }
}

TEST_CASE("local function on the worked alpha slice") {
  CrispContext cctx = worked_alpha_slice();
  // {y} is an ideal member, so no point survives.
  CHECK(crisp_local_function(cctx, 0b010) == 0);
  // {x} meets every open outside the ideal: every non-null open holds x,
  // so every point of the ground set is a cluster point.
  CHECK(crisp_local_function(cctx, 0b001) == 0b111);
}

TEST_CASE("ideal topology of the worked slices reproduces the slices") {
  CrispContext alpha = worked_alpha_slice();
  CHECK(crisp_ideal_topology(alpha).opens == alpha.topology.opens);

  CrispContext beta{CrispTopology{3, {0b000, 0b010, 0b011, 0b110, 0b111}},
                    CrispIdeal{3, 0b101}};
  CHECK(crisp_ideal_topology(beta).opens == beta.topology.opens);
}

TEST_CASE("full crisp ideal yields the discrete topology") {
  CrispContext cctx{CrispTopology{3, {0b000, 0b111}}, CrispIdeal{3, 0b111}};
  CrispTopology out = crisp_ideal_topology(cctx);
  CHECK(out.opens.size() == 8);
}

TEST_CASE("both crisp construction routes agree on enumerated inputs") {
  for (int cells = 2; cells <= 3; ++cells) {
    for (const auto& opens : enumerate_topologies(cells)) {
      for (std::uint64_t top = 0; top < (std::uint64_t{1} << cells); ++top) {
        CrispContext cctx{CrispTopology{cells, opens}, CrispIdeal{cells, top}};
        REQUIRE(crisp_ideal_topology(cctx) == crisp_ideal_topology_from_base(cctx));
      }
    }
  }
}

TEST_CASE("ground cap") {
  CrispContext cctx{CrispTopology{20, {0, (1u << 20) - 1}}, CrispIdeal{20, 0}};
  CHECK_THROWS_AS(crisp_ideal_topology(cctx), ResourceError);
}
