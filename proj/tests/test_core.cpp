#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "softclust/core.hpp"

using namespace softclust;
using namespace softclust::test;

TEST_CASE("carrier construction enforces labels and the cell cap") {
  CHECK_THROWS_AS(Carrier::make({}, {"a"}), InputError);
  CHECK_THROWS_AS(Carrier::make({"x"}, {}), InputError);
  CHECK_THROWS_AS(Carrier::make({"x", "x"}, {"a"}), InputError);
  CHECK_THROWS_AS(Carrier::make({"x"}, {"a", "a"}), InputError);

  std::vector<std::string> wide;
  for (int i = 0; i < 65; ++i) wide.push_back("e" + std::to_string(i));
  CHECK_THROWS_AS(Carrier::make(wide, {"a"}), InputError);
  wide.pop_back();
  CHECK(Carrier::make(wide, {"a"})->cells() == 64);
}

TEST_CASE("make_soft_set resolves fibers, deduplicates, rejects unknown labels") {
  CarrierPtr carrier = worked_carrier();
  SoftSet r1 = make_soft_set(carrier, {{"alpha", {"x"}}, {"beta", {"y"}}});
  CHECK(r1.bits() == kR1);

  CHECK(make_soft_set(carrier, {}).bits() == 0);
  CHECK(make_soft_set(carrier, {{"alpha", {"x", "x"}}}) ==
        make_soft_set(carrier, {{"alpha", {"x"}}}));

  CHECK_THROWS_WITH_AS(make_soft_set(carrier, {{"gamma", {"x"}}}),
                       "unknown parameter label: gamma", InputError);
  CHECK_THROWS_WITH_AS(make_soft_set(carrier, {{"alpha", {"w"}}}),
                       "unknown element label: w", InputError);
}

TEST_CASE("set algebra on the worked six-cell data") {
  CarrierPtr carrier = worked_carrier();
  SoftSet r1(carrier, kR1), r2(carrier, kR2), r3(carrier, kR3);
  SoftSet phi = null_set(carrier);
  SoftSet all = absolute_set(carrier);

  CHECK((r1 | r2) == r2);
  CHECK((r1 | phi) == r1);
  CHECK((r1 | all) == all);

  CHECK((r2 & r3) == make_soft_set(carrier, {{"alpha", {"x", "y"}}, {"beta", {"y"}}}));
  CHECK((r1 & all) == r1);
  CHECK((r1 & ~r1) == phi);

  CHECK((all - r1) == ~r1);
  CHECK((r1 - phi) == r1);
  CHECK((r3 - r1) == make_soft_set(carrier, {{"alpha", {"y"}}, {"beta", {"z"}}}));

  CHECK(~all == phi);
  CHECK(~phi == all);

  CarrierPtr other = Carrier::make({"x", "y", "z"}, {"alpha", "gamma"});
  CHECK_THROWS_AS(soft_union(r1, null_set(other)), InputError);
}

TEST_CASE("boolean algebra laws hold exhaustively") {
  // Pairs on an eight-cell carrier, triples on a six-cell carrier.
  CarrierPtr eight = Carrier::make({"x", "y", "z", "w"}, {"a", "b"});
  CellMask full8 = eight->full();
  for (CellMask a = 0; a <= full8; ++a) {
    SoftSet sa(eight, a);
    CHECK(~~sa == sa);
    for (CellMask b = 0; b <= full8; ++b) {
      SoftSet sb(eight, b);
      REQUIRE((sa | sb) == (sb | sa));
      REQUIRE((sa & sb) == (sb & sa));
      REQUIRE(~(sa | sb) == (~sa & ~sb));
      REQUIRE(~(sa & sb) == (~sa | ~sb));
      REQUIRE(is_subset(sa, sb) == ((a & ~b) == 0));
      REQUIRE((is_subset(sa, sb) && is_subset(sb, sa)) == (sa == sb));
    }
  }

  CarrierPtr six = worked_carrier();
  CellMask full6 = six->full();
  for (CellMask a = 0; a <= full6; ++a) {
    for (CellMask b = 0; b <= full6; ++b) {
      for (CellMask c = 0; c <= full6; ++c) {
        SoftSet sa(six, a), sb(six, b), sc(six, c);
        REQUIRE(((sa | sb) | sc) == (sa | (sb | sc)));
        REQUIRE(((sa & sb) & sc) == (sa & (sb & sc)));
        REQUIRE((sa & (sb | sc)) == ((sa & sb) | (sa & sc)));
        REQUIRE((sa | (sb & sc)) == ((sa | sb) & (sa | sc)));
      }
    }
  }
}

TEST_CASE("subset checks on the worked data") {
  CarrierPtr carrier = worked_carrier();
  SoftSet r1(carrier, kR1), r3(carrier, kR3);

  // Independent cell-by-cell scan.
  bool expected = true;
  for (int cell = 0; cell < carrier->cells(); ++cell) {
    if (((kR1 >> cell) & 1u) && !((kR3 >> cell) & 1u)) expected = false;
  }
  CHECK(expected);
  CHECK(is_subset(r1, r3) == expected);

  for (CellMask a = 0; a <= carrier->full(); ++a) {
    REQUIRE(is_subset(null_set(carrier), SoftSet(carrier, a)));
    REQUIRE(is_subset(SoftSet(carrier, a), SoftSet(carrier, a)));
  }
}

TEST_CASE("fibers") {
  CarrierPtr carrier = worked_carrier();
  SoftSet r1(carrier, kR1);
  CHECK(fiber(r1, "alpha") == std::vector<std::string>{"x"});
  CHECK(fiber(null_set(carrier), "beta").empty());
  CHECK(fiber(absolute_set(carrier), "alpha") == carrier->universe());
  CHECK_THROWS_AS(fiber(r1, "gamma"), InputError);

  CHECK(fiber_mask(r1, 0) == 0b001);
  CHECK(fiber_mask(r1, 1) == 0b010);
}

TEST_CASE("graph encoding is a bijection that commutes with the algebra") {
  CarrierPtr carrier = worked_carrier();
  CHECK(graph_encode(SoftSet(carrier, kR1)).bits == kR1);
  CHECK(graph_encode(null_set(carrier)).bits == 0);

  for (CellMask a = 0; a <= carrier->full(); ++a) {
    SoftSet sa(carrier, a);
    REQUIRE(graph_decode(graph_encode(sa), carrier) == sa);
    for (CellMask b = 0; b <= carrier->full(); b += 7) {
      SoftSet sb(carrier, b);
      REQUIRE(graph_encode(sa | sb).bits == (graph_encode(sa).bits | graph_encode(sb).bits));
      REQUIRE(graph_encode(sa & sb).bits == (graph_encode(sa).bits & graph_encode(sb).bits));
      REQUIRE(graph_encode(sa - sb).bits == (graph_encode(sa).bits & ~graph_encode(sb).bits));
    }
  }

  CellGraph outside{carrier->cells(), CellMask{1} << carrier->cells()};
  CHECK_THROWS_AS(graph_decode(outside, carrier), InputError);
  CHECK_THROWS_AS(graph_decode(CellGraph{3, 1}, carrier), InputError);
}

TEST_CASE("canonical text form") {
  CarrierPtr carrier = worked_carrier();
  CHECK(to_text(SoftSet(carrier, kR2)) == "{alpha: {x, y}, beta: {x, y}}");
  CHECK(to_text(null_set(carrier)) == "{alpha: {}, beta: {}}");
  CHECK(to_text(absolute_set(carrier)) == "{alpha: {x, y, z}, beta: {x, y, z}}");

  FiberMap round = to_fiber_map(SoftSet(carrier, kR3));
  CHECK(make_soft_set(carrier, round).bits() == kR3);
}
