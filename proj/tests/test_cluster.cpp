#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "softclust/cluster.hpp"
#include "softclust/spaces.hpp"

using namespace softclust;
using namespace softclust::test;

namespace {

ClusterContext two_cell_dichotomy() {
  // Indiscrete on {x, y} with one parameter; ideal top {y}.
  CarrierPtr two = Carrier::make({"x", "y"}, {"a"});
  return ClusterContext(SoftTopology::indiscrete(two), SoftIdeal(two, 0b10));
}

}  // namespace

TEST_CASE("cluster set with the trivial ideal is the closure") {
  for (int cells = 1; cells <= 3; ++cells) {
    for (auto [params, elements] : carrier_shapes(cells)) {
      CarrierPtr carrier = enumerated_carrier(params, elements);
      for (const auto& opens : enumerate_topologies(cells)) {
        SoftTopology t = SoftTopology::from_opens(carrier, opens);
        ClusterContext ctx(t, SoftIdeal::trivial(carrier));
        for (CellMask r = 0; r <= carrier->full(); ++r) {
          SoftSet set(carrier, r);
          REQUIRE(cluster_set(ctx, set) == closure(t, set));
          REQUIRE(cluster_set(ctx, set, EvalMode::definitional) == closure(t, set));
        }
      }
    }
  }
}

TEST_CASE("ideal members always have a null cluster set") {
  CarrierPtr carrier = worked_carrier();
  ClusterContext ctx(SoftTopology::indiscrete(carrier), SoftIdeal(carrier, kIdealTop));
  CellMask sub = kIdealTop;
  while (true) {
    REQUIRE(cluster_set(ctx, SoftSet(carrier, sub)).is_null());
    if (sub == 0) break;
    sub = (sub - 1) & kIdealTop;
  }
}

TEST_CASE("two-cell dichotomy: outside the ideal everything clusters") {
  ClusterContext ctx = two_cell_dichotomy();
  const CarrierPtr& two = ctx.carrier();
  CHECK(cluster_set(ctx, SoftSet(two, 0b01)) == absolute_set(two));
  CHECK(cluster_set(ctx, SoftSet(two, 0b10)) == null_set(two));
}

TEST_CASE("classification") {
  CarrierPtr carrier = Carrier::make({"x", "y"}, {"a", "b"});
  SoftTopology indiscrete = SoftTopology::indiscrete(carrier);

  // Full ideal: every proper non-null subset is c-closed but not closed.
  ClusterContext ctx(indiscrete, SoftIdeal::full(carrier));
  for (CellMask m = 1; m < carrier->full(); ++m) {
    ClusterClassification cls = classify(ctx, SoftSet(carrier, m));
    REQUIRE(cls.c_closed);
    REQUIRE_FALSE(indiscrete.is_closed(m));
  }

  // Closed sets and ideal members are c-closed; consistency of the flags.
  ClusterContext mixed(indiscrete, SoftIdeal(carrier, 0b0101));
  for (CellMask m = 0; m <= carrier->full(); ++m) {
    ClusterClassification cls = classify(mixed, SoftSet(carrier, m));
    if (indiscrete.is_closed(m)) REQUIRE(cls.c_closed);
    if ((m & ~0b0101u) == 0) REQUIRE(cls.c_closed);
    ClusterClassification complement = classify(mixed, ~SoftSet(carrier, m));
    REQUIRE(cls.c_open == complement.c_closed);
    if (cls.c_regular) {
      REQUIRE(cls.c_closed);
      REQUIRE(cls.c_crowded);
    }
    REQUIRE(cls.c_regular == (cls.c_closed && cls.c_crowded));
  }
}

TEST_CASE("cluster topology of the named ideals") {
  // Trivial ideal: nothing changes.
  for (int cells = 1; cells <= 3; ++cells) {
    CarrierPtr carrier = enumerated_carrier(1, cells);
    for (const auto& opens : enumerate_topologies(cells)) {
      SoftTopology t = SoftTopology::from_opens(carrier, opens);
      REQUIRE(cluster_topology(ClusterContext(t, SoftIdeal::trivial(carrier))) == t);
      REQUIRE(cluster_topology(ClusterContext(t, SoftIdeal::full(carrier))) ==
              SoftTopology::discrete(carrier));
    }
  }

  // Excluding one cell from the ideal turns indiscrete into included-point.
  CarrierPtr carrier = worked_carrier();
  SoftTopology indiscrete = SoftTopology::indiscrete(carrier);
  for (int cell = 0; cell < carrier->cells(); ++cell) {
    CellMask avoid = carrier->full() & ~(CellMask{1} << cell);
    SoftTopology tc = cluster_topology(ClusterContext(indiscrete, SoftIdeal(carrier, avoid)));
    std::vector<CellMask> expected{0};
    for (CellMask m = 0; m <= carrier->full(); ++m) {
      if ((m >> cell) & 1u) expected.push_back(m);
    }
    std::sort(expected.begin(), expected.end());
    REQUIRE(tc.opens() == expected);
  }
}

TEST_CASE("both construction routes agree") {
  for (int cells = 2; cells <= 4; ++cells) {
    CarrierPtr carrier = enumerated_carrier(1, cells);
    for (const auto& opens : enumerate_topologies(cells)) {
      SoftTopology t = SoftTopology::from_opens(carrier, opens);
      for (CellMask top = 0; top <= carrier->full(); ++top) {
        ClusterContext ctx(t, SoftIdeal(carrier, top));
        REQUIRE(cluster_topology(ctx, ClusterRoute::closed_enumeration) ==
                cluster_topology(ctx, ClusterRoute::open_minus_ideal));
      }
    }
  }
}

TEST_CASE("adherence always holds at desk scale") {
  ClusterContext ctx = two_cell_dichotomy();
  AdherenceReport report = is_adherent(ctx);
  CHECK(report.adherent);
  CHECK_FALSE(report.witness.has_value());

  CarrierPtr carrier = worked_carrier();
  CHECK(is_adherent(ClusterContext(SoftTopology::indiscrete(carrier),
                                   SoftIdeal(carrier, kIdealTop)))
            .adherent);
}

TEST_CASE("decompositions") {
  CarrierPtr carrier = worked_carrier();
  SoftTopology indiscrete = SoftTopology::indiscrete(carrier);
  ClusterContext ctx(indiscrete, SoftIdeal(carrier, kIdealTop));

  // An ideal member decomposes as (null, itself).
  SoftSet member(carrier, kIdealTop & (kIdealTop - 1));
  Decomposition crowded = decompose_crowded(ctx, member);
  CHECK(crowded.part1.is_null());
  CHECK(crowded.part2 == member);

  Decomposition regular = decompose_regular(ctx, member);
  CHECK(regular.part1.is_null());
  CHECK(regular.part2 == member);

  Decomposition closed = decompose_closed_plus_ideal(ctx, member);
  CHECK(closed.part1.is_null());
  CHECK(closed.part2 == member);

  // A c-crowded set decomposes as (itself, null).
  SoftSet all = absolute_set(carrier);
  CHECK(is_subset(all, cluster_set(ctx, all)));
  Decomposition crowded_all = decompose_crowded(ctx, all);
  CHECK(crowded_all.part1 == all);
  CHECK(crowded_all.part2.is_null());

  // Not c-closed: cluster of {x at alpha} is the absolute set.
  SoftSet spike(carrier, 0b000001);
  CHECK_FALSE(classify(ctx, spike).c_closed);
  CHECK_THROWS_AS(decompose_regular(ctx, spike), InputError);
  CHECK_THROWS_AS(decompose_closed_plus_ideal(ctx, spike), InputError);

  // Exhaustive invariants on every small space.
  for (int cells = 1; cells <= 3; ++cells) {
    CarrierPtr small = enumerated_carrier(1, cells);
    for (const auto& opens : enumerate_topologies(cells)) {
      SoftTopology t = SoftTopology::from_opens(small, opens);
      for (CellMask top = 0; top <= small->full(); ++top) {
        ClusterContext c(t, SoftIdeal(small, top));
        for (CellMask r = 0; r <= small->full(); ++r) {
          SoftSet set(small, r);
          Decomposition d = decompose_crowded(c, set);
          REQUIRE((d.part1 & d.part2).is_null());
          REQUIRE((d.part1 | d.part2) == set);
          REQUIRE(is_subset(d.part1, cluster_set(c, d.part1)));
          REQUIRE(c.ideal.contains(d.part2));
          if (classify(c, set).c_closed) {
            Decomposition reg = decompose_regular(c, set);
            REQUIRE(cluster_set(c, reg.part1) == reg.part1);
            REQUIRE(c.ideal.contains(reg.part2));
            Decomposition cpi = decompose_closed_plus_ideal(c, set);
            REQUIRE(t.is_closed(cpi.part1.bits()));
            REQUIRE(c.ideal.contains(cpi.part2));
          }
        }
      }
    }
  }
}

TEST_CASE("join-ideal factorization: the flagship two-cell counterexample") {
  CarrierPtr two = Carrier::make({"a", "b"}, {"w"});
  SoftTopology indiscrete = SoftTopology::indiscrete(two);
  SoftIdeal left(two, 0b01), right(two, 0b10);
  SoftSet all = absolute_set(two);

  JoinFactorReport report = check_prop_4_9(indiscrete, left, right, all);
  CHECK_FALSE(report.stated_holds);
  CHECK(report.refined_holds);
  CHECK(report.lhs == 0);
  CHECK(report.stated_rhs == two->full());
  CHECK(report.refined_factor_i == 0b10);
  CHECK(report.refined_factor_j == 0b01);
  CHECK(report.refined_rhs == 0);

  // Degenerate pairings keep both forms true.
  JoinFactorReport trivial = check_prop_4_9(indiscrete, left, SoftIdeal::trivial(two), all);
  CHECK(trivial.stated_holds);
  CHECK(trivial.refined_holds);
  JoinFactorReport same = check_prop_4_9(indiscrete, left, left, all);
  CHECK(same.stated_holds);
  CHECK(same.refined_holds);
}

TEST_CASE("finite-member ideal report") {
  CarrierPtr carrier = Carrier::make({"x", "y"}, {"a"});
  FiniteIdealReport discrete = check_thm_5_1(SoftTopology::discrete(carrier));
  CHECK(discrete.all_c_closed_are_closed);
  CHECK(discrete.all_soft_sets_closed);
  CHECK(discrete.closed_biconditional);
  CHECK(discrete.t_equals_tc);
  CHECK(discrete.complements_of_finite_open);
  CHECK(discrete.topology_biconditional);
  CHECK_FALSE(discrete.note.empty());

  FiniteIdealReport indiscrete = check_thm_5_1(SoftTopology::indiscrete(carrier));
  CHECK_FALSE(indiscrete.all_c_closed_are_closed);
  CHECK_FALSE(indiscrete.all_soft_sets_closed);
  CHECK(indiscrete.closed_biconditional);
  CHECK_FALSE(indiscrete.t_equals_tc);
  CHECK_FALSE(indiscrete.complements_of_finite_open);
  CHECK(indiscrete.topology_biconditional);
}

TEST_CASE("slice commutation") {
  CarrierPtr carrier = worked_carrier();
  SoftTopology t = SoftTopology::generate_from_subbase(carrier, {kR2, kR3});

  SliceCommutationReport trivial =
      slice_commutation(ClusterContext(t, SoftIdeal::trivial(carrier)), 0);
  CHECK(trivial.equal);
  CHECK(trivial.cluster_then_slice == slice_topology(t, 0));

  SliceCommutationReport full =
      slice_commutation(ClusterContext(t, SoftIdeal::full(carrier)), 1);
  CHECK(full.equal);
  CHECK(full.slice_then_crisp.opens.size() == 8);

  SliceCommutationReport mixed =
      slice_commutation(ClusterContext(t, SoftIdeal(carrier, kIdealTop)), 0);
  CHECK(mixed.equal);
  CHECK(mixed.parameter_label == "alpha");
}
