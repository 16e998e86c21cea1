#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "softclust/spaces.hpp"

using namespace softclust;
using namespace softclust::test;

TEST_CASE("topology counts, frozen after two independent strategies agree") {
  // Strategy one: filter every candidate family. Strategy two: generate
  // from every possible subbase and deduplicate.
  std::vector<std::size_t> counts;
  for (int cells = 1; cells <= 4; ++cells) {
    std::vector<std::vector<CellMask>> filtered = enumerate_topologies(cells);

    CarrierPtr carrier = enumerated_carrier(1, cells);
    std::set<std::vector<CellMask>> generated;
    const unsigned subset_count = 1u << cells;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subset_count); ++pick) {
      std::vector<CellMask> subbase;
      for (unsigned m = 0; m < subset_count; ++m) {
        if ((pick >> m) & 1u) subbase.push_back(m);
      }
      generated.insert(SoftTopology::generate_from_subbase(carrier, subbase).opens());
    }

    REQUIRE(filtered.size() == generated.size());
    std::set<std::vector<CellMask>> filtered_set(filtered.begin(), filtered.end());
    REQUIRE(filtered_set == generated);
    counts.push_back(filtered.size());
  }
  CHECK(counts == std::vector<std::size_t>{1, 4, 29, 355});

  CHECK_THROWS_AS(enumerate_topologies(5), ResourceError);
}

TEST_CASE("carrier shapes and labels") {
  CHECK(carrier_shapes(4) ==
        std::vector<std::pair<int, int>>{{1, 4}, {2, 2}, {4, 1}});
  CHECK(carrier_shapes(7) == std::vector<std::pair<int, int>>{{1, 7}, {7, 1}});
  CHECK(default_shape(6) == std::pair<int, int>{2, 3});
  CHECK(default_shape(7) == std::pair<int, int>{1, 7});
  CHECK(default_shape(9) == std::pair<int, int>{3, 3});

  CarrierPtr carrier = enumerated_carrier(2, 3);
  CHECK(carrier->parameters() == std::vector<std::string>{"p1", "p2"});
  CHECK(carrier->universe() == std::vector<std::string>{"e1", "e2", "e3"});
}

TEST_CASE("space enumeration is deterministic and complete") {
  std::vector<std::string> first_run;
  EnumerationStats stats = enumerate_spaces(2, [&](const SpaceSample& sample, std::size_t index) {
    REQUIRE(index == first_run.size());
    first_run.push_back(sample.provenance);
    REQUIRE(check_topology_family(sample.carrier, sample.topology.opens()).valid);
  });

  // One-cell carrier: a single topology, two principal ideals. Two-cell
  // carriers come in two shapes with four topologies and four ideals each.
  REQUIRE(stats.carriers.size() == 3);
  CHECK(stats.carriers[0].topologies == 1);
  CHECK(stats.carriers[0].ideals == 2);
  CHECK(stats.carriers[1].topologies == 4);
  CHECK(stats.carriers[1].ideals == 4);
  CHECK(stats.total_spaces == 2 + 16 + 16);

  std::vector<std::string> second_run;
  enumerate_spaces(2, [&](const SpaceSample& sample, std::size_t) {
    second_run.push_back(sample.provenance);
  });
  CHECK(first_run == second_run);

  EnumerationStats four = enumerate_spaces(4, nullptr);
  CHECK(four.total_spaces == 2 + 32 + 464 + 3 * 355 * 16);

  CHECK_THROWS_AS(enumerate_spaces(5, nullptr), ResourceError);
}

TEST_CASE("random spaces are seed-determined and valid") {
  CarrierPtr carrier = enumerated_carrier(2, 3);
  SpaceSample a = random_space(carrier, 42);
  SpaceSample b = random_space(carrier, 42);
  CHECK(a.topology == b.topology);
  CHECK(a.ideal == b.ideal);

  bool any_difference = false;
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    SpaceSample sample = random_space(carrier, seed);
    REQUIRE(check_topology_family(carrier, sample.topology.opens()).valid);
    if (!(sample.topology == a.topology) || !(sample.ideal == a.ideal)) any_difference = true;
  }
  CHECK(any_difference);
}

TEST_CASE("deterministic rng rejects empty bounds and stays in range") {
  DetRng rng(7);
  CHECK_THROWS_AS(rng.below(0), InputError);
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(rng.below(13) < 13);
  }
  DetRng again(7);
  DetRng twice(7);
  for (int i = 0; i < 100; ++i) REQUIRE(again.next() == twice.next());
}
