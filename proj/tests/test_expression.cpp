#include "doctest.h"
#include "helpers.hpp"
#include "softclust/expression.hpp"
#include "softclust/space_file.hpp"

using namespace softclust;
using namespace softclust::test;

namespace {

SpaceBundle algebra_bundle() {
  return parse_space_text(R"({
    "universe": ["x", "y", "z"],
    "parameters": ["a", "b"],
    "sets": {
      "A": {"a": ["x", "y"], "b": ["z"]},
      "B": {"a": ["y"], "b": ["x", "z"]},
      "C": {"a": ["z"]}
    },
    "topology": {"opens": ["Phi", "X"]},
    "ideal": {"top": {"a": ["y", "z"], "b": ["x", "y", "z"]}}
  })");
}

}  // namespace

TEST_CASE("operator expressions over named sets") {
  SpaceBundle bundle = algebra_bundle();
  auto value = [&](const std::string& expr) { return eval_expression(bundle, expr).bits(); };

  CHECK(value("Phi") == 0);
  CHECK(value("X") == bundle.carrier->full());
  CHECK(value("A u B") == (value("A") | value("B")));
  CHECK(value("~(A u B)") == value("~A n ~B"));
  CHECK(value("cl(Phi)") == 0);

  // Precedence: complement, then functions, then n, then -, then u.
  CHECK(value("A n B u C") == ((value("A") & value("B")) | value("C")));
  CHECK(value("A - B n C") == (value("A") & ~(value("B") & value("C"))));
  CHECK(value("A u B - C") == (value("A") | (value("B") & ~value("C"))));
  CHECK(value("~A n B") == ((bundle.carrier->full() & ~value("A")) & value("B")));
  CHECK(value("A - B - C") == ((value("A") & ~value("B")) & ~value("C")));
  CHECK(value("(A u B) n C") == ((value("A") | value("B")) & value("C")));
  CHECK(value("cl(A n B)") == bundle.carrier->full());  // indiscrete closure
  CHECK(value("int(A)") == 0);
  CHECK(value("D(Phi)") == 0);
}

TEST_CASE("the excluded-point fixture reproduces the all-or-nothing dichotomy") {
  SpaceBundle bundle = parse_space_file(fixture_path("example_4_14.json"));
  // R1 holds the distinguished cell, so it is outside the ideal and its
  // cluster set is everything.
  CHECK(eval_expression(bundle, "c(R1)") == absolute_set(bundle.carrier));
  CHECK(eval_expression(bundle, "c(Avoid)") == null_set(bundle.carrier));
  CHECK(eval_expression(bundle, "c(R1 n Avoid)") == null_set(bundle.carrier));
}

TEST_CASE("expression errors") {
  SpaceBundle bundle = algebra_bundle();
  CHECK_THROWS_AS(eval_expression(bundle, "A u"), InputError);
  CHECK_THROWS_AS(eval_expression(bundle, "(A"), InputError);
  CHECK_THROWS_AS(eval_expression(bundle, "A B"), InputError);
  CHECK_THROWS_AS(eval_expression(bundle, "Q"), InputError);
  CHECK_THROWS_AS(eval_expression(bundle, "cl(Q)"), InputError);
  CHECK_THROWS_AS(eval_expression(bundle, "A @ B"), InputError);
  CHECK_THROWS_AS(eval_expression(bundle, ""), InputError);

  // cl on a file whose open family is not a topology is an input error.
  SpaceBundle invalid = parse_space_file(fixture_path("example_4_7.json"));
  CHECK_THROWS_AS(eval_expression(invalid, "cl(R1)"), InputError);
  CHECK(eval_expression(invalid, "R1 u R2").bits() == kR2);

  // c needs an ideal stanza.
  SpaceBundle no_ideal = parse_space_text(R"({
    "universe": ["x"], "parameters": ["a"],
    "sets": {"S": {"a": ["x"]}},
    "topology": {"opens": ["Phi", "X"]}
  })");
  CHECK_THROWS_AS(eval_expression(no_ideal, "c(S)"), InputError);
  CHECK_THROWS_AS(eval_expression(no_ideal, "S n T"), InputError);
}
