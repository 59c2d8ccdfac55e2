#include "doctest.h"
#include "lawmeas/topmodel.hpp"
#include "lawmeas/verify/models.hpp"

using namespace lawmeas;

TEST_SUITE("topmodel") {

TEST_CASE("discrete and indiscrete topologies admit every passing algebra") {
  struct Case {
    Algebra alg;
    const char* theory;
  };
  const Case cases[] = {
      {verify::cyclic_group(2), "Group"}, {verify::cyclic_group(3), "Group"},
      {verify::cyclic_group(4), "Group"}, {verify::klein_four(), "Group"},
      {verify::cyclic_ring(2), "Ring"},   {verify::cyclic_ring(3), "Ring"},
      {verify::cyclic_ring(4), "Ring"},
  };
  for (const auto& c : cases) {
    const TheoryPresentation th = builtin_theory(c.theory);
    CHECK(check_topological_model(c.alg, discrete_topology(c.alg.carrier), th).pass);
    CHECK(check_topological_model(c.alg, indiscrete_topology(c.alg.carrier), th).pass);
  }
}

TEST_CASE("Z2 with the Sierpinski topology fails on mul with witness {1}") {
  const Algebra z2 = verify::cyclic_group(2);
  const Topology s = verify::sierpinski();
  const TopModelReport report =
      check_topological_model(z2, s, builtin_theory("Group"));

  CHECK(!report.pass);
  CHECK(report.equations_pass);
  CHECK(!report.continuity_pass);
  REQUIRE(report.continuity_failures.size() == 1);
  const auto& fail = report.continuity_failures[0];
  CHECK(fail.op == "mul");
  CHECK(fail.witness_open == SubsetMask::single(s.carrier, 1));
  // Preimage {(0,1),(1,0)} in the row-major square.
  CHECK(fail.preimage.elements() == std::vector<int>{1, 2});
}

TEST_CASE("equation failures surface through the topological check") {
  const Algebra bad = verify::z4_subtraction();
  const TopModelReport report = check_topological_model(
      bad, discrete_topology(bad.carrier), builtin_theory("Group"));
  CHECK(!report.pass);
  CHECK(!report.equations_pass);
  CHECK(report.continuity_pass);  // discrete: everything is continuous
}

TEST_CASE("operations view as functions in row-major product order") {
  const Algebra z4 = verify::cyclic_group(4);
  const ProductSpace square =
      product_topology(discrete_topology(z4.carrier), 2);
  const FiniteFunction mul = op_as_function(z4, *z4.find("mul"), square);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const int point = square.point(std::array{a, b});
      CHECK(mul(point) == (a + b) % 4);
    }
  }
}

}  // TEST_SUITE
