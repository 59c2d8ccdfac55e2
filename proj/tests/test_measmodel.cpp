#include <random>

#include "doctest.h"
#include "lawmeas/measmodel.hpp"
#include "lawmeas/verify/models.hpp"
#include "lawmeas/verify/oracles.hpp"

using namespace lawmeas;

namespace {

Carrier letters(int n) {
  std::vector<std::string> l = {"a", "b", "c"};
  l.resize(n);
  return Carrier(std::move(l));
}

MeasurableSpace trivial_space(int n) {
  const Carrier c = letters(n);
  return MeasurableSpace{c, generate_sigma(c, {})};
}

MeasurableSpace power_space(int n) {
  const Carrier c = letters(n);
  SetFamily singletons;
  for (int i = 0; i < n; ++i) singletons.push_back(SubsetMask::single(c, i));
  return MeasurableSpace{c, generate_sigma(c, singletons)};
}

TopologicalAlgebra discrete_model(Algebra alg) {
  Topology top = discrete_topology(alg.carrier);
  return TopologicalAlgebra{std::move(alg), std::move(top)};
}

TopologicalAlgebra indiscrete_model(Algebra alg) {
  Topology top = indiscrete_topology(alg.carrier);
  return TopologicalAlgebra{std::move(alg), std::move(top)};
}

}  // namespace

TEST_SUITE("measmodel") {

TEST_CASE("build_meas_space counts match the examples") {
  const TopologicalAlgebra z2d = discrete_model(verify::cyclic_group(2));

  // Power-set source: all |Y|^|X| functions are measurable.
  CHECK(build_meas_space(power_space(2), z2d).functions.size() == 4);

  // Trivial source: only the constants.
  const MeasFunctionSpace constants = build_meas_space(trivial_space(2), z2d);
  REQUIRE(constants.functions.size() == 2);
  CHECK(constants.functions[0].table == std::vector<std::int32_t>{0, 0});
  CHECK(constants.functions[1].table == std::vector<std::int32_t>{1, 1});

  // Indiscrete target: the Borel algebra is trivial, everything measurable.
  const TopologicalAlgebra z3i = indiscrete_model(verify::cyclic_group(3));
  CHECK(build_meas_space(trivial_space(2), z3i).functions.size() == 9);
}

TEST_CASE("function space order and lookup") {
  const MeasFunctionSpace ms =
      build_meas_space(power_space(2), discrete_model(verify::cyclic_group(2)));
  for (std::size_t i = 0; i < ms.functions.size(); ++i) {
    CHECK(ms.index_of(ms.functions[i].table) == static_cast<int>(i));
  }
  CHECK(ms.index_of({9, 9}) == -1);
  CHECK(ms.function_carrier.label(0) == "[0,0]");
}

TEST_CASE("lifting constants and the Z2 addition table") {
  const MeasFunctionSpace ms =
      build_meas_space(trivial_space(2), discrete_model(verify::cyclic_ring(2)));
  REQUIRE(ms.functions.size() == 2);  // the two constants

  const OpTable zero = lift_operation(ms, OpSymbol{"zero", 0});
  CHECK(zero.values == std::vector<std::int32_t>{0});  // the constant-0 function

  const OpTable add = lift_operation(ms, OpSymbol{"add", 2});
  CHECK(add.values == std::vector<std::int32_t>{0, 1, 1, 0});  // Z2 addition again
}

TEST_CASE("lifting over an indiscrete target is the full pointwise power") {
  const TopologicalAlgebra y = indiscrete_model(verify::cyclic_group(3));
  const MeasFunctionSpace ms = build_meas_space(power_space(2), y);
  REQUIRE(ms.functions.size() == 9);

  const Algebra expected = verify::power_algebra(verify::cyclic_group(3), 2);
  const Algebra lifted = lifted_algebra(ms, builtin_theory("Group"));
  for (const auto& op : expected.ops) {
    const OpTable* got = lifted.find(op.name);
    REQUIRE(got != nullptr);
    CHECK(got->values == op.values);
  }
}

TEST_CASE("a gap in the function list raises ClosureViolation") {
  MeasFunctionSpace ms =
      build_meas_space(power_space(1), discrete_model(verify::cyclic_group(2)));
  REQUIRE(ms.functions.size() == 2);
  // Drop the constant-0 function: lifting e must now land outside the list.
  ms.functions.erase(ms.functions.begin());
  CHECK_THROWS_AS(lift_operation(ms, OpSymbol{"e", 0}), ClosureViolation);
}

TEST_CASE("verify_theorem on the stated examples") {
  // Trivial X, discrete Z2 ring: two constants, a copy of Z2.
  {
    const TheoremReport r =
        verify_theorem(trivial_space(2), discrete_model(verify::cyclic_ring(2)),
                       builtin_theory("Ring"));
    CHECK(r.pass);
    CHECK(r.function_count == 2);
  }
  // Indiscrete Z3 group: the full power Z3^X.
  {
    const TheoremReport r =
        verify_theorem(power_space(2), indiscrete_model(verify::cyclic_group(3)),
                       builtin_theory("Group"));
    CHECK(r.pass);
    CHECK(r.function_count == 9);
  }
  // One-point X with the power set: Meas(pt, Y) is a copy of Y.
  {
    const TheoremReport r =
        verify_theorem(power_space(1), discrete_model(verify::cyclic_group(4)),
                       builtin_theory("Group"));
    CHECK(r.pass);
    CHECK(r.function_count == 4);
  }
}

TEST_CASE("the empty source space carries the terminal model") {
  const TheoremReport r =
      verify_theorem(trivial_space(0), discrete_model(verify::cyclic_group(3)),
                     builtin_theory("Group"));
  CHECK(r.pass);
  CHECK(r.function_count == 1);
}

TEST_CASE("an empty target with constants is rejected") {
  Algebra empty;
  empty.carrier = Carrier();
  empty.ops.push_back(OpTable{"e", 0, {0}});  // unchecked aggregate
  const TopologicalAlgebra y{empty, indiscrete_topology(Carrier())};
  CHECK_THROWS_AS(build_meas_space(trivial_space(2), y), NoConstantsPossible);
}

TEST_CASE("premise failures are reported, not hidden") {
  const TopologicalAlgebra bad{verify::cyclic_group(2), verify::sierpinski()};
  const TheoremReport r =
      verify_theorem(trivial_space(2), bad, builtin_theory("Group"));
  CHECK(!r.premise_pass);
  CHECK(!r.pass);
  REQUIRE(!r.failures.empty());
  CHECK(r.failures[0].find("premise") == 0);
}

TEST_CASE("product preservation at arities 0, 1, 2") {
  const TopologicalAlgebra y{verify::cyclic_group(2),
                             verify::sierpinski()};  // topology alone matters here
  for (const auto& sx : all_sigma_algebras(letters(3))) {
    const MeasurableSpace X{letters(3), sx};
    const ProductPreservationReport p0 = check_product_preservation(X, y, 0);
    CHECK(p0.pass);
    CHECK(p0.meas_n_count == 1);  // the terminal space

    const ProductPreservationReport p1 = check_product_preservation(X, y, 1);
    CHECK(p1.pass);
    CHECK(p1.meas_n_count == p1.meas_1_count);

    const ProductPreservationReport p2 = check_product_preservation(X, y, 2);
    CHECK(p2.pass);
    CHECK(p2.meas_n_count == p2.meas_1_count * p2.meas_1_count);
  }
}

TEST_CASE("refining the sigma-algebra never shrinks the function space") {
  std::mt19937_64 rng(61);
  const TopologicalAlgebra y = discrete_model(verify::cyclic_group(3));
  for (int t = 0; t < 50; ++t) {
    const Carrier cx = letters(1 + static_cast<int>(rng() % 3));
    SetFamily gens = verify::random_family(rng, cx, 2);
    const MeasurableSpace coarse{cx, generate_sigma(cx, gens)};
    gens.push_back(verify::random_mask(rng, cx));
    const MeasurableSpace fine{cx, generate_sigma(cx, gens)};

    const auto coarse_fns = build_meas_space(coarse, y).functions;
    const MeasFunctionSpace fine_ms = build_meas_space(fine, y);
    for (const auto& f : coarse_fns) {
      CHECK(fine_ms.index_of(f.table) >= 0);
    }
  }
}

TEST_CASE("caps propagate") {
  Caps tight;
  tight.function_space_max = 3;
  CHECK_THROWS_AS(build_meas_space(power_space(2),
                                   discrete_model(verify::cyclic_group(2)), tight),
                  CapExceeded);
  CHECK_THROWS_AS(
      check_product_preservation(power_space(1),
                                 discrete_model(verify::cyclic_group(2)), 4),
      CapExceeded);
}

}  // TEST_SUITE
