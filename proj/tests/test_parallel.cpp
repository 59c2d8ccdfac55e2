#include <random>

#include "doctest.h"
#include "lawmeas/measmodel.hpp"
#include "lawmeas/theory.hpp"
#include "lawmeas/verify/models.hpp"
#include "lawmeas/verify/oracles.hpp"

using namespace lawmeas;

namespace {

bool same_report(const ModelReport& a, const ModelReport& b) {
  if (a.pass != b.pass || a.instances_checked != b.instances_checked ||
      a.failures.size() != b.failures.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    const auto& fa = a.failures[i];
    const auto& fb = b.failures[i];
    if (fa.equation_label != fb.equation_label || fa.env != fb.env ||
        fa.lhs_value != fb.lhs_value || fa.rhs_value != fb.rhs_value) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("parallel") {

TEST_CASE("parallel check_model equals the serial reference") {
  const TheoryPresentation group = builtin_theory("Group");
  const TheoryPresentation ring = builtin_theory("Ring");

  // Curated passing and failing models.
  CHECK(same_report(check_model(verify::cyclic_group(4), group),
                    reference::check_model(verify::cyclic_group(4), group)));
  CHECK(same_report(check_model(verify::z4_subtraction(), group),
                    reference::check_model(verify::z4_subtraction(), group)));
  CHECK(same_report(check_model(verify::cyclic_ring(3), ring),
                    reference::check_model(verify::cyclic_ring(3), ring)));

  // Random tables, mostly failing: witnesses must coincide exactly.
  std::mt19937_64 rng(91);
  for (int t = 0; t < 200; ++t) {
    const int k = 2 + static_cast<int>(rng() % 3);
    Algebra alg;
    alg.carrier = Carrier::numeric(k);
    for (const auto& op : group.ops) {
      OpTable tab{op.name, op.arity, {}};
      const std::int64_t len = checked_pow(k, op.arity);
      for (std::int64_t i = 0; i < len; ++i) {
        tab.values.push_back(static_cast<std::int32_t>(rng() % k));
      }
      alg.ops.push_back(std::move(tab));
    }
    CHECK(same_report(check_model(alg, group), reference::check_model(alg, group)));
  }
}

TEST_CASE("parallel measurable_functions equals the serial reference") {
  std::mt19937_64 rng(92);
  for (int t = 0; t < 60; ++t) {
    const Carrier cx = Carrier::numeric(1 + static_cast<int>(rng() % 4));
    const Carrier cy = Carrier::numeric(1 + static_cast<int>(rng() % 4));
    const MeasurableSpace X{cx, generate_sigma(cx, verify::random_family(rng, cx, 3))};
    const Topology ty = generate_topology(cy, verify::random_family(rng, cy, 3));
    const SigmaAlgebra by = borel(ty);
    CHECK(measurable_functions(X, cy, by) ==
          reference::measurable_functions(X, cy, by));
  }
}

TEST_CASE("repeated runs are deterministic") {
  const Algebra bad = verify::z4_subtraction();
  const TheoryPresentation group = builtin_theory("Group");
  const ModelReport first = check_model(bad, group);
  for (int i = 0; i < 5; ++i) {
    CHECK(same_report(first, check_model(bad, group)));
  }
}

}  // TEST_SUITE
