#include <random>

#include "doctest.h"
#include "lawmeas/topology.hpp"
#include "lawmeas/verify/models.hpp"
#include "lawmeas/verify/oracles.hpp"

using namespace lawmeas;

TEST_SUITE("topology") {

TEST_CASE("axiom check on the Sierpinski family") {
  const Carrier c = Carrier::numeric(2);
  CHECK(is_topology(c, {SubsetMask::empty(c), SubsetMask::of(c, {1}),
                        SubsetMask::full(c)})
            .ok);
}

TEST_CASE("axiom check reports a missing union") {
  const Carrier c = Carrier::numeric(3);
  const SetFamily family{SubsetMask::empty(c), SubsetMask::of(c, {0}),
                         SubsetMask::of(c, {1}), SubsetMask::full(c)};
  const TopologyCheck check = is_topology(c, family);
  CHECK(!check.ok);
  CHECK(check.axiom == TopologyAxiom::UnionClosed);
  REQUIRE(check.offenders.size() == 2);
  CHECK((check.offenders[0] | check.offenders[1]) == SubsetMask::of(c, {0, 1}));
}

TEST_CASE("every sigma-algebra on small carriers is a topology") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& s : all_sigma_algebras(Carrier::numeric(n))) {
      CHECK(is_topology(s.carrier, s.members).ok);
    }
  }
}

TEST_CASE("generate_topology matches the naive fixpoint oracle") {
  const Carrier c = Carrier::numeric(3);
  SUBCASE("empty subbasis gives the indiscrete topology") {
    const Topology t = generate_topology(c, {});
    CHECK(t.opens == SetFamily{SubsetMask::empty(c), SubsetMask::full(c)});
  }
  SUBCASE("all singletons give the discrete topology") {
    const Topology t = generate_topology(
        c, {SubsetMask::of(c, {0}), SubsetMask::of(c, {1}), SubsetMask::of(c, {2})});
    CHECK(t.opens.size() == 8);
  }
  SUBCASE("the hand-closed example") {
    const SetFamily sub{SubsetMask::of(c, {0, 1}), SubsetMask::of(c, {1, 2})};
    const Topology t = generate_topology(c, sub);
    CHECK(t.opens == SetFamily{SubsetMask::empty(c), SubsetMask::of(c, {1}),
                               SubsetMask::of(c, {0, 1}), SubsetMask::of(c, {1, 2}),
                               SubsetMask::full(c)});
    CHECK(t.opens == verify::naive_topology_closure(c, sub));
  }
  SUBCASE("random subbases agree with the oracle") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
      const Carrier cr = Carrier::numeric(1 + static_cast<int>(rng() % 4));
      const SetFamily sub = verify::random_family(rng, cr, 3);
      const Topology topo = generate_topology(cr, sub);
      CHECK(topo.opens == verify::naive_topology_closure(cr, sub));
      CHECK(is_topology(cr, topo.opens).ok);
    }
  }
}

TEST_CASE("is_open agrees with the open list") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 100; ++t) {
    const Carrier c = Carrier::numeric(1 + static_cast<int>(rng() % 4));
    const Topology topo = generate_topology(c, verify::random_family(rng, c, 3));
    const SubsetMask probe = verify::random_mask(rng, c);
    CHECK(topo.is_open(probe) == family_contains(topo.opens, probe));
  }
}

TEST_CASE("the Sierpinski square has exactly the six stated opens") {
  const Topology s = verify::sierpinski();
  const ProductSpace sq = product_topology(s, 2);
  // Point order: (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3.
  const Carrier& c = sq.carrier;
  REQUIRE(c.size() == 4);
  CHECK(c.label(1) == "(0,1)");

  const SetFamily expected{SubsetMask::empty(c),        SubsetMask::of(c, {3}),
                           SubsetMask::of(c, {1, 3}),   SubsetMask::of(c, {2, 3}),
                           SubsetMask::of(c, {1, 2, 3}), SubsetMask::full(c)};
  CHECK(sq.topology.opens == expected);

  // Brute-force oracle: all unions over the basis boxes.
  SetFamily unions;
  const std::size_t nb = sq.basis.size();
  for (std::size_t pick = 0; pick < (std::size_t{1} << nb); ++pick) {
    SubsetMask u(c);
    for (std::size_t i = 0; i < nb; ++i) {
      if ((pick >> i) & 1u) u = u | sq.basis[i];
    }
    unions.push_back(u);
  }
  canonicalize_family(unions);
  CHECK(unions == sq.topology.opens);
}

TEST_CASE("empty products and discrete powers") {
  const Topology s = verify::sierpinski();
  const ProductSpace point = product_topology(s, 0);
  CHECK(point.carrier.size() == 1);
  CHECK(point.topology.opens.size() == 2);

  const ProductSpace sq = product_topology(discrete_topology(Carrier::numeric(2)), 2);
  CHECK(sq.carrier.size() == 4);
  CHECK(sq.topology.opens.size() == 16);  // discrete on 2^2 points
}

TEST_CASE("projections are continuous and boxes behave like a basis") {
  const Topology s = verify::sierpinski();
  const Topology chain = verify::curated_spaces(3)[5];
  const ProductSpace prod = product_of({s, chain});
  for (int i = 0; i < 2; ++i) {
    const FiniteFunction proj = prod.projection(i);
    CHECK(is_topology(prod.carrier, prod.topology.opens).ok);
    for (const auto& open : prod.factors[i].opens) {
      CHECK(prod.topology.is_open(preimage(proj, open)));
    }
  }
  for (const auto& box : prod.basis) CHECK(prod.topology.is_open(box));
  for (const auto& open : prod.topology.opens) {
    SubsetMask covered(prod.carrier);
    for (const auto& box : prod.basis) {
      if (box.subset_of(open)) covered = covered | box;
    }
    CHECK(covered == open);
  }
}

TEST_CASE("borel of the curated spaces") {
  const Carrier c2 = Carrier::numeric(2);
  CHECK(borel(indiscrete_topology(c2)).members.size() == 2);
  CHECK(borel(verify::sierpinski()).members.size() == 4);  // full power set
  CHECK(borel(verify::sierpinski()).members ==
        verify::naive_sigma_closure(c2, verify::sierpinski().opens));
  CHECK(borel(discrete_topology(Carrier::numeric(3))).members.size() == 8);
}

TEST_CASE("borel contains every open") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 60; ++t) {
    const Carrier c = Carrier::numeric(1 + static_cast<int>(rng() % 4));
    const Topology topo = generate_topology(c, verify::random_family(rng, c, 3));
    const SigmaAlgebra b = borel(topo);
    for (const auto& open : topo.opens) CHECK(b.contains(open));
  }
}

TEST_CASE("product carrier cap") {
  const Topology d4 = discrete_topology(Carrier::numeric(4));
  CHECK_THROWS_AS(product_topology(d4, 7), CapExceeded);  // 4^7 > 4096
}

}  // TEST_SUITE
