#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "lawmeas/setcore.hpp"
#include "lawmeas/verify/oracles.hpp"

using namespace lawmeas;

TEST_SUITE("setcore") {

TEST_CASE("carrier labels are validated and indexed") {
  Carrier c({"a", "b", "c"});
  CHECK(c.size() == 3);
  CHECK(c.label(1) == "b");
  CHECK(c.index_of("c") == 2);
  CHECK(!c.index_of("d"));
  CHECK_THROWS_AS(Carrier({"a", "a"}), InputError);
  CHECK(Carrier::numeric(2) == Carrier({"0", "1"}));
}

TEST_CASE("complement on a 3-element carrier") {
  const Carrier c = Carrier::numeric(3);
  CHECK(complement(SubsetMask::of(c, {0})) == SubsetMask::of(c, {1, 2}));
  CHECK(complement(SubsetMask::empty(c)) == SubsetMask::full(c));
}

TEST_CASE("complement is an involution") {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 6; ++n) {
    const Carrier c = Carrier::numeric(n);
    for (int t = 0; t < 20; ++t) {
      const SubsetMask s = verify::random_mask(rng, c);
      CHECK(complement(complement(s)) == s);
    }
  }
}

TEST_CASE("masks order by numeric bit value") {
  const Carrier c = Carrier::numeric(3);
  CHECK(SubsetMask::of(c, {0}) < SubsetMask::of(c, {1}));
  CHECK(SubsetMask::of(c, {1}) < SubsetMask::of(c, {0, 1}));
  CHECK(SubsetMask::of(c, {0, 1}) < SubsetMask::of(c, {2}));
  SetFamily f{SubsetMask::of(c, {2}), SubsetMask::of(c, {0}),
              SubsetMask::of(c, {0})};
  canonicalize_family(f);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == SubsetMask::of(c, {0}));
  CHECK(family_contains(f, SubsetMask::of(c, {2})));
  CHECK(!family_contains(f, SubsetMask::of(c, {1})));
}

TEST_CASE("preimage of identity and constants") {
  const Carrier c = Carrier::numeric(3);
  const FiniteFunction id = FiniteFunction::identity(c);
  CHECK(preimage(id, SubsetMask::of(c, {1})) == SubsetMask::of(c, {1}));

  const FiniteFunction k0 = FiniteFunction::constant(c, c, 0);
  CHECK(preimage(k0, SubsetMask::of(c, {0})) == SubsetMask::full(c));
  CHECK(preimage(k0, SubsetMask::of(c, {1})) == SubsetMask::empty(c));
}

TEST_CASE("preimage commutes with union and intersection") {
  // Oracle: decide membership element by element on the domain.
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const Carrier dom = Carrier::numeric(1 + static_cast<int>(rng() % 5));
    const Carrier cod = Carrier::numeric(1 + static_cast<int>(rng() % 5));
    const FiniteFunction f =
        FiniteFunction::from_rank(dom, cod, rng() % checked_pow(cod.size(), dom.size()));
    const SubsetMask b1 = verify::random_mask(rng, cod);
    const SubsetMask b2 = verify::random_mask(rng, cod);

    SubsetMask expect_union(dom);
    SubsetMask expect_inter(dom);
    for (int x = 0; x < dom.size(); ++x) {
      if (b1.test(f(x)) || b2.test(f(x))) expect_union.set(x);
      if (b1.test(f(x)) && b2.test(f(x))) expect_inter.set(x);
    }
    CHECK(preimage(f, b1 | b2) == expect_union);
    CHECK(preimage(f, b1 | b2) == (preimage(f, b1) | preimage(f, b2)));
    CHECK(preimage(f, b1 & b2) == expect_inter);
    CHECK(preimage(f, b1 & b2) == (preimage(f, b1) & preimage(f, b2)));
    CHECK(preimage(f, SubsetMask::full(cod)) == SubsetMask::full(dom));
  }
}

TEST_CASE("preimage rejects a carrier mismatch") {
  const FiniteFunction f =
      FiniteFunction::constant(Carrier::numeric(2), Carrier::numeric(3), 0);
  CHECK_THROWS_AS(preimage(f, SubsetMask::empty(Carrier::numeric(2))),
                  CarrierMismatch);
}

TEST_CASE("function enumeration is lexicographic in the table") {
  const Carrier dom = Carrier::numeric(2);
  const Carrier cod = Carrier::numeric(3);
  std::vector<std::vector<std::int32_t>> tables;
  for (std::uint64_t r = 0; r < 9; ++r) {
    tables.push_back(FiniteFunction::from_rank(dom, cod, r).table);
  }
  CHECK(std::is_sorted(tables.begin(), tables.end()));
  CHECK(tables.front() == std::vector<std::int32_t>{0, 0});
  CHECK(tables.back() == std::vector<std::int32_t>{2, 2});
}

TEST_CASE("composition is associative and respects tables") {
  const Carrier a = Carrier::numeric(2), b = Carrier::numeric(3),
                c = Carrier::numeric(2);
  const FiniteFunction f{a, b, {2, 0}};
  const FiniteFunction g{b, c, {1, 1, 0}};
  const FiniteFunction h = compose(g, f);
  CHECK(h.table == std::vector<std::int32_t>{0, 1});
  CHECK_THROWS_AS(compose(f, f), CarrierMismatch);
}

TEST_CASE("all_partitions counts are Bell numbers") {
  CHECK(all_partitions(Carrier::numeric(0)).size() == 1);
  CHECK(all_partitions(Carrier::numeric(1)).size() == 1);
  CHECK(all_partitions(Carrier::numeric(3)).size() == 5);
  CHECK(all_partitions(Carrier::numeric(4)).size() == 15);

  // Bell-triangle oracle agrees on every size under the cap.
  for (int n = 0; n <= 6; ++n) {
    CHECK(all_partitions(Carrier::numeric(n)).size() == bell_number(n));
  }
  CHECK_THROWS_AS(all_partitions(Carrier::numeric(7)), CapExceeded);
}

TEST_CASE("partitions are valid, canonical, and distinct") {
  for (int n = 1; n <= 5; ++n) {
    const auto parts = all_partitions(Carrier::numeric(n));
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& p : parts) {
      validate_partition(p);
      std::vector<std::vector<int>> key;
      for (const auto& blk : p.blocks) key.push_back(blk.elements());
      CHECK(seen.insert(key).second);
    }
  }
}

TEST_CASE("refine_partition splits along a cut") {
  const Carrier c = Carrier::numeric(4);
  Partition p = Partition::one_block(c);
  refine_partition(p, SubsetMask::of(c, {1, 3}));
  REQUIRE(p.blocks.size() == 2);
  CHECK(p.blocks[0] == SubsetMask::of(c, {0, 2}));
  CHECK(p.blocks[1] == SubsetMask::of(c, {1, 3}));
  validate_partition(p);
}

TEST_CASE("bell numbers") {
  CHECK(bell_number(0) == 1);
  CHECK(bell_number(1) == 1);
  CHECK(bell_number(2) == 2);
  CHECK(bell_number(3) == 5);
  CHECK(bell_number(4) == 15);
  CHECK(bell_number(5) == 52);
  CHECK(bell_number(6) == 203);
}

}  // TEST_SUITE
