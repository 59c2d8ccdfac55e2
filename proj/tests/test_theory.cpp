#include <random>

#include "doctest.h"
#include "lawmeas/theory.hpp"
#include "lawmeas/verify/models.hpp"
#include "lawmeas/verify/oracles.hpp"

using namespace lawmeas;

namespace {

// The canonical Group file, spelled exactly as the DSL prints it.
const char* kGroupText =
    "theory Group\n"
    "ops: e/0, inv/1, mul/2\n"
    "eq: mul(e, x) = x\n"
    "eq: mul(x, e) = x\n"
    "eq: mul(mul(x, y), z) = mul(x, mul(y, z))\n"
    "eq: mul(inv(x), x) = e\n"
    "eq: mul(x, inv(x)) = e\n";

Algebra random_algebra_for(const TheoryPresentation& th, int k,
                           std::mt19937_64& rng) {
  Algebra alg;
  alg.carrier = Carrier::numeric(k);
  for (const auto& op : th.ops) {
    OpTable t{op.name, op.arity, {}};
    const std::int64_t len = checked_pow(k, op.arity);
    for (std::int64_t i = 0; i < len; ++i) {
      t.values.push_back(static_cast<std::int32_t>(rng() % k));
    }
    alg.ops.push_back(std::move(t));
  }
  return alg;
}

}  // namespace

TEST_SUITE("theory") {

TEST_CASE("the canonical group file parses to 3 ops and 5 equations") {
  const TheoryPresentation th = parse_theory(kGroupText);
  CHECK(th.name == "Group");
  REQUIRE(th.ops.size() == 3);
  CHECK(th.ops[0] == OpSymbol{"e", 0});
  CHECK(th.ops[1] == OpSymbol{"inv", 1});
  CHECK(th.ops[2] == OpSymbol{"mul", 2});
  CHECK(th.equations.size() == 5);
  CHECK(th.equations[2].var_count == 3);
  validate_presentation(th);
}

TEST_CASE("comments and blank lines are ignored") {
  const TheoryPresentation th = parse_theory(
      "# a comment\n\ntheory T # trailing\n\nops: f/1 # ops\n\n"
      "eq: f(x) = x # law\n\n");
  CHECK(th.name == "T");
  CHECK(th.ops.size() == 1);
  CHECK(th.equations.size() == 1);
}

TEST_CASE("the trivial theory parses") {
  const TheoryPresentation th = parse_theory("theory Trivial\nops:\n");
  CHECK(th.ops.empty());
  CHECK(th.equations.empty());
  CHECK(print_theory(th) == "theory Trivial\nops:\n");
}

TEST_CASE("parse errors carry kind, line, and column") {
  const std::string header = "theory G\nops: e/0, inv/1, mul/2\n";

  auto expect = [&](const std::string& text, const char* kind, int line, int col) {
    try {
      parse_theory(text);
      FAIL_CHECK("expected ParseError: " << kind);
    } catch (const ParseError& e) {
      CHECK(e.kind == kind);
      CHECK(e.line == line);
      CHECK(e.column == col);
    }
  };

  expect("theorem G\n", "lexical", 1, 1);
  expect(header + "eq: mul(x) = x\n", "arity mismatch", 3, 5);
  expect(header + "eq: foo(x) = x\n", "unknown operation", 3, 5);
  expect(header + "eq: mul(x, e) = y\n", "unbound variable", 3, 17);
  expect(header + "eq: mul(e, x = x\n", "lexical", 3, 14);
  expect(header + "eq: inv = e\n", "arity mismatch", 3, 5);
  expect("theory T\nops: f/1, f/2\n", "lexical", 2, 11);
}

TEST_CASE("builtins match their presentations") {
  const TheoryPresentation group = builtin_theory("Group");
  REQUIRE(group.ops.size() == 3);
  CHECK(group.equations.size() == 5);
  CHECK(group.equations[2].label == "assoc");
  CHECK(structurally_equal(group, parse_theory(kGroupText)));

  const TheoryPresentation ring = builtin_theory("Ring");
  CHECK(ring.ops.size() == 5);
  CHECK(ring.equations.size() == 11);

  const TheoryPresentation bare_ring = builtin_theory("BareRing");
  CHECK(bare_ring.equations.size() == 10);  // Ring without add_comm

  CHECK(builtin_theory("Monoid").equations.size() == 3);
  CHECK_THROWS_AS(builtin_theory("Field"), InputError);
}

TEST_CASE("print and parse round-trip") {
  for (const char* name : {"Group", "Monoid", "Ring", "BareRing"}) {
    const TheoryPresentation th = builtin_theory(name);
    const std::string text = print_theory(th);
    CHECK(structurally_equal(parse_theory(text), th));
    CHECK(print_theory(parse_theory(text)) == text);
  }
  CHECK(print_theory(builtin_theory("Group")) == kGroupText);
}

TEST_CASE("term evaluation") {
  const TheoryPresentation group = builtin_theory("Group");
  const Algebra z2 = verify::cyclic_group(2);
  const Algebra z3 = verify::cyclic_group(3);
  const BoundAlgebra b2 = bind_algebra(z2, group);
  const BoundAlgebra b3 = bind_algebra(z3, group);

  const Term& unit_lhs = group.equations[0].lhs;    // mul(e, x)
  const Term& inv_lhs = group.equations[4].lhs;     // mul(x, inv(x))
  const int env1[] = {1};
  const int env2[] = {2};
  CHECK(eval_term(unit_lhs, b2, env1) == 1);
  // inv(2) = 1 in Z3, and 2 + 1 = 0 mod 3.
  CHECK(eval_term(inv_lhs, b3, env2) == 0);
  CHECK(eval_term(Term::var(0), b3, env2) == 2);
}

TEST_CASE("evaluation respects variable permutation") {
  const TheoryPresentation group = builtin_theory("Group");
  const Algebra z4 = verify::cyclic_group(4);
  const BoundAlgebra bound = bind_algebra(z4, group);
  const Term& assoc_lhs = group.equations[2].lhs;  // mul(mul(x, y), z)

  // Swap variables 0 and 2 in the term and in the environment.
  auto swap02 = [](const Term& t, auto&& self) -> Term {
    if (t.kind == Term::Kind::Var) {
      return Term::var(t.index == 0 ? 2 : t.index == 2 ? 0 : t.index);
    }
    std::vector<Term> args;
    for (const auto& a : t.args) args.push_back(self(a, self));
    return Term::app(t.index, std::move(args));
  };
  const Term swapped = swap02(assoc_lhs, swap02);

  std::mt19937_64 rng(51);
  for (int t = 0; t < 50; ++t) {
    int env[3] = {static_cast<int>(rng() % 4), static_cast<int>(rng() % 4),
                  static_cast<int>(rng() % 4)};
    int perm[3] = {env[2], env[1], env[0]};
    CHECK(eval_term(assoc_lhs, bound, env) == eval_term(swapped, bound, perm));
  }
}

TEST_CASE("check_model accepts Z3 and Z2 and rejects Z4 subtraction") {
  CHECK(check_model(verify::cyclic_group(3), builtin_theory("Group")).pass);
  CHECK(check_model(verify::cyclic_ring(2), builtin_theory("Ring")).pass);
  CHECK(check_model(verify::cyclic_ring(3), builtin_theory("BareRing")).pass);
  CHECK(check_model(verify::klein_four(), builtin_theory("Group")).pass);

  const ModelReport bad =
      check_model(verify::z4_subtraction(), builtin_theory("Group"));
  CHECK(!bad.pass);
  bool saw_assoc = false;
  for (const auto& f : bad.failures) {
    if (f.equation_label != "assoc") continue;
    saw_assoc = true;
    CHECK(f.env == std::vector<int>{0, 0, 1});
    CHECK(f.lhs_value == 3);
    CHECK(f.rhs_value == 1);
  }
  CHECK(saw_assoc);
}

TEST_CASE("check_model agrees with the direct group-axiom oracle") {
  const TheoryPresentation group = builtin_theory("Group");

  // Exhaustive on two elements: every mul table with every e and inv.
  const int k = 2;
  for (int mul_rank = 0; mul_rank < 16; ++mul_rank) {
    for (int e = 0; e < k; ++e) {
      for (int inv_rank = 0; inv_rank < 4; ++inv_rank) {
        Algebra alg;
        alg.carrier = Carrier::numeric(k);
        alg.ops.push_back(OpTable{"e", 0, {e}});
        alg.ops.push_back(OpTable{
            "inv", 1, {inv_rank >> 1, inv_rank & 1}});
        OpTable mul{"mul", 2, {}};
        for (int i = 3; i >= 0; --i) mul.values.push_back((mul_rank >> i) & 1);
        alg.ops.push_back(std::move(mul));

        CHECK(check_model(alg, group).pass == verify::direct_group_axioms(alg));
      }
    }
  }

  // Random tables on three and four elements.
  std::mt19937_64 rng(52);
  for (int t = 0; t < 400; ++t) {
    const Algebra alg = random_algebra_for(group, 3 + static_cast<int>(rng() % 2), rng);
    CHECK(check_model(alg, group).pass == verify::direct_group_axioms(alg));
  }
}

TEST_CASE("BareRing and Ring have the same finite models") {
  // Commutativity of addition is derivable from the unital ring axioms
  // (expand (1+1)(x+y) with both distributive laws), so dropping the axiom
  // changes no verdict.
  const TheoryPresentation ring = builtin_theory("Ring");
  const TheoryPresentation bare = builtin_theory("BareRing");
  for (int k = 2; k <= 4; ++k) {
    CHECK(check_model(verify::cyclic_ring(k), bare).pass);
  }
  std::mt19937_64 rng(53);
  for (int t = 0; t < 300; ++t) {
    const Algebra alg = random_algebra_for(ring, 2 + static_cast<int>(rng() % 2), rng);
    CHECK(check_model(alg, bare).pass == check_model(alg, ring).pass);
  }
}

TEST_CASE("check_model reports a missing table and the state cap") {
  Algebra incomplete = verify::cyclic_group(2);
  incomplete.ops.erase(incomplete.ops.begin() + 1);  // drop inv
  CHECK_THROWS_AS(check_model(incomplete, builtin_theory("Group")), InputError);

  Caps tight;
  tight.model_check_max_states = 10;
  CHECK_THROWS_AS(check_model(verify::cyclic_group(4), builtin_theory("Group"), tight),
                  CapExceeded);
}

TEST_CASE("failed equations report the lexicographically least environment") {
  // mul = max(a,b) on {0,1}: idempotent monoid with unit 0, no inverses.
  Algebra alg;
  alg.carrier = Carrier::numeric(2);
  alg.ops.push_back(OpTable{"e", 0, {0}});
  alg.ops.push_back(OpTable{"inv", 1, {0, 0}});
  alg.ops.push_back(OpTable{"mul", 2, {0, 1, 1, 1}});
  const ModelReport report = check_model(alg, builtin_theory("Group"));
  CHECK(!report.pass);
  REQUIRE(report.failures.size() == 2);  // inv_l and inv_r
  CHECK(report.failures[0].equation_label == "inv_l");
  CHECK(report.failures[0].env == std::vector<int>{1});
  CHECK(report.failures[1].equation_label == "inv_r");
}

}  // TEST_SUITE
