#include "lawmeas/verify/suite.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <random>

#include "lawmeas/cocountable.hpp"
#include "lawmeas/measmodel.hpp"
#include "lawmeas/verify/models.hpp"
#include "lawmeas/verify/oracles.hpp"

namespace lawmeas::verify {

namespace {

// Accumulates checks; keeps the first failure only.
struct Recorder {
  std::int64_t cases = 0;
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& why) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

int clamp_size(int stated, const SuiteOptions& opts) {
  return opts.full ? stated : std::min(stated, opts.max_carrier);
}

Carrier letters(int n) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(names[i]);
  return Carrier(std::move(labels));
}

// ---------------------------------------------------------------- criterion 1

CriterionResult criterion_sigma_oracle(const SuiteOptions& opts) {
  CriterionResult r{1, "generate_sigma equals the naive closure oracle", true, 0, "", 0};
  Recorder rec;
  const int nmax = clamp_size(6, opts);
  for (int n = 1; n <= nmax; ++n) {
    const Carrier c = Carrier::numeric(n);
    std::mt19937_64 rng(1000 + n);
    for (int t = 0; t < 200; ++t) {
      const SetFamily gens = random_family(rng, c, 4);
      const SigmaAlgebra fast = generate_sigma(c, gens);
      const SetFamily oracle = naive_sigma_closure(c, gens);
      rec.check(fast.members == oracle,
                "mismatch on carrier " + std::to_string(n) + ", trial " +
                    std::to_string(t));
    }
  }
  r.pass = rec.pass;
  r.cases = rec.cases;
  r.detail = rec.detail;
  return r;
}

// ---------------------------------------------------------------- criterion 2

CriterionResult criterion_borel_infimum(const SuiteOptions& opts) {
  CriterionResult r{2, "borel is the infimum of sigma-algebras containing the opens",
                     true, 0, "", 0};
  Recorder rec;
  const int nmax = clamp_size(4, opts);
  for (int n = 1; n <= nmax; ++n) {
    const Carrier c = Carrier::numeric(n);
    const std::vector<SigmaAlgebra> all = all_sigma_algebras(c);
    std::mt19937_64 rng(2000 + n);
    for (int t = 0; t < 100; ++t) {
      const Topology topo = generate_topology(c, random_family(rng, c, 3));
      const SigmaAlgebra b = borel(topo);

      std::optional<SigmaAlgebra> inf;
      for (const auto& s : all) {
        const bool contains_opens =
            std::all_of(topo.opens.begin(), topo.opens.end(),
                        [&](const SubsetMask& u) { return s.contains(u); });
        if (!contains_opens) continue;
        inf = inf ? intersect_sigma(*inf, s) : s;
      }
      rec.check(inf.has_value() && inf->members == b.members,
                "infimum mismatch on carrier " + std::to_string(n) +
                    ", trial " + std::to_string(t));
    }
  }
  r.pass = rec.pass;
  r.cases = rec.cases;
  r.detail = rec.detail;
  return r;
}

// ---------------------------------------------------------------- criterion 3

CriterionResult criterion_sigma_is_topology(const SuiteOptions& opts) {
  CriterionResult r{3, "every finite sigma-algebra satisfies the topology axioms",
                     true, 0, "", 0};
  Recorder rec;
  const int nmax = clamp_size(5, opts);
  std::int64_t swept = 0;
  std::uint64_t expected = 0;
  for (int n = 1; n <= nmax; ++n) {
    expected += bell_number(n);
    for (const auto& s : all_sigma_algebras(Carrier::numeric(n))) {
      rec.check(sigma_satisfies_topology(s),
                "sigma-algebra on " + std::to_string(n) +
                    " elements fails the topology axioms");
      ++swept;
    }
  }
  rec.check(static_cast<std::uint64_t>(swept) == expected,
            "swept " + std::to_string(swept) + " sigma-algebras, expected " +
                std::to_string(expected));
  r.pass = rec.pass;
  r.cases = rec.cases;
  r.detail = rec.detail;
  return r;
}

// ---------------------------------------------------------------- criterion 4

void lemma_continuity(Recorder& rec, const SuiteOptions& opts) {
  const auto spaces = curated_spaces(clamp_size(3, opts));
  for (const auto& src : spaces) {
    for (const auto& tgt : spaces) {
      const std::int64_t total =
          checked_pow(tgt.carrier.size(), src.carrier.size());
      for (std::int64_t rank = 0; rank < total; ++rank) {
        const FiniteFunction f = FiniteFunction::from_rank(
            src.carrier, tgt.carrier, static_cast<std::uint64_t>(rank));
        if (!is_continuous(f, src, tgt).continuous) continue;
        rec.check(continuous_implies_measurable_check(f, src, tgt),
                  "continuous function not measurable");
      }
    }
  }
}

void lemma_composition_exhaustive(Recorder& rec, const SuiteOptions& opts) {
  const auto spaces = curated_spaces(clamp_size(3, opts));
  for (int nx = 1; nx <= clamp_size(3, opts); ++nx) {
    const Carrier cx = letters(nx);
    for (const auto& sx : all_sigma_algebras(cx)) {
      const MeasurableSpace X{cx, sx};
      for (const auto& ty : spaces) {
        const SigmaAlgebra by = borel(ty);
        const auto fs = measurable_functions(X, ty.carrier, by);
        const MeasurableSpace Yspace{ty.carrier, by};
        for (const auto& tz : spaces) {
          const SigmaAlgebra bz = borel(tz);
          const auto gs = measurable_functions(Yspace, tz.carrier, bz);
          for (const auto& f : fs) {
            for (const auto& g : gs) {
              rec.check(compose_measurable(f, g, X, bz).measurable,
                        "composite of measurable functions not measurable");
            }
          }
        }
      }
    }
  }
}

void lemma_composition_randomized(Recorder& rec) {
  std::mt19937_64 rng(4004);
  const Carrier cx = letters(4);
  const auto partitions = all_partitions(cx);
  for (int t = 0; t < 500; ++t) {
    const MeasurableSpace X{
        cx, sigma_from_partition(partitions[rng() % partitions.size()])};
    const Carrier cy = Carrier::numeric(2 + static_cast<int>(rng() % 3));
    const Carrier cz = Carrier::numeric(2 + static_cast<int>(rng() % 3));
    const Topology ty = generate_topology(cy, random_family(rng, cy, 3));
    const Topology tz = generate_topology(cz, random_family(rng, cz, 3));
    const SigmaAlgebra by = borel(ty);
    const SigmaAlgebra bz = borel(tz);
    const auto fs = measurable_functions(X, cy, by);
    const auto gs = measurable_functions(MeasurableSpace{cy, by}, cz, bz);
    const FiniteFunction& f = fs[rng() % fs.size()];
    const FiniteFunction& g = gs[rng() % gs.size()];
    rec.check(compose_measurable(f, g, X, bz).measurable,
              "randomized composite not measurable, trial " + std::to_string(t));
  }
}

void lemma_pairing(Recorder& rec, const SuiteOptions& opts) {
  const Topology s = sierpinski();
  const ProductSpace prod = product_topology(s, 2);
  rec.check(prod.topology.opens.size() == 6,
            "Sierpinski^2 should have exactly 6 opens");
  const SigmaAlgebra b1 = borel(s);
  const SigmaAlgebra bp = borel(prod.topology);
  const Carrier cx = letters(clamp_size(3, opts));
  for (const auto& sx : all_sigma_algebras(cx)) {
    const MeasurableSpace X{cx, sx};
    const auto fs = measurable_functions(X, s.carrier, b1);
    for (const auto& f1 : fs) {
      for (const auto& f2 : fs) {
        const FiniteFunction h = pairing({f1, f2}, prod);
        rec.check(is_measurable(h, X, bp).measurable,
                  "pairing of measurable components not measurable");
        rec.check(compose(prod.projection(0), h) == f1 &&
                      compose(prod.projection(1), h) == f2,
                  "projections do not recover the paired components");
      }
    }
  }
}

CriterionResult criterion_lemmas(const SuiteOptions& opts) {
  CriterionResult r{4, "measurability lemmas: continuity, composition, pairing",
                     true, 0, "", 0};
  Recorder rec;
  lemma_continuity(rec, opts);
  lemma_composition_exhaustive(rec, opts);
  if (opts.full || opts.max_carrier >= 4) lemma_composition_randomized(rec);
  lemma_pairing(rec, opts);
  r.pass = rec.pass;
  r.cases = rec.cases;
  r.detail = rec.detail;
  return r;
}

// ---------------------------------------------------------------- criterion 5

CriterionResult criterion_main_theorem(const SuiteOptions& opts) {
  CriterionResult r{5, "main theorem sweep: closure, equations, product preservation",
                     true, 0, "", 0};
  Recorder rec;

  struct ModelCase {
    Algebra algebra;
    const char* theory;
    const char* name;
  };
  const std::vector<ModelCase> models = {
      {cyclic_group(2), "Group", "Z2 group"},
      {cyclic_group(3), "Group", "Z3 group"},
      {cyclic_group(4), "Group", "Z4 group"},
      {klein_four(), "Group", "Klein four"},
      {cyclic_ring(2), "Ring", "Z2 ring"},
      {cyclic_ring(3), "Ring", "Z3 ring"},
      {cyclic_ring(4), "Ring", "Z4 ring"},
  };

  const int nxmax = clamp_size(3, opts);
  for (int nx = 1; nx <= nxmax; ++nx) {
    const Carrier cx = letters(nx);
    for (const auto& sx : all_sigma_algebras(cx)) {
      const MeasurableSpace X{cx, sx};
      for (const auto& mc : models) {
        const TheoryPresentation th = builtin_theory(mc.theory);
        for (int disc = 0; disc < 2; ++disc) {
          const Topology top = disc ? discrete_topology(mc.algebra.carrier)
                                    : indiscrete_topology(mc.algebra.carrier);
          const TopologicalAlgebra Y{mc.algebra, top};
          const TheoremReport report = verify_theorem(X, Y, th);
          rec.check(report.pass,
                    std::string(mc.name) + (disc ? " discrete" : " indiscrete") +
                        ", |X|=" + std::to_string(nx) + ": " +
                        (report.failures.empty() ? "failed" : report.failures[0]));
        }
      }
    }
  }
  r.pass = rec.pass;
  r.cases = rec.cases;
  r.detail = rec.detail;
  return r;
}

// ---------------------------------------------------------------- criterion 6

CriterionResult criterion_negative_controls(const SuiteOptions&) {
  CriterionResult r{6, "negative controls produce the canonical witnesses", true,
                     0, "", 0};
  Recorder rec;

  // Z4 with subtraction is not a group; associativity must fail and the
  // canonical (lexicographically least) witness is (0,0,1).
  {
    const Algebra bad = z4_subtraction();
    const ModelReport report = check_model(bad, builtin_theory("Group"));
    const auto assoc = std::find_if(
        report.failures.begin(), report.failures.end(),
        [](const ModelFailure& f) { return f.equation_label == "assoc"; });
    rec.check(!report.pass && assoc != report.failures.end(),
              "Z4 subtraction: associativity failure missing");
    if (assoc != report.failures.end()) {
      rec.check(assoc->env == std::vector<int>({0, 0, 1}),
                "Z4 subtraction: canonical associativity witness is not (0,0,1)");
    }
    // The illustrative instance (1,1,1) also violates: (1-1)-1 = 3, 1-(1-1) = 1.
    const auto* mul = bad.find("mul");
    auto sub = [&](int a, int b) { return mul->values[a * 4 + b]; };
    rec.check(sub(sub(1, 1), 1) == 3 && sub(1, sub(1, 1)) == 1,
              "Z4 subtraction: instance (1,1,1) does not violate as expected");
  }

  // Z2 with the Sierpinski topology is not a topological group: mul fails
  // continuity with witness open {1}, preimage {(0,1),(1,0)}.
  {
    const Algebra z2 = cyclic_group(2);
    const Topology s = sierpinski();
    const TopModelReport report =
        check_topological_model(z2, s, builtin_theory("Group"));
    rec.check(!report.pass && report.equations_pass && !report.continuity_pass,
              "Z2/Sierpinski: expected a pure continuity failure");
    rec.check(report.continuity_failures.size() == 1 &&
                  report.continuity_failures[0].op == "mul",
              "Z2/Sierpinski: exactly mul should fail continuity");
    if (!report.continuity_failures.empty()) {
      const auto& fail = report.continuity_failures[0];
      rec.check(fail.witness_open == SubsetMask::single(s.carrier, 1),
                "Z2/Sierpinski: witness open is not {1}");
      rec.check(fail.preimage.elements() == std::vector<int>({1, 2}),
                "Z2/Sierpinski: preimage is not {(0,1),(1,0)}");
    }
  }

  // A non-constant function out of an indiscrete source is not measurable;
  // the canonical witness is {0} with preimage {a}.
  {
    const Carrier cx = letters(2);
    const MeasurableSpace X{cx, generate_sigma(cx, {})};
    const Carrier c2 = Carrier::numeric(2);
    const SigmaAlgebra target = borel(discrete_topology(c2));
    const FiniteFunction f{cx, c2, {0, 1}};
    const MeasurabilityVerdict verdict = is_measurable(f, X, target);
    rec.check(!verdict.measurable, "non-constant function should not be measurable");
    rec.check(verdict.witness && *verdict.witness == SubsetMask::single(c2, 0),
              "measurability witness is not {0}");
    rec.check(verdict.witness_preimage &&
                  *verdict.witness_preimage == SubsetMask::single(cx, 0),
              "measurability witness preimage is not {a}");
  }

  r.pass = rec.pass;
  r.cases = rec.cases;
  r.detail = rec.detail;
  return r;
}

// ---------------------------------------------------------------- criterion 7

CriterionResult criterion_cocountable(const SuiteOptions&) {
  CriterionResult r{7, "cocountable tag algebra and the non-topology witness",
                     true, 0, "", 0};
  Recorder rec;
  const std::vector<std::string> alphabet = {"a", "b", "c", "d"};

  // Every CocoSet supported inside the alphabet: 16 supports x 2 tags.
  std::vector<CocoSet> sets;
  for (int tag = 0; tag < 2; ++tag) {
    for (unsigned pick = 0; pick < 16; ++pick) {
      std::vector<std::string> support;
      for (int i = 0; i < 4; ++i) {
        if ((pick >> i) & 1u) support.push_back(alphabet[i]);
      }
      sets.push_back(tag == 0 ? CocoSet::small(std::move(support))
                              : CocoSet::cosmall(std::move(support)));
    }
  }

  auto oracle_union = [&](const std::vector<CocoSet>& family) {
    std::vector<bool> v(alphabet.size() + 1, false);
    for (const auto& s : family) {
      const auto m = coco_membership(s, alphabet);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] || m[i];
    }
    return v;
  };

  // All ordered families of size <= 3 over the 32 sets.
  std::vector<std::vector<CocoSet>> families;
  families.push_back({});
  for (const auto& s : sets) families.push_back({s});
  for (const auto& s1 : sets) {
    for (const auto& s2 : sets) families.push_back({s1, s2});
  }
  for (const auto& s1 : sets) {
    for (const auto& s2 : sets) {
      for (const auto& s3 : sets) families.push_back({s1, s2, s3});
    }
  }

  for (const auto& family : families) {
    const CocoSet u = coco_union(family);
    rec.check(coco_membership(u, alphabet) == oracle_union(family),
              "tag-algebra union disagrees with the elementwise oracle");

    // De Morgan against the oracle: complement of the union has exactly the
    // memberships that every complement has.
    const CocoSet dual = coco_complement(u);
    std::vector<bool> expect(alphabet.size() + 1, true);
    for (const auto& s : family) {
      const auto m = coco_membership(coco_complement(s), alphabet);
      for (std::size_t i = 0; i < expect.size(); ++i) {
        expect[i] = expect[i] && m[i];
      }
    }
    rec.check(coco_membership(dual, alphabet) == expect,
              "De Morgan dual disagrees with the elementwise oracle");
  }

  // Algebraic laws on random triples.
  std::mt19937_64 rng(7007);
  for (int t = 0; t < 500; ++t) {
    const CocoSet& a = sets[rng() % sets.size()];
    const CocoSet& b = sets[rng() % sets.size()];
    const CocoSet& c = sets[rng() % sets.size()];
    rec.check(coco_union({a, b}) == coco_union({b, a}), "union not commutative");
    rec.check(coco_union({a, a}) == coco_union({a}), "union not idempotent");
    rec.check(coco_union({coco_union({a, b}), c}) ==
                  coco_union({a, coco_union({b, c})}),
              "union not associative");
    rec.check(coco_complement(coco_complement(a)) == a,
              "complement not an involution");
  }

  const CocoWitnessReport report = coco_non_topology_witness();
  rec.check(report.fact_a, "witness fact (a) does not hold");
  rec.check(report.fact_b, "witness fact (b) does not hold");
  rec.check(report.conclusion == "not a topology",
            "witness conclusion is not 'not a topology'");

  r.pass = rec.pass;
  r.cases = rec.cases;
  r.detail = rec.detail;
  return r;
}

// ---------------------------------------------------------------- criterion 8

TheoryPresentation random_presentation(std::mt19937_64& rng) {
  TheoryPresentation th;
  th.name = "T" + std::to_string(rng() % 1000);
  th.ops.push_back(OpSymbol{"c0", 0});  // keep ground right-hand sides possible
  const int extra = 1 + static_cast<int>(rng() % 4);
  for (int i = 1; i <= extra; ++i) {
    th.ops.push_back(OpSymbol{"f" + std::to_string(i), static_cast<int>(rng() % 4)});
  }

  struct TermGen {
    std::mt19937_64& rng;
    const TheoryPresentation& th;
    std::vector<std::string>& vars;

    Term gen(bool can_introduce, int depth) {
      const bool leaf = depth >= 2 || (rng() % 3 == 0);
      if (leaf) {
        const bool may_new = can_introduce && vars.size() < 4;
        const int choices = (vars.empty() ? 0 : 1) + (may_new ? 1 : 0) + 1;
        const int pick = static_cast<int>(rng() % choices);
        if (!vars.empty() && pick == 0) {
          return Term::var(static_cast<int>(rng() % vars.size()));
        }
        if (may_new && pick == choices - 2) {
          vars.push_back("x" + std::to_string(vars.size()));
          return Term::var(static_cast<int>(vars.size()) - 1);
        }
        return Term::app(0, {});  // the constant c0
      }
      const int op = static_cast<int>(rng() % th.ops.size());
      std::vector<Term> args;
      for (int i = 0; i < th.ops[op].arity; ++i) {
        args.push_back(gen(can_introduce, depth + 1));
      }
      return Term::app(op, std::move(args));
    }
  };

  const int neqs = static_cast<int>(rng() % 5);
  for (int e = 0; e < neqs; ++e) {
    Equation eq;
    std::vector<std::string> vars;
    TermGen gen{rng, th, vars};
    eq.lhs = gen.gen(true, 0);
    eq.rhs = gen.gen(false, 0);
    eq.var_count = static_cast<int>(vars.size());
    eq.var_names = std::move(vars);
    eq.label = "eq" + std::to_string(th.equations.size() + 1);
    th.equations.push_back(std::move(eq));
  }
  validate_presentation(th);
  return th;
}

CriterionResult criterion_parser(const SuiteOptions&) {
  CriterionResult r{8, "theory DSL round-trip and diagnostics", true, 0, "", 0};
  Recorder rec;

  for (const char* name : {"Group", "Monoid", "Ring", "BareRing"}) {
    const TheoryPresentation th = builtin_theory(name);
    const std::string text = print_theory(th);
    const TheoryPresentation back = parse_theory(text);
    rec.check(structurally_equal(th, back),
              std::string(name) + ": parse(print) is not structurally equal");
    rec.check(print_theory(back) == text,
              std::string(name) + ": print is not a fixed point of parse-print");
  }

  std::mt19937_64 rng(8008);
  for (int t = 0; t < 100; ++t) {
    const TheoryPresentation th = random_presentation(rng);
    const std::string text = print_theory(th);
    const TheoryPresentation back = parse_theory(text);
    rec.check(structurally_equal(th, back),
              "random presentation " + std::to_string(t) + ": round trip differs");
    rec.check(print_theory(back) == text,
              "random presentation " + std::to_string(t) + ": print not stable");
  }

  const std::string group_header = "theory G\nops: e/0, inv/1, mul/2\n";
  auto expect_error = [&](const std::string& text, const char* kind, int line,
                          int col) {
    try {
      parse_theory(text);
      rec.check(false, std::string("expected a ") + kind + " error");
    } catch (const ParseError& e) {
      rec.check(e.kind == kind && e.line == line && e.column == col,
                std::string("expected ") + kind + " at " + std::to_string(line) +
                    ":" + std::to_string(col) + ", got " + e.kind + " at " +
                    std::to_string(e.line) + ":" + std::to_string(e.column));
    }
  };

  expect_error("theorem G\n", "lexical", 1, 1);
  expect_error(group_header + "eq: mul(e, x = x\n", "lexical", 3, 14);
  expect_error(group_header + "eq: foo(x) = x\n", "unknown operation", 3, 5);
  expect_error(group_header + "eq: mul(x) = x\n", "arity mismatch", 3, 5);
  expect_error(group_header + "eq: mul(x, e) = y\n", "unbound variable", 3, 17);

  r.pass = rec.pass;
  r.cases = rec.cases;
  r.detail = rec.detail;
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opts) {
  using Criterion = CriterionResult (*)(const SuiteOptions&);
  const Criterion criteria[] = {
      criterion_sigma_oracle,    criterion_borel_infimum,
      criterion_sigma_is_topology, criterion_lemmas,
      criterion_main_theorem,    criterion_negative_controls,
      criterion_cocountable,     criterion_parser,
  };
  std::vector<CriterionResult> results;
  for (Criterion fn : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult res = fn(opts);
    res.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace lawmeas::verify
