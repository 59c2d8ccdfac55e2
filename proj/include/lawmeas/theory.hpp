#ifndef LAWMEAS_THEORY_HPP
#define LAWMEAS_THEORY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lawmeas/caps.hpp"
#include "lawmeas/errors.hpp"
#include "lawmeas/setcore.hpp"

namespace lawmeas {

// A finitary operation symbol.
struct OpSymbol {
  std::string name;
  int arity = 0;
  bool operator==(const OpSymbol&) const = default;
};

// A term over a presentation: a variable (by index) or an operation applied
// to argument terms. App terms reference the operation by its index in the
// presentation's op list.
struct Term {
  enum class Kind { Var, App };

  Kind kind = Kind::Var;
  int index = 0;
  std::vector<Term> args;

  static Term var(int i) { return Term{Kind::Var, i, {}}; }
  static Term app(int op, std::vector<Term> a) {
    return Term{Kind::App, op, std::move(a)};
  }

  bool operator==(const Term& o) const;
};

// 1 + the largest variable index occurring in t (0 when t has no variables).
int var_span(const Term& t);

// A universally quantified equation between two terms over var_count
// variables. var_names drive printing only; labels drive reports only.
struct Equation {
  std::string label;
  int var_count = 0;
  std::vector<std::string> var_names;
  Term lhs;
  Term rhs;
};

// A finitary equational presentation: op symbols plus equations. Hom-sets
// are never materialized; models are plain algebras checked against the
// equations.
struct TheoryPresentation {
  std::string name;
  std::vector<OpSymbol> ops;
  std::vector<Equation> equations;

  std::optional<int> op_index(std::string_view op_name) const;
};

// Checks the structural invariants (unique op names, App arities, variable
// indices within var_count); throws InputError on violation.
void validate_presentation(const TheoryPresentation& th);

// Name, ops, and equation terms coincide; labels and variable names are
// presentation detail and are ignored (printing drops labels, so round
// trips regenerate positional ones).
bool structurally_equal(const TheoryPresentation& a, const TheoryPresentation& b);

// Parses the theory DSL:
//
//   theory Name
//   ops: e/0, inv/1, mul/2
//   eq: mul(e, x) = x
//
// Comments run from '#' to end of line; blank lines are ignored. Names not
// declared as operations are variables, indexed in order of first
// appearance; a right-hand-side variable that never appears on the left is
// an error. Throws ParseError with 1-based line/column and one of the kinds
// "lexical", "unknown operation", "arity mismatch", "unbound variable".
TheoryPresentation parse_theory(std::string_view text);

// Canonical printer; parse(print(th)) is structurally equal to th.
std::string print_theory(const TheoryPresentation& th);

// Built-in presentations: "Group", "Monoid", "Ring", and "BareRing" (Ring
// with the commutativity-of-addition axiom left out; for unital rings it is
// derivable, so the two have the same finite models). Throws InputError for
// unknown names.
TheoryPresentation builtin_theory(std::string_view name);

// A total operation table: values in row-major order with argument 0 most
// significant, length carrier^arity. Arity-0 tables hold one entry.
struct OpTable {
  std::string name;
  int arity = 0;
  std::vector<std::int32_t> values;
};

// A finite algebra: a carrier plus one table per operation name.
struct Algebra {
  Carrier carrier;
  std::vector<OpTable> ops;

  const OpTable* find(std::string_view op_name) const;
};

// Validates table lengths and value ranges; throws InputError (or
// NoConstantsPossible for an arity-0 table on an empty carrier).
void validate_algebra(const Algebra& a);

// Tables resolved against a presentation's op list. Throws InputError when
// a table is missing or its arity disagrees.
struct BoundAlgebra {
  const Algebra* algebra = nullptr;
  const TheoryPresentation* theory = nullptr;
  std::vector<const OpTable*> tables;  // indexed like theory->ops
};

BoundAlgebra bind_algebra(const Algebra& alg, const TheoryPresentation& th);

// Structural recursion: variables read the environment, applications
// evaluate arguments and look up the table row-major.
int eval_term(const Term& t, const BoundAlgebra& b, std::span<const int> env);

struct ModelFailure {
  std::string equation_label;
  std::vector<int> env;  // lexicographically least violating environment
  int lhs_value = 0;
  int rhs_value = 0;
};

struct ModelReport {
  bool pass = true;
  std::vector<ModelFailure> failures;  // one per failed equation, theory order
  std::int64_t instances_checked = 0;
};

// Exhaustively checks every equation over all carrier^var_count
// environments. The sweep is OpenMP-parallel; workers reduce by minimum
// environment index, so the reported witness is the lexicographically
// least violation regardless of scheduling. Throws CapExceeded when a
// single equation's environment space exceeds the cap, InputError for a
// missing table.
ModelReport check_model(const Algebra& alg, const TheoryPresentation& th,
                        const Caps& caps = global_caps());

namespace reference {

// Serial implementation kept as the reference for the parallel kernel;
// byte-identical reports by construction.
ModelReport check_model(const Algebra& alg, const TheoryPresentation& th,
                        const Caps& caps = global_caps());

}  // namespace reference

}  // namespace lawmeas

#endif
