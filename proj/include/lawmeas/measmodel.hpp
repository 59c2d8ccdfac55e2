#ifndef LAWMEAS_MEASMODEL_HPP
#define LAWMEAS_MEASMODEL_HPP

#include <string>
#include <vector>

#include "lawmeas/measurable.hpp"
#include "lawmeas/theory.hpp"
#include "lawmeas/topmodel.hpp"

namespace lawmeas {

// Every measurable function from X into the target, enumerated completely:
// the list is exactly the measurable subset of all |Y|^|X| candidates, in
// lexicographic table order. The function carrier labels each function by
// its value tuple, so the lifted algebra is an ordinary Algebra value.
struct MeasFunctionSpace {
  MeasurableSpace source;
  TopologicalAlgebra target;
  SigmaAlgebra target_borel;  // borel(target.topology)
  std::vector<FiniteFunction> functions;
  Carrier function_carrier;

  // Position of a value table in `functions`, or -1 when not a member
  // (binary search; the list is sorted by table).
  int index_of(const std::vector<std::int32_t>& table) const;
};

// All measurable functions X -> target_carrier, in lexicographic table
// order. This is the data-parallel enumeration kernel behind
// build_meas_space and product preservation.
std::vector<FiniteFunction> measurable_functions(const MeasurableSpace& X,
                                                 const Carrier& target_carrier,
                                                 const SigmaAlgebra& target_borel,
                                                 const Caps& caps = global_caps());

namespace reference {

// Serial implementation kept as the reference for the parallel kernel.
std::vector<FiniteFunction> measurable_functions(const MeasurableSpace& X,
                                                 const Carrier& target_carrier,
                                                 const SigmaAlgebra& target_borel,
                                                 const Caps& caps = global_caps());

}  // namespace reference

// Enumerates Meas(X, Y). Throws CapExceeded when |Y|^|X| exceeds the cap
// and NoConstantsPossible when Y is empty, X is not, and Y's algebra
// declares constants (no function space could interpret them).
MeasFunctionSpace build_meas_space(const MeasurableSpace& X,
                                   const TopologicalAlgebra& Y,
                                   const Caps& caps = global_caps());

// Pointwise lift of one target operation onto the function space:
// op(f_1,...,f_n)(x) = op(f_1(x),...,f_n(x)). Every image must land back
// in the space -- that is the checked content of the pairing/composition
// closure argument -- otherwise ClosureViolation is thrown.
OpTable lift_operation(const MeasFunctionSpace& ms, const OpSymbol& op,
                       const Caps& caps = global_caps());

// The lifted algebra on ms.function_carrier, one table per theory op.
Algebra lifted_algebra(const MeasFunctionSpace& ms, const TheoryPresentation& th,
                       const Caps& caps = global_caps());

struct ProductPreservationReport {
  int arity = 0;
  bool pass = false;
  std::int64_t meas_n_count = 0;  // |Meas(X, Y^n)|
  std::int64_t meas_1_count = 0;  // |Meas(X, Y)|
  std::string failure;            // empty when pass
};

// Checks that Meas(X, Y^n) is Meas(X, Y)^n the way the theorem's proof
// says: post-composition with the projections is a bijection onto tuples,
// its inverse is the pairing map, and projection-after-pairing returns
// each component exactly.
ProductPreservationReport check_product_preservation(const MeasurableSpace& X,
                                                     const TopologicalAlgebra& Y,
                                                     int n,
                                                     const Caps& caps = global_caps());

struct TheoremReport {
  bool premise_pass = false;  // Y is a topological model of the theory
  bool closure_pass = false;
  bool equations_pass = false;
  bool product_preservation_pass = false;
  bool pass = false;  // conjunction of the four above
  std::int64_t function_count = 0;
  ModelReport equations;
  std::vector<ProductPreservationReport> product_preservation;
  std::vector<std::string> failures;  // deterministic human-readable lines
};

// The main verification: builds Meas(X, Y), lifts every operation of the
// theory (closure), checks all equations on the lifted algebra, and checks
// product preservation for the given arities.
TheoremReport verify_theorem(const MeasurableSpace& X, const TopologicalAlgebra& Y,
                             const TheoryPresentation& th,
                             const std::vector<int>& pp_arities = {0, 1, 2},
                             const Caps& caps = global_caps());

}  // namespace lawmeas

#endif
