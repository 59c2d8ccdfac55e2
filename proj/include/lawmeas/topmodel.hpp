#ifndef LAWMEAS_TOPMODEL_HPP
#define LAWMEAS_TOPMODEL_HPP

#include <string>
#include <vector>

#include "lawmeas/theory.hpp"
#include "lawmeas/topology.hpp"

namespace lawmeas {

// A finite algebra together with a topology on its carrier under which
// every operation is continuous (checked by check_topological_model, not
// by construction).
struct TopologicalAlgebra {
  Algebra algebra;
  Topology topology;
};

struct OpContinuityFailure {
  std::string op;
  SubsetMask witness_open;  // open in the target whose preimage fails
  SubsetMask preimage;      // over the product carrier, not open there
};

struct TopModelReport {
  bool pass = false;
  bool equations_pass = false;
  bool continuity_pass = false;
  ModelReport equations;
  std::vector<OpContinuityFailure> continuity_failures;
};

// A topological model must satisfy the equations and have every operation
// continuous from the product topology on its domain. Arity-0 operations
// are maps from the one-point space and are continuous automatically
// (checked all the same, through the same product machinery with arity 0).
TopModelReport check_topological_model(const Algebra& alg, const Topology& top,
                                       const TheoryPresentation& th,
                                       const Caps& caps = global_caps());

// Views one operation table as a finite function from the product carrier.
FiniteFunction op_as_function(const Algebra& alg, const OpTable& table,
                              const ProductSpace& domain);

}  // namespace lawmeas

#endif
