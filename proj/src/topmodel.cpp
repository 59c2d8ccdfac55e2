#include "lawmeas/topmodel.hpp"

#include "lawmeas/measurable.hpp"

namespace lawmeas {

FiniteFunction op_as_function(const Algebra& alg, const OpTable& table,
                              const ProductSpace& domain) {
  // Row-major table order equals row-major product point order, so the
  // table is already the function's value table.
  FiniteFunction f{domain.carrier, alg.carrier, table.values};
  validate_function(f);
  return f;
}

TopModelReport check_topological_model(const Algebra& alg, const Topology& top,
                                       const TheoryPresentation& th,
                                       const Caps& caps) {
  if (!(alg.carrier == top.carrier)) {
    throw CarrierMismatch("check_topological_model: algebra and topology carriers differ");
  }
  const BoundAlgebra bound = bind_algebra(alg, th);

  TopModelReport report;
  report.equations = check_model(alg, th, caps);
  report.equations_pass = report.equations.pass;

  report.continuity_pass = true;
  for (std::size_t i = 0; i < th.ops.size(); ++i) {
    const OpTable& table = *bound.tables[i];
    const ProductSpace domain = product_topology(top, th.ops[i].arity, caps);
    const FiniteFunction f = op_as_function(alg, table, domain);
    const ContinuityVerdict verdict = is_continuous(f, domain.topology, top);
    if (!verdict.continuous) {
      report.continuity_pass = false;
      report.continuity_failures.push_back(OpContinuityFailure{
          th.ops[i].name, *verdict.witness_open, *verdict.witness_preimage});
    }
  }

  report.pass = report.equations_pass && report.continuity_pass;
  return report;
}

}  // namespace lawmeas
