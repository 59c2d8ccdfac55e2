#ifndef LAWMEAS_MEASURABLE_HPP
#define LAWMEAS_MEASURABLE_HPP

#include <optional>
#include <vector>

#include "lawmeas/setcore.hpp"
#include "lawmeas/sigma.hpp"
#include "lawmeas/topology.hpp"

namespace lawmeas {

// Outcome of a measurability check. When the function is not measurable,
// `witness` is the smallest failing target set in canonical (numeric)
// order and `witness_preimage` its preimage, which is not a member of the
// source sigma-algebra.
struct MeasurabilityVerdict {
  bool measurable = false;
  std::optional<SubsetMask> witness;
  std::optional<SubsetMask> witness_preimage;
};

// Default check: preimages of the atoms of target_borel only. The atoms
// generate the sigma-algebra, and the preimage family of a sigma-algebra
// is a sigma-algebra, so this agrees with the full sweep (is_measurable_full
// below exists to prove exactly that). The reported witness also agrees:
// every failing member contains a failing atom, and a subset never has a
// larger numeric value than its superset, so the smallest failing member
// is the smallest failing atom.
MeasurabilityVerdict is_measurable(const FiniteFunction& f,
                                   const MeasurableSpace& source,
                                   const SigmaAlgebra& target_borel);

// Full sweep over every member of target_borel.
MeasurabilityVerdict is_measurable_full(const FiniteFunction& f,
                                        const MeasurableSpace& source,
                                        const SigmaAlgebra& target_borel);

// Checks preimages of an arbitrary generating family; agrees with the full
// check against generate_sigma(generators). Witness is the smallest failing
// generator.
MeasurabilityVerdict is_measurable_generators(const FiniteFunction& f,
                                              const MeasurableSpace& source,
                                              const SetFamily& generators);

struct ContinuityVerdict {
  bool continuous = false;
  std::optional<SubsetMask> witness_open;      // smallest failing target open
  std::optional<SubsetMask> witness_preimage;  // its preimage, not open in source
};

ContinuityVerdict is_continuous(const FiniteFunction& f, const Topology& source,
                                const Topology& target);

// Requires f continuous (throws PreconditionError otherwise); returns
// whether f is measurable from (source, borel(source)) to borel(target).
// A false return would falsify the continuity lemma, i.e. flag a kernel bug.
bool continuous_implies_measurable_check(const FiniteFunction& f,
                                         const Topology& source,
                                         const Topology& target,
                                         const Caps& caps = global_caps());

// Verdict for g after f against (source, target_borel_z). Whenever f is
// measurable into borel_y and g from borel_y into borel_z, the composite
// is measurable (the composition proposition); this function just computes
// the verdict for the composite.
MeasurabilityVerdict compose_measurable(const FiniteFunction& f,
                                        const FiniteFunction& g,
                                        const MeasurableSpace& source,
                                        const SigmaAlgebra& target_borel_z);

// The tuple map x -> (fs[0](x), ..., fs[n-1](x)) into the product carrier.
// All fs must share a domain and fs[i] must land in product factor i; the
// number of functions must equal the product arity. When every component
// is measurable, the result is measurable for borel(product.topology); the
// coordinate projections recover the components exactly.
FiniteFunction pairing(const std::vector<FiniteFunction>& fs,
                       const ProductSpace& product);

}  // namespace lawmeas

#endif
