#ifndef LAWMEAS_SIGMA_HPP
#define LAWMEAS_SIGMA_HPP

#include <optional>
#include <string>
#include <vector>

#include "lawmeas/setcore.hpp"

namespace lawmeas {

// A sigma-algebra on a finite carrier, stored extensionally: the full
// member family in canonical sorted order. On a finite carrier closure
// under countable union is equivalent to closure under binary union, so
// the three axioms checked here are: full carrier present, complements
// present, binary unions present (the empty set is then forced).
//
// Every finite sigma-algebra is the set of unions of blocks of a unique
// partition; that partition (the atoms) is kept as a derived field and
// makes membership queries linear in the carrier size.
struct SigmaAlgebra {
  Carrier carrier;
  SetFamily members;  // canonical sorted
  Partition atoms;    // derived: minimal nonempty members

  bool contains(const SubsetMask& m) const;

  bool operator==(const SigmaAlgebra& o) const {
    return carrier == o.carrier && members == o.members;
  }
};

struct MeasurableSpace {
  Carrier carrier;
  SigmaAlgebra sigma;
};

enum class SigmaAxiom { ContainsFull, ComplementClosed, UnionClosed };

// Verdict of is_sigma_algebra. On failure, `axiom` names the first violated
// axiom (checking order: full carrier, complements, binary unions, each in
// canonical family order) and `offenders` holds the witnessing set(s).
struct SigmaCheck {
  bool ok = false;
  SigmaAxiom axiom = SigmaAxiom::ContainsFull;
  std::vector<SubsetMask> offenders;
  std::string describe() const;
};

SigmaCheck is_sigma_algebra(const Carrier& carrier, const SetFamily& family);

// The smallest sigma-algebra containing all generators. Fast path: refine
// the one-block partition by each generator, then emit all unions of
// blocks. (The naive saturate-under-complement-and-union oracle lives in
// the verification tree, not here.)
SigmaAlgebra generate_sigma(const Carrier& carrier, const SetFamily& generators,
                            const Caps& caps = global_caps());

// The sigma-algebra whose atoms are exactly the blocks of p.
SigmaAlgebra sigma_from_partition(const Partition& p,
                                  const Caps& caps = global_caps());

// Every sigma-algebra on the carrier, one per partition, in all_partitions
// order; count is Bell(carrier.size()).
std::vector<SigmaAlgebra> all_sigma_algebras(const Carrier& carrier,
                                             const Caps& caps = global_caps());

// Checks the topology axioms against s.members. True for every finite
// sigma-algebra (the finite case of the countable-space proposition).
bool sigma_satisfies_topology(const SigmaAlgebra& s);

// Intersection of two sigma-algebras over the same carrier (member-wise);
// the result is again a sigma-algebra.
SigmaAlgebra intersect_sigma(const SigmaAlgebra& a, const SigmaAlgebra& b);

// Validates family/atoms coherence and re-derives atoms from members.
Partition atoms_of_family(const Carrier& carrier, const SetFamily& members);

}  // namespace lawmeas

#endif
