#ifndef LAWMEAS_VERIFY_ORACLES_HPP
#define LAWMEAS_VERIFY_ORACLES_HPP

#include <random>
#include <string>
#include <vector>

#include "lawmeas/cocountable.hpp"
#include "lawmeas/setcore.hpp"
#include "lawmeas/theory.hpp"

namespace lawmeas::verify {

// Independent oracles the fast paths are checked against. These stay
// deliberately naive; none of them shares code with the implementation
// they certify.

// Saturates {empty, full} + generators under complement and pairwise union
// until a fixpoint; returns the canonical sorted family.
SetFamily naive_sigma_closure(const Carrier& c, const SetFamily& generators);

// Saturates subbasis + {empty, full} under pairwise union and pairwise
// intersection until a fixpoint.
SetFamily naive_topology_closure(const Carrier& c, const SetFamily& subbasis);

// Textbook group axioms checked by direct table loops, independent of the
// term evaluator. Expects ops named e/inv/mul.
bool direct_group_axioms(const Algebra& alg, std::string* why = nullptr);

// Membership vector of a CocoSet over alphabet + one extra slot standing
// for every unlisted element (sound because supports stay inside the
// alphabet, so all unlisted elements are indistinguishable).
std::vector<bool> coco_membership(const CocoSet& s,
                                  const std::vector<std::string>& alphabet);

// Deterministic random instances.
SubsetMask random_mask(std::mt19937_64& rng, const Carrier& c);
SetFamily random_family(std::mt19937_64& rng, const Carrier& c, int max_sets);

}  // namespace lawmeas::verify

#endif
