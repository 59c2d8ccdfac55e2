#ifndef LAWMEAS_VERIFY_MODELS_HPP
#define LAWMEAS_VERIFY_MODELS_HPP

#include <vector>

#include "lawmeas/theory.hpp"
#include "lawmeas/topology.hpp"

namespace lawmeas::verify {

// Curated finite algebras and spaces used by the verification suites and
// the benchmark. Carriers of the modular algebras are labeled "0".."k-1".

// Z_k as a group: e = 0, inv = negation, mul = addition mod k.
Algebra cyclic_group(int k);

// The Klein four-group on {e,a,b,c}: every element is its own inverse.
Algebra klein_four();

// Z_k as a ring: zero, one, neg, add, mul mod k.
Algebra cyclic_ring(int k);

// Z_4 with subtraction in place of the group operation (e = 0, inv = id).
// Not a group: subtraction is not associative and 0 is only a right unit.
Algebra z4_subtraction();

// The pointwise direct power base^n on tuple labels "(a,b)".
Algebra power_algebra(const Algebra& base, int n);

// The Sierpinski space on {0,1}: opens are {}, {1}, {0,1}.
Topology sierpinski();

// Deterministic list of spaces with at most max_points points (1..3):
// one-point space, then indiscrete / Sierpinski-like / discrete variants.
std::vector<Topology> curated_spaces(int max_points);

}  // namespace lawmeas::verify

#endif
