#ifndef LAWMEAS_TOPOLOGY_HPP
#define LAWMEAS_TOPOLOGY_HPP

#include <string>
#include <vector>

#include "lawmeas/setcore.hpp"
#include "lawmeas/sigma.hpp"

namespace lawmeas {

// A finite topological space, stored extensionally: the open family in
// canonical sorted order. On a finite carrier, closure under binary union
// and binary intersection suffices for arbitrary unions and finite
// intersections.
//
// The minimal open neighborhood of each point (intersection of all opens
// containing it) is kept as a derived field; a set U is open iff it
// contains the minimal neighborhood of each of its points, which gives an
// O(|U|) openness test without searching the family.
struct Topology {
  Carrier carrier;
  SetFamily opens;                 // canonical sorted
  std::vector<SubsetMask> min_nbhd;  // derived, one per point

  bool is_open(const SubsetMask& u) const;

  bool operator==(const Topology& o) const {
    return carrier == o.carrier && opens == o.opens;
  }
};

enum class TopologyAxiom {
  ContainsEmpty,
  ContainsFull,
  UnionClosed,
  IntersectionClosed,
};

struct TopologyCheck {
  bool ok = false;
  TopologyAxiom axiom = TopologyAxiom::ContainsEmpty;
  std::vector<SubsetMask> offenders;
  std::string describe() const;
};

// Validates the axioms: empty and full present, binary unions and binary
// intersections present. Witness pairs are reported in canonical order.
TopologyCheck is_topology(const Carrier& carrier, const SetFamily& family);

// Smallest topology containing the subbasis: minimal neighborhoods are
// intersections of subbasis sets, opens are all unions of those.
Topology generate_topology(const Carrier& carrier, const SetFamily& subbasis,
                           const Caps& caps = global_caps());

// Builds a Topology from an already-validated open family.
Topology topology_from_opens(const Carrier& carrier, SetFamily opens);

Topology discrete_topology(const Carrier& c, const Caps& caps = global_caps());
Topology indiscrete_topology(const Carrier& c);

// A finite product of finite spaces. Points are tuples in row-major order
// (coordinate 0 most significant); labels are "(a,b)" joined from factor
// labels. The basis is the family of boxes (one factor-open per
// coordinate); opens are all unions of boxes.
struct ProductSpace {
  std::vector<Topology> factors;
  Carrier carrier;
  Topology topology;
  SetFamily basis;  // canonical sorted, deduplicated

  int point(std::span<const int> coords) const;
  std::vector<int> coords(int point) const;
  // Coordinate projection as a finite function onto factor i.
  FiniteFunction projection(int i) const;
};

// The finite power factor^arity with the product topology; arity 0 gives
// the one-point space.
ProductSpace product_topology(const Topology& factor, int arity,
                              const Caps& caps = global_caps());

// Heterogeneous finite product (used by curated test spaces).
ProductSpace product_of(std::vector<Topology> factors,
                        const Caps& caps = global_caps());

// The Borel sigma-algebra: generate_sigma over the open family.
SigmaAlgebra borel(const Topology& t, const Caps& caps = global_caps());

}  // namespace lawmeas

#endif
