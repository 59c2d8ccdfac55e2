#ifndef LAWMEAS_COCOUNTABLE_HPP
#define LAWMEAS_COCOUNTABLE_HPP

#include <string>
#include <vector>

namespace lawmeas {

// A countable-or-cocountable subset of an abstract uncountable ground set,
// represented symbolically. Small(support) is the set of exactly the listed
// elements; CoSmall(support) is everything except the listed elements.
// "Countable" is modeled by "finitely supported": that fragment is decidable
// and carries the whole non-topology argument.
struct CocoSet {
  enum class Tag { Small, CoSmall };

  Tag tag = Tag::Small;
  std::vector<std::string> support;  // sorted, duplicate-free

  static CocoSet small(std::vector<std::string> elems);
  static CocoSet cosmall(std::vector<std::string> exceptions);

  bool operator==(const CocoSet& o) const = default;
  std::string to_string() const;
};

// Swaps the tag, preserving support.
CocoSet coco_complement(const CocoSet& s);

// Finite union in the tag algebra: a union of Smalls is Small (supports
// merge); once any CoSmall participates the union is CoSmall, and its
// exception list is the intersection of the CoSmall exception lists minus
// every Small support. The empty union is Small([]) (the empty set).
CocoSet coco_union(const std::vector<CocoSet>& family);

// Dual: intersection via De Morgan; exposed because tests state duality
// directly.
CocoSet coco_intersection(const std::vector<CocoSet>& family);

bool coco_member(const CocoSet& s, const std::string& x);

// The checked form of the classical argument that the countable/cocountable
// family on an uncountable ground set is not a topology:
//   (a) every singleton is in the family (Small of one element);
//   (b) no CocoSet represents a set H with H and its complement both
//       uncountable: Small forces H countable, CoSmall forces the
//       complement countable;
//   (c) hence the family misses the union of singletons over such an H
//       and cannot be closed under arbitrary unions.
// Fact (c) is a consequence of (a) and (b), reported as such; an actual
// uncountable union is not a computable operation here.
struct CocoWitnessReport {
  bool fact_a = false;
  bool fact_b = false;
  std::string conclusion;  // "not a topology"
  std::string detail_a;
  std::string detail_b;
  std::string detail_c;
  // The closure laws are checked on the finitely-supported fragment only;
  // this note states that scope restriction.
  std::string fragment_note;
};

CocoWitnessReport coco_non_topology_witness();

}  // namespace lawmeas

#endif
