#include "lawmeas/verify/oracles.hpp"

#include <algorithm>

namespace lawmeas::verify {

namespace {

// Adds m unless present; returns whether the family grew.
bool add(SetFamily& family, const SubsetMask& m) {
  const auto it = std::lower_bound(family.begin(), family.end(), m);
  if (it != family.end() && *it == m) return false;
  family.insert(it, m);
  return true;
}

}  // namespace

SetFamily naive_sigma_closure(const Carrier& c, const SetFamily& generators) {
  SetFamily family{SubsetMask::empty(c), SubsetMask::full(c)};
  canonicalize_family(family);
  for (const auto& g : generators) add(family, g);

  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (add(family, complement(family[i]))) grew = true;
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (add(family, family[i] | family[j])) grew = true;
      }
    }
  }
  return family;
}

SetFamily naive_topology_closure(const Carrier& c, const SetFamily& subbasis) {
  SetFamily family{SubsetMask::empty(c), SubsetMask::full(c)};
  canonicalize_family(family);
  for (const auto& s : subbasis) add(family, s);

  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (add(family, family[i] | family[j])) grew = true;
        if (add(family, family[i] & family[j])) grew = true;
      }
    }
  }
  return family;
}

bool direct_group_axioms(const Algebra& alg, std::string* why) {
  const int k = alg.carrier.size();
  const OpTable* e = alg.find("e");
  const OpTable* inv = alg.find("inv");
  const OpTable* mul = alg.find("mul");
  if (e == nullptr || inv == nullptr || mul == nullptr) {
    if (why) *why = "missing e/inv/mul";
    return false;
  }
  auto m = [&](int a, int b) { return mul->values[a * k + b]; };
  const int unit = e->values[0];

  for (int a = 0; a < k; ++a) {
    if (m(unit, a) != a || m(a, unit) != a) {
      if (why) *why = "unit fails at " + alg.carrier.label(a);
      return false;
    }
    if (m(inv->values[a], a) != unit || m(a, inv->values[a]) != unit) {
      if (why) *why = "inverse fails at " + alg.carrier.label(a);
      return false;
    }
    for (int b = 0; b < k; ++b) {
      for (int c = 0; c < k; ++c) {
        if (m(m(a, b), c) != m(a, m(b, c))) {
          if (why) {
            *why = "associativity fails at (" + alg.carrier.label(a) + "," +
                   alg.carrier.label(b) + "," + alg.carrier.label(c) + ")";
          }
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<bool> coco_membership(const CocoSet& s,
                                  const std::vector<std::string>& alphabet) {
  std::vector<bool> v;
  v.reserve(alphabet.size() + 1);
  for (const auto& x : alphabet) v.push_back(coco_member(s, x));
  // The extra slot: any element outside the alphabet. Small sets never
  // contain it, CoSmall sets always do.
  v.push_back(s.tag == CocoSet::Tag::CoSmall);
  return v;
}

SubsetMask random_mask(std::mt19937_64& rng, const Carrier& c) {
  SubsetMask m(c);
  for (int i = 0; i < c.size(); ++i) {
    if (rng() & 1u) m.set(i);
  }
  return m;
}

SetFamily random_family(std::mt19937_64& rng, const Carrier& c, int max_sets) {
  const int count = static_cast<int>(rng() % (max_sets + 1));
  SetFamily f;
  f.reserve(count);
  for (int i = 0; i < count; ++i) f.push_back(random_mask(rng, c));
  return f;
}

}  // namespace lawmeas::verify
