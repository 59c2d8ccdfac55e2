#include "lawmeas/topology.hpp"

#include <algorithm>

namespace lawmeas {

bool Topology::is_open(const SubsetMask& u) const {
  if (!(u.carrier() == carrier)) {
    throw CarrierMismatch("Topology::is_open: subset over a different carrier");
  }
  for (int x = 0; x < carrier.size(); ++x) {
    if (u.test(x) && !min_nbhd[x].subset_of(u)) return false;
  }
  return true;
}

std::string TopologyCheck::describe() const {
  if (ok) return "topology axioms hold";
  switch (axiom) {
    case TopologyAxiom::ContainsEmpty:
      return "empty set is missing from the family";
    case TopologyAxiom::ContainsFull:
      return "full carrier is missing from the family";
    case TopologyAxiom::UnionClosed:
      return "union of " + offenders.at(0).to_string() + " and " +
             offenders.at(1).to_string() + " is missing";
    case TopologyAxiom::IntersectionClosed:
      return "intersection of " + offenders.at(0).to_string() + " and " +
             offenders.at(1).to_string() + " is missing";
  }
  return "";
}

TopologyCheck is_topology(const Carrier& carrier, const SetFamily& family) {
  SetFamily f = family;
  for (const auto& m : f) {
    if (!(m.carrier() == carrier)) {
      throw CarrierMismatch("is_topology: family member over a different carrier");
    }
  }
  canonicalize_family(f);

  if (!family_contains(f, SubsetMask::empty(carrier))) {
    return {false, TopologyAxiom::ContainsEmpty, {SubsetMask::empty(carrier)}};
  }
  if (!family_contains(f, SubsetMask::full(carrier))) {
    return {false, TopologyAxiom::ContainsFull, {SubsetMask::full(carrier)}};
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!family_contains(f, f[i] | f[j])) {
        return {false, TopologyAxiom::UnionClosed, {f[i], f[j]}};
      }
    }
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!family_contains(f, f[i] & f[j])) {
        return {false, TopologyAxiom::IntersectionClosed, {f[i], f[j]}};
      }
    }
  }
  return {true, TopologyAxiom::ContainsEmpty, {}};
}

namespace {

std::vector<SubsetMask> min_neighborhoods_from(const Carrier& carrier,
                                               const SetFamily& sets) {
  std::vector<SubsetMask> nbhd(carrier.size(), SubsetMask(carrier));
  for (int x = 0; x < carrier.size(); ++x) {
    SubsetMask n = SubsetMask::full(carrier);
    for (const auto& s : sets) {
      if (s.test(x)) n = n & s;
    }
    nbhd[x] = std::move(n);
  }
  return nbhd;
}

// All unions over subsets of `parts` (not necessarily disjoint), dedup'd.
SetFamily all_unions(const Carrier& carrier, std::vector<SubsetMask> parts,
                     const Caps& caps) {
  canonicalize_family(parts);
  const int m = static_cast<int>(parts.size());
  if (m > 62 || (std::int64_t{1} << m) > caps.family_max) {
    throw CapExceeded("topology with " + std::to_string(m) +
                      " minimal neighborhoods exceeds the family cap");
  }
  const std::uint64_t total = std::uint64_t{1} << m;
  SetFamily opens;
  opens.reserve(total);
  for (std::uint64_t pick = 0; pick < total; ++pick) {
    SubsetMask u(carrier);
    for (int i = 0; i < m; ++i) {
      if ((pick >> i) & 1u) u = u | parts[i];
    }
    opens.push_back(std::move(u));
  }
  canonicalize_family(opens);
  return opens;
}

}  // namespace

Topology generate_topology(const Carrier& carrier, const SetFamily& subbasis,
                           const Caps& caps) {
  for (const auto& s : subbasis) {
    if (!(s.carrier() == carrier)) {
      throw CarrierMismatch("generate_topology: subbasis set over a different carrier");
    }
  }
  std::vector<SubsetMask> nbhd = min_neighborhoods_from(carrier, subbasis);
  SetFamily opens = all_unions(carrier, nbhd, caps);
  return Topology{carrier, std::move(opens), std::move(nbhd)};
}

Topology topology_from_opens(const Carrier& carrier, SetFamily opens) {
  canonicalize_family(opens);
  std::vector<SubsetMask> nbhd = min_neighborhoods_from(carrier, opens);
  return Topology{carrier, std::move(opens), std::move(nbhd)};
}

Topology discrete_topology(const Carrier& c, const Caps& caps) {
  std::vector<SubsetMask> singletons;
  singletons.reserve(c.size());
  for (int i = 0; i < c.size(); ++i) singletons.push_back(SubsetMask::single(c, i));
  SetFamily opens = all_unions(c, singletons, caps);
  return Topology{c, std::move(opens), std::move(singletons)};
}

Topology indiscrete_topology(const Carrier& c) {
  SetFamily opens{SubsetMask::empty(c), SubsetMask::full(c)};
  canonicalize_family(opens);  // collapses the pair when c is empty
  std::vector<SubsetMask> nbhd(c.size(), SubsetMask::full(c));
  return Topology{c, std::move(opens), std::move(nbhd)};
}

int ProductSpace::point(std::span<const int> coords_in) const {
  int idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    idx = idx * factors[i].carrier.size() + coords_in[i];
  }
  return idx;
}

std::vector<int> ProductSpace::coords(int point) const {
  std::vector<int> out(factors.size(), 0);
  for (std::size_t i = factors.size(); i-- > 0;) {
    const int k = factors[i].carrier.size();
    out[i] = point % k;
    point /= k;
  }
  return out;
}

FiniteFunction ProductSpace::projection(int i) const {
  FiniteFunction f{carrier, factors.at(i).carrier, {}};
  f.table.reserve(carrier.size());
  for (int p = 0; p < carrier.size(); ++p) {
    f.table.push_back(static_cast<std::int32_t>(coords(p)[i]));
  }
  return f;
}

ProductSpace product_of(std::vector<Topology> factors, const Caps& caps) {
  std::int64_t points = 1;
  for (const auto& t : factors) {
    points *= t.carrier.size();
    if (points > caps.product_max_points) {
      throw CapExceeded("product carrier exceeds " +
                        std::to_string(caps.product_max_points) + " points");
    }
  }

  // Tuple labels "(a,b)"; row-major with coordinate 0 most significant.
  const int n = static_cast<int>(factors.size());
  const int npoints = static_cast<int>(points);
  std::vector<std::vector<int>> coord_table(npoints);
  std::vector<std::string> labels(npoints);
  {
    std::vector<int> c(n, 0);
    for (int p = 0; p < npoints; ++p) {
      coord_table[p] = c;
      std::string l = "(";
      for (int i = 0; i < n; ++i) {
        if (i) l += ",";
        l += factors[i].carrier.label(c[i]);
      }
      l += ")";
      labels[p] = std::move(l);
      for (int i = n - 1; i >= 0; --i) {
        if (++c[i] < factors[i].carrier.size()) break;
        c[i] = 0;
      }
    }
  }
  Carrier carrier{std::move(labels)};

  auto box_of = [&](auto&& pick_open) {
    // pick_open(i) -> const SubsetMask& over factor i
    SubsetMask box = SubsetMask::full(carrier);
    for (int p = 0; p < npoints; ++p) {
      for (int i = 0; i < n; ++i) {
        if (!pick_open(i).test(coord_table[p][i])) {
          box.reset(p);
          break;
        }
      }
    }
    return box;
  };

  // Minimal neighborhood of a tuple point is the box of factor minimal
  // neighborhoods.
  std::vector<SubsetMask> nbhd;
  nbhd.reserve(npoints);
  for (int p = 0; p < npoints; ++p) {
    nbhd.push_back(box_of([&](int i) -> const SubsetMask& {
      return factors[i].min_nbhd[coord_table[p][i]];
    }));
  }

  SetFamily opens = all_unions(carrier, nbhd, caps);

  // Basis: every product of factor opens, one per coordinate.
  std::int64_t box_count = 1;
  for (const auto& t : factors) {
    box_count *= static_cast<std::int64_t>(t.opens.size());
    if (box_count > caps.family_max) {
      throw CapExceeded("product basis exceeds the family cap");
    }
  }
  SetFamily basis;
  basis.reserve(box_count);
  std::vector<std::size_t> choice(n, 0);
  for (std::int64_t b = 0; b < box_count; ++b) {
    basis.push_back(box_of([&](int i) -> const SubsetMask& {
      return factors[i].opens[choice[i]];
    }));
    for (int i = n - 1; i >= 0; --i) {
      if (++choice[i] < factors[i].opens.size()) break;
      choice[i] = 0;
    }
  }
  canonicalize_family(basis);

  ProductSpace space;
  space.factors = std::move(factors);
  space.carrier = carrier;
  space.topology = Topology{carrier, std::move(opens), std::move(nbhd)};
  space.basis = std::move(basis);
  return space;
}

ProductSpace product_topology(const Topology& factor, int arity, const Caps& caps) {
  if (arity < 0) throw InputError("product_topology: negative arity");
  return product_of(std::vector<Topology>(arity, factor), caps);
}

SigmaAlgebra borel(const Topology& t, const Caps& caps) {
  return generate_sigma(t.carrier, t.opens, caps);
}

}  // namespace lawmeas
