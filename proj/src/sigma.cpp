#include "lawmeas/sigma.hpp"

#include <algorithm>

#include "lawmeas/topology.hpp"

namespace lawmeas {

bool SigmaAlgebra::contains(const SubsetMask& m) const {
  if (!(m.carrier() == carrier)) {
    throw CarrierMismatch("SigmaAlgebra::contains: subset over a different carrier");
  }
  // m is a member iff it is a union of atoms: no block may be cut.
  for (const auto& block : atoms.blocks) {
    const SubsetMask common = block & m;
    if (!common.is_empty() && !(common == block)) return false;
  }
  return true;
}

std::string SigmaCheck::describe() const {
  if (ok) return "sigma-algebra axioms hold";
  switch (axiom) {
    case SigmaAxiom::ContainsFull:
      return "full carrier is missing from the family";
    case SigmaAxiom::ComplementClosed:
      return "complement of " + offenders.at(0).to_string() + " is missing";
    case SigmaAxiom::UnionClosed:
      return "union of " + offenders.at(0).to_string() + " and " +
             offenders.at(1).to_string() + " is missing";
  }
  return "";
}

SigmaCheck is_sigma_algebra(const Carrier& carrier, const SetFamily& family) {
  SetFamily f = family;
  for (const auto& m : f) {
    if (!(m.carrier() == carrier)) {
      throw CarrierMismatch("is_sigma_algebra: family member over a different carrier");
    }
  }
  canonicalize_family(f);

  const SubsetMask full = SubsetMask::full(carrier);
  if (!family_contains(f, full)) {
    return {false, SigmaAxiom::ContainsFull, {full}};
  }
  for (const auto& a : f) {
    if (!family_contains(f, complement(a))) {
      return {false, SigmaAxiom::ComplementClosed, {a}};
    }
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!family_contains(f, f[i] | f[j])) {
        return {false, SigmaAxiom::UnionClosed, {f[i], f[j]}};
      }
    }
  }
  return {true, SigmaAxiom::ContainsFull, {}};
}

namespace {

// All unions of blocks, one per block subset; blocks are disjoint and
// nonempty so distinct subsets give distinct unions.
SetFamily unions_of_blocks(const Carrier& carrier,
                           const std::vector<SubsetMask>& blocks,
                           const Caps& caps) {
  const int b = static_cast<int>(blocks.size());
  if (b > 62 || (std::int64_t{1} << b) > caps.family_max) {
    throw CapExceeded("sigma-algebra on " + std::to_string(b) +
                      " atoms exceeds the family cap");
  }
  const std::uint64_t total = std::uint64_t{1} << b;
  SetFamily members;
  members.reserve(total);
  for (std::uint64_t pick = 0; pick < total; ++pick) {
    SubsetMask u(carrier);
    for (int i = 0; i < b; ++i) {
      if ((pick >> i) & 1u) u = u | blocks[i];
    }
    members.push_back(std::move(u));
  }
  canonicalize_family(members);
  return members;
}

}  // namespace

SigmaAlgebra generate_sigma(const Carrier& carrier, const SetFamily& generators,
                            const Caps& caps) {
  Partition atoms = Partition::one_block(carrier);
  for (const auto& g : generators) {
    if (!(g.carrier() == carrier)) {
      throw CarrierMismatch("generate_sigma: generator over a different carrier");
    }
    refine_partition(atoms, g);
  }
  SetFamily members = unions_of_blocks(carrier, atoms.blocks, caps);
  return SigmaAlgebra{carrier, std::move(members), std::move(atoms)};
}

SigmaAlgebra sigma_from_partition(const Partition& p, const Caps& caps) {
  SetFamily members = unions_of_blocks(p.carrier, p.blocks, caps);
  return SigmaAlgebra{p.carrier, std::move(members), p};
}

std::vector<SigmaAlgebra> all_sigma_algebras(const Carrier& carrier,
                                             const Caps& caps) {
  std::vector<SigmaAlgebra> out;
  for (const auto& p : all_partitions(carrier, caps)) {
    out.push_back(sigma_from_partition(p, caps));
  }
  return out;
}

bool sigma_satisfies_topology(const SigmaAlgebra& s) {
  return is_topology(s.carrier, s.members).ok;
}

SigmaAlgebra intersect_sigma(const SigmaAlgebra& a, const SigmaAlgebra& b) {
  if (!(a.carrier == b.carrier)) {
    throw CarrierMismatch("intersect_sigma: different carriers");
  }
  SetFamily members;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(members));
  Partition atoms = atoms_of_family(a.carrier, members);
  return SigmaAlgebra{a.carrier, std::move(members), std::move(atoms)};
}

Partition atoms_of_family(const Carrier& carrier, const SetFamily& members) {
  Partition atoms = Partition::one_block(carrier);
  for (const auto& m : members) refine_partition(atoms, m);
  return atoms;
}

}  // namespace lawmeas
