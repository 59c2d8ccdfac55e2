#include "lawmeas/measurable.hpp"

#include <algorithm>

namespace lawmeas {

namespace {

void check_carriers(const FiniteFunction& f, const MeasurableSpace& source,
                    const Carrier& target_carrier) {
  if (!(f.domain == source.carrier)) {
    throw CarrierMismatch("measurability check: function domain differs from source");
  }
  if (!(f.codomain == target_carrier)) {
    throw CarrierMismatch("measurability check: function codomain differs from target");
  }
}

// Scans the family in the given order and reports the failing set with the
// smallest numeric value.
MeasurabilityVerdict scan_preimages(const FiniteFunction& f,
                                    const MeasurableSpace& source,
                                    const SetFamily& sets) {
  MeasurabilityVerdict verdict;
  verdict.measurable = true;
  const SubsetMask* best = nullptr;
  for (const auto& b : sets) {
    if (!source.sigma.contains(preimage(f, b))) {
      if (best == nullptr || b < *best) best = &b;
    }
  }
  if (best != nullptr) {
    verdict.measurable = false;
    verdict.witness = *best;
    verdict.witness_preimage = preimage(f, *best);
  }
  return verdict;
}

}  // namespace

MeasurabilityVerdict is_measurable(const FiniteFunction& f,
                                   const MeasurableSpace& source,
                                   const SigmaAlgebra& target_borel) {
  check_carriers(f, source, target_borel.carrier);
  return scan_preimages(f, source, target_borel.atoms.blocks);
}

MeasurabilityVerdict is_measurable_full(const FiniteFunction& f,
                                        const MeasurableSpace& source,
                                        const SigmaAlgebra& target_borel) {
  check_carriers(f, source, target_borel.carrier);
  return scan_preimages(f, source, target_borel.members);
}

MeasurabilityVerdict is_measurable_generators(const FiniteFunction& f,
                                              const MeasurableSpace& source,
                                              const SetFamily& generators) {
  if (!(f.domain == source.carrier)) {
    throw CarrierMismatch("measurability check: function domain differs from source");
  }
  for (const auto& g : generators) {
    if (!(g.carrier() == f.codomain)) {
      throw CarrierMismatch("measurability check: generator over a different carrier");
    }
  }
  return scan_preimages(f, source, generators);
}

ContinuityVerdict is_continuous(const FiniteFunction& f, const Topology& source,
                                const Topology& target) {
  if (!(f.domain == source.carrier)) {
    throw CarrierMismatch("continuity check: function domain differs from source");
  }
  if (!(f.codomain == target.carrier)) {
    throw CarrierMismatch("continuity check: function codomain differs from target");
  }
  ContinuityVerdict verdict;
  verdict.continuous = true;
  for (const auto& open : target.opens) {  // canonical order: first hit is smallest
    SubsetMask pre = preimage(f, open);
    if (!source.is_open(pre)) {
      verdict.continuous = false;
      verdict.witness_open = open;
      verdict.witness_preimage = std::move(pre);
      break;
    }
  }
  return verdict;
}

bool continuous_implies_measurable_check(const FiniteFunction& f,
                                         const Topology& source,
                                         const Topology& target,
                                         const Caps& caps) {
  if (!is_continuous(f, source, target).continuous) {
    throw PreconditionError(
        "continuous_implies_measurable_check: function is not continuous");
  }
  const MeasurableSpace src{source.carrier, borel(source, caps)};
  return is_measurable(f, src, borel(target, caps)).measurable;
}

MeasurabilityVerdict compose_measurable(const FiniteFunction& f,
                                        const FiniteFunction& g,
                                        const MeasurableSpace& source,
                                        const SigmaAlgebra& target_borel_z) {
  if (!(f.codomain == g.domain)) {
    throw CarrierMismatch("compose_measurable: f codomain differs from g domain");
  }
  return is_measurable(compose(g, f), source, target_borel_z);
}

FiniteFunction pairing(const std::vector<FiniteFunction>& fs,
                       const ProductSpace& product) {
  const std::size_t n = product.factors.size();
  if (fs.size() != n) {
    throw InputError("pairing: arity mismatch: " + std::to_string(fs.size()) +
                     " functions into a product of arity " + std::to_string(n));
  }
  if (n == 0) {
    // The empty pairing has no components to infer a domain from; callers
    // build the map to the one-point space directly.
    throw InputError("pairing: empty tuple has no domain; use the terminal map");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(fs[i].codomain == product.factors[i].carrier)) {
      throw CarrierMismatch("pairing: component codomain differs from product factor");
    }
    if (!(fs[i].domain == fs[0].domain)) {
      throw CarrierMismatch("pairing: components have different domains");
    }
  }

  const Carrier& dom = fs[0].domain;
  FiniteFunction out{dom, product.carrier, {}};
  out.table.reserve(dom.size());
  std::vector<int> coords(n, 0);
  for (int x = 0; x < dom.size(); ++x) {
    for (std::size_t i = 0; i < n; ++i) coords[i] = fs[i].table[x];
    out.table.push_back(static_cast<std::int32_t>(product.point(coords)));
  }
  return out;
}

}  // namespace lawmeas
