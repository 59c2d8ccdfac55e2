#include "lawmeas/measmodel.hpp"

#include <algorithm>

namespace lawmeas {

int MeasFunctionSpace::index_of(const std::vector<std::int32_t>& table) const {
  const auto it = std::lower_bound(
      functions.begin(), functions.end(), table,
      [](const FiniteFunction& f, const std::vector<std::int32_t>& t) {
        return f.table < t;
      });
  if (it == functions.end() || it->table != table) return -1;
  return static_cast<int>(it - functions.begin());
}

namespace {

std::int64_t candidate_count(const MeasurableSpace& X, const Carrier& target,
                             const Caps& caps) {
  const std::int64_t total = checked_pow(target.size(), X.carrier.size());
  if (total > caps.function_space_max) {
    throw CapExceeded("function space |Y|^|X| = " + std::to_string(total) +
                      " exceeds cap " + std::to_string(caps.function_space_max));
  }
  return total;
}

}  // namespace

std::vector<FiniteFunction> measurable_functions(const MeasurableSpace& X,
                                                 const Carrier& target_carrier,
                                                 const SigmaAlgebra& target_borel,
                                                 const Caps& caps) {
  if (!(target_borel.carrier == target_carrier)) {
    throw CarrierMismatch("measurable_functions: target sigma-algebra carrier differs");
  }
  const std::int64_t total = candidate_count(X, target_carrier, caps);
  const int nx = X.carrier.size();
  const int k = target_carrier.size();

  // Both sigma-algebras are unions-of-blocks of their atom partitions, so a
  // function is measurable exactly when no source atom maps into two
  // different target atoms. That check needs no set materialization, which
  // keeps the parallel sweep allocation-free (the verdict-based route is
  // the serial reference below and in is_measurable itself).
  std::vector<int> atom_of(k, -1);
  for (std::size_t j = 0; j < target_borel.atoms.blocks.size(); ++j) {
    for (int y : target_borel.atoms.blocks[j].elements()) {
      atom_of[y] = static_cast<int>(j);
    }
  }
  std::vector<int> block_of(nx, -1);
  const int nblocks = static_cast<int>(X.sigma.atoms.blocks.size());
  for (std::size_t j = 0; j < X.sigma.atoms.blocks.size(); ++j) {
    for (int x : X.sigma.atoms.blocks[j].elements()) {
      block_of[x] = static_cast<int>(j);
    }
  }

  std::vector<unsigned char> keep(total, 0);
#pragma omp parallel
  {
    std::vector<int> digits(nx, 0);
    std::vector<int> seen(nblocks, -1);
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < total; ++r) {
      std::int64_t rest = r;
      for (int x = nx - 1; x >= 0; --x) {
        digits[x] = static_cast<int>(rest % k);
        rest /= k;
      }
      std::fill(seen.begin(), seen.end(), -1);
      bool ok = true;
      for (int x = 0; x < nx; ++x) {
        const int atom = atom_of[digits[x]];
        int& slot = seen[block_of[x]];
        if (slot < 0) {
          slot = atom;
        } else if (slot != atom) {
          ok = false;
          break;
        }
      }
      keep[r] = ok ? 1 : 0;
    }
  }

  std::vector<FiniteFunction> out;
  for (std::int64_t r = 0; r < total; ++r) {
    if (keep[r]) {
      out.push_back(FiniteFunction::from_rank(X.carrier, target_carrier,
                                              static_cast<std::uint64_t>(r)));
    }
  }
  return out;
}

namespace reference {

std::vector<FiniteFunction> measurable_functions(const MeasurableSpace& X,
                                                 const Carrier& target_carrier,
                                                 const SigmaAlgebra& target_borel,
                                                 const Caps& caps) {
  const std::int64_t total = candidate_count(X, target_carrier, caps);
  std::vector<FiniteFunction> out;
  for (std::int64_t r = 0; r < total; ++r) {
    FiniteFunction f = FiniteFunction::from_rank(X.carrier, target_carrier,
                                                 static_cast<std::uint64_t>(r));
    if (is_measurable(f, X, target_borel).measurable) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace reference

namespace {

Carrier function_space_carrier(const std::vector<FiniteFunction>& functions,
                               const Carrier& domain, const Carrier& codomain) {
  std::vector<std::string> labels;
  labels.reserve(functions.size());
  for (const auto& f : functions) {
    std::string l = "[";
    for (int x = 0; x < domain.size(); ++x) {
      if (x) l += ",";
      l += codomain.label(f.table[x]);
    }
    l += "]";
    labels.push_back(std::move(l));
  }
  return Carrier(std::move(labels));
}

}  // namespace

MeasFunctionSpace build_meas_space(const MeasurableSpace& X,
                                   const TopologicalAlgebra& Y,
                                   const Caps& caps) {
  if (!(Y.algebra.carrier == Y.topology.carrier)) {
    throw CarrierMismatch("build_meas_space: target algebra and topology carriers differ");
  }
  if (Y.algebra.carrier.size() == 0 && X.carrier.size() > 0) {
    for (const auto& op : Y.algebra.ops) {
      if (op.arity == 0) {
        throw NoConstantsPossible(
            "no constants possible: Meas(X, Y) is empty for empty Y and "
            "nonempty X, but operation '" + op.name + "' is a constant");
      }
    }
  }

  MeasFunctionSpace ms;
  ms.source = X;
  ms.target = Y;
  ms.target_borel = borel(Y.topology, caps);
  ms.functions = measurable_functions(X, Y.algebra.carrier, ms.target_borel, caps);
  ms.function_carrier =
      function_space_carrier(ms.functions, X.carrier, Y.algebra.carrier);
  return ms;
}

OpTable lift_operation(const MeasFunctionSpace& ms, const OpSymbol& op,
                       const Caps& caps) {
  const OpTable* target_op = ms.target.algebra.find(op.name);
  if (target_op == nullptr) {
    throw InputError("target algebra has no table for operation '" + op.name +
                     "'");
  }
  const int n = op.arity;
  const int k = ms.target.algebra.carrier.size();
  if (static_cast<std::int64_t>(target_op->values.size()) != checked_pow(k, n)) {
    throw InputError("operation '" + op.name + "': table length does not match arity " +
                     std::to_string(n));
  }
  const std::int64_t fcount = static_cast<std::int64_t>(ms.functions.size());
  const std::int64_t tuples = checked_pow(fcount, n);
  if (tuples > caps.family_max) {
    throw CapExceeded("lifted table for '" + op.name +
                      "' exceeds the family cap");
  }
  const int domain_size = ms.source.carrier.size();

  OpTable lifted;
  lifted.name = op.name;
  lifted.arity = n;
  lifted.values.resize(tuples);

  std::vector<int> pick(n, 0);
  std::vector<std::int32_t> image(domain_size, 0);
  for (std::int64_t t = 0; t < tuples; ++t) {
    // Decode the tuple of function indices, argument 0 most significant.
    std::int64_t r = t;
    for (int i = n - 1; i >= 0; --i) {
      pick[i] = static_cast<int>(r % fcount);
      r /= fcount;
    }
    for (int x = 0; x < domain_size; ++x) {
      int idx = 0;
      for (int i = 0; i < n; ++i) idx = idx * k + ms.functions[pick[i]].table[x];
      image[x] = target_op->values[idx];
    }
    const int pos = ms.index_of(image);
    if (pos < 0) {
      std::string tuple_str;
      for (int i = 0; i < n; ++i) {
        if (i) tuple_str += ",";
        tuple_str += ms.function_carrier.label(pick[i]);
      }
      throw ClosureViolation("lift of '" + op.name +
                             "' leaves the measurable-function space at (" +
                             tuple_str + ")");
    }
    lifted.values[t] = pos;
  }
  return lifted;
}

Algebra lifted_algebra(const MeasFunctionSpace& ms, const TheoryPresentation& th,
                       const Caps& caps) {
  Algebra out;
  out.carrier = ms.function_carrier;
  out.ops.reserve(th.ops.size());
  for (const auto& op : th.ops) out.ops.push_back(lift_operation(ms, op, caps));
  return out;
}

ProductPreservationReport check_product_preservation(const MeasurableSpace& X,
                                                     const TopologicalAlgebra& Y,
                                                     int n, const Caps& caps) {
  if (n < 0) throw InputError("check_product_preservation: negative arity");
  if (n > 3) {
    throw CapExceeded("check_product_preservation: arity " + std::to_string(n) +
                      " above the supported bound 3");
  }

  ProductPreservationReport report;
  report.arity = n;

  const SigmaAlgebra borel_y = borel(Y.topology, caps);
  const std::vector<FiniteFunction> ms1 =
      measurable_functions(X, Y.algebra.carrier, borel_y, caps);
  const ProductSpace product = product_topology(Y.topology, n, caps);
  const SigmaAlgebra borel_n = borel(product.topology, caps);
  const std::vector<FiniteFunction> msn =
      measurable_functions(X, product.carrier, borel_n, caps);

  report.meas_1_count = static_cast<std::int64_t>(ms1.size());
  report.meas_n_count = static_cast<std::int64_t>(msn.size());

  auto fail = [&](std::string why) {
    report.pass = false;
    report.failure = std::move(why);
    return report;
  };

  const std::int64_t expected = checked_pow(report.meas_1_count, n);
  if (report.meas_n_count != expected) {
    return fail("|Meas(X,Y^n)| = " + std::to_string(report.meas_n_count) +
                " differs from |Meas(X,Y)|^n = " + std::to_string(expected));
  }

  auto find_in = [](const std::vector<FiniteFunction>& space,
                    const std::vector<std::int32_t>& table) {
    const auto it = std::lower_bound(
        space.begin(), space.end(), table,
        [](const FiniteFunction& f, const std::vector<std::int32_t>& t) {
          return f.table < t;
        });
    if (it == space.end() || it->table != table) return -1;
    return static_cast<int>(it - space.begin());
  };

  // Post-composition with every projection lands in Meas(X, Y).
  std::vector<FiniteFunction> projections;
  projections.reserve(n);
  for (int i = 0; i < n; ++i) projections.push_back(product.projection(i));
  for (const auto& f : msn) {
    for (int i = 0; i < n; ++i) {
      if (find_in(ms1, compose(projections[i], f).table) < 0) {
        return fail("projection of a measurable tuple function is not measurable");
      }
    }
  }

  // Every tuple arises from the pairing map, and the projection triangle
  // commutes on the nose.
  const std::int64_t tuples = expected;
  std::vector<int> pick(n, 0);
  for (std::int64_t t = 0; t < tuples; ++t) {
    std::int64_t r = t;
    for (int i = n - 1; i >= 0; --i) {
      pick[i] = static_cast<int>(r % report.meas_1_count);
      r /= report.meas_1_count;
    }
    FiniteFunction paired =
        n == 0 ? FiniteFunction::constant(X.carrier, product.carrier, 0)
               : pairing([&] {
                   std::vector<FiniteFunction> fs;
                   fs.reserve(n);
                   for (int i = 0; i < n; ++i) fs.push_back(ms1[pick[i]]);
                   return fs;
                 }(), product);
    if (find_in(msn, paired.table) < 0) {
      return fail("pairing of measurable components is not in Meas(X,Y^n)");
    }
    for (int i = 0; i < n; ++i) {
      if (!(compose(projections[i], paired) == ms1[pick[i]])) {
        return fail("projection after pairing does not return the component");
      }
    }
  }

  // Pairing after projections is the identity on Meas(X,Y^n).
  for (const auto& f : msn) {
    if (n == 0) continue;
    std::vector<FiniteFunction> comps;
    comps.reserve(n);
    for (int i = 0; i < n; ++i) comps.push_back(compose(projections[i], f));
    if (!(pairing(comps, product) == f)) {
      return fail("pairing of the projections does not return the function");
    }
  }

  report.pass = true;
  return report;
}

TheoremReport verify_theorem(const MeasurableSpace& X, const TopologicalAlgebra& Y,
                             const TheoryPresentation& th,
                             const std::vector<int>& pp_arities, const Caps& caps) {
  TheoremReport report;

  const TopModelReport premise =
      check_topological_model(Y.algebra, Y.topology, th, caps);
  report.premise_pass = premise.pass;
  if (!premise.pass) {
    for (const auto& c : premise.continuity_failures) {
      report.failures.push_back("premise: operation '" + c.op +
                                "' is not continuous; witness open " +
                                c.witness_open.to_string());
    }
    for (const auto& e : premise.equations.failures) {
      report.failures.push_back("premise: target violates '" + e.equation_label +
                                "'");
    }
  }

  const MeasFunctionSpace ms = build_meas_space(X, Y, caps);
  report.function_count = static_cast<std::int64_t>(ms.functions.size());

  Algebra lifted;
  lifted.carrier = ms.function_carrier;
  report.closure_pass = true;
  for (const auto& op : th.ops) {
    try {
      lifted.ops.push_back(lift_operation(ms, op, caps));
    } catch (const ClosureViolation& violation) {
      report.closure_pass = false;
      report.failures.push_back(std::string("closure: ") + violation.what());
    }
  }

  if (report.closure_pass) {
    report.equations = check_model(lifted, th, caps);
    report.equations_pass = report.equations.pass;
    for (const auto& f : report.equations.failures) {
      std::string env = "(";
      for (std::size_t i = 0; i < f.env.size(); ++i) {
        if (i) env += ",";
        env += ms.function_carrier.label(f.env[i]);
      }
      env += ")";
      report.failures.push_back("equation '" + f.equation_label +
                                "' fails at " + env);
    }
  } else {
    report.equations_pass = false;
    report.failures.push_back("equations: skipped, closure failed");
  }

  report.product_preservation_pass = true;
  for (int n : pp_arities) {
    report.product_preservation.push_back(check_product_preservation(X, Y, n, caps));
    const auto& pp = report.product_preservation.back();
    if (!pp.pass) {
      report.product_preservation_pass = false;
      report.failures.push_back("product preservation at n=" + std::to_string(n) +
                                ": " + pp.failure);
    }
  }

  report.pass = report.premise_pass && report.closure_pass &&
                report.equations_pass && report.product_preservation_pass;
  return report;
}

}  // namespace lawmeas
