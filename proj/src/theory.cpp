#include "lawmeas/theory.hpp"

#include <algorithm>
#include <atomic>
#include <optional>

namespace lawmeas {

bool Term::operator==(const Term& o) const {
  return kind == o.kind && index == o.index && args == o.args;
}

int var_span(const Term& t) {
  if (t.kind == Term::Kind::Var) return t.index + 1;
  int span = 0;
  for (const auto& a : t.args) span = std::max(span, var_span(a));
  return span;
}

std::optional<int> TheoryPresentation::op_index(std::string_view op_name) const {
  for (int i = 0; i < static_cast<int>(ops.size()); ++i) {
    if (ops[i].name == op_name) return i;
  }
  return std::nullopt;
}

namespace {

void validate_term(const Term& t, const TheoryPresentation& th, int var_count) {
  if (t.kind == Term::Kind::Var) {
    if (t.index < 0 || t.index >= var_count) {
      throw InputError("term variable index out of range");
    }
    return;
  }
  if (t.index < 0 || t.index >= static_cast<int>(th.ops.size())) {
    throw InputError("term references an undeclared operation");
  }
  if (static_cast<int>(t.args.size()) != th.ops[t.index].arity) {
    throw InputError("term argument count differs from operation arity");
  }
  for (const auto& a : t.args) validate_term(a, th, var_count);
}

}  // namespace

void validate_presentation(const TheoryPresentation& th) {
  for (std::size_t i = 0; i < th.ops.size(); ++i) {
    if (th.ops[i].arity < 0) throw InputError("negative operation arity");
    for (std::size_t j = i + 1; j < th.ops.size(); ++j) {
      if (th.ops[i].name == th.ops[j].name) {
        throw InputError("duplicate operation '" + th.ops[i].name + "'");
      }
    }
  }
  for (const auto& eq : th.equations) {
    if (!eq.var_names.empty() &&
        static_cast<int>(eq.var_names.size()) != eq.var_count) {
      throw InputError("equation variable names differ from var_count");
    }
    validate_term(eq.lhs, th, eq.var_count);
    validate_term(eq.rhs, th, eq.var_count);
  }
}

bool structurally_equal(const TheoryPresentation& a, const TheoryPresentation& b) {
  if (a.name != b.name || a.ops != b.ops ||
      a.equations.size() != b.equations.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.equations.size(); ++i) {
    const auto& ea = a.equations[i];
    const auto& eb = b.equations[i];
    if (ea.var_count != eb.var_count || !(ea.lhs == eb.lhs) || !(ea.rhs == eb.rhs)) {
      return false;
    }
  }
  return true;
}

namespace {

TheoryPresentation parse_builtin(std::string_view text,
                                 std::initializer_list<const char*> labels) {
  TheoryPresentation th = parse_theory(text);
  int i = 0;
  for (const char* label : labels) th.equations[i++].label = label;
  return th;
}

}  // namespace

TheoryPresentation builtin_theory(std::string_view name) {
  if (name == "Group") {
    return parse_builtin(
        "theory Group\n"
        "ops: e/0, inv/1, mul/2\n"
        "eq: mul(e, x) = x\n"
        "eq: mul(x, e) = x\n"
        "eq: mul(mul(x, y), z) = mul(x, mul(y, z))\n"
        "eq: mul(inv(x), x) = e\n"
        "eq: mul(x, inv(x)) = e\n",
        {"unit_l", "unit_r", "assoc", "inv_l", "inv_r"});
  }
  if (name == "Monoid") {
    return parse_builtin(
        "theory Monoid\n"
        "ops: e/0, mul/2\n"
        "eq: mul(e, x) = x\n"
        "eq: mul(x, e) = x\n"
        "eq: mul(mul(x, y), z) = mul(x, mul(y, z))\n",
        {"unit_l", "unit_r", "assoc"});
  }
  if (name == "Ring") {
    return parse_builtin(
        "theory Ring\n"
        "ops: zero/0, one/0, neg/1, add/2, mul/2\n"
        "eq: add(zero, x) = x\n"
        "eq: add(x, zero) = x\n"
        "eq: add(add(x, y), z) = add(x, add(y, z))\n"
        "eq: add(neg(x), x) = zero\n"
        "eq: add(x, neg(x)) = zero\n"
        "eq: add(x, y) = add(y, x)\n"
        "eq: mul(one, x) = x\n"
        "eq: mul(x, one) = x\n"
        "eq: mul(mul(x, y), z) = mul(x, mul(y, z))\n"
        "eq: mul(x, add(y, z)) = add(mul(x, y), mul(x, z))\n"
        "eq: mul(add(x, y), z) = add(mul(x, z), mul(y, z))\n",
        {"add_unit_l", "add_unit_r", "add_assoc", "add_inv_l", "add_inv_r",
         "add_comm", "mul_unit_l", "mul_unit_r", "mul_assoc", "distrib_l",
         "distrib_r"});
  }
  if (name == "BareRing") {
    // Everything in Ring except commutativity of addition, which unital
    // distributivity forces anyway: expand (1+1)(x+y) both ways.
    return parse_builtin(
        "theory BareRing\n"
        "ops: zero/0, one/0, neg/1, add/2, mul/2\n"
        "eq: add(zero, x) = x\n"
        "eq: add(x, zero) = x\n"
        "eq: add(add(x, y), z) = add(x, add(y, z))\n"
        "eq: add(neg(x), x) = zero\n"
        "eq: add(x, neg(x)) = zero\n"
        "eq: mul(one, x) = x\n"
        "eq: mul(x, one) = x\n"
        "eq: mul(mul(x, y), z) = mul(x, mul(y, z))\n"
        "eq: mul(x, add(y, z)) = add(mul(x, y), mul(x, z))\n"
        "eq: mul(add(x, y), z) = add(mul(x, z), mul(y, z))\n",
        {"add_unit_l", "add_unit_r", "add_assoc", "add_inv_l", "add_inv_r",
         "mul_unit_l", "mul_unit_r", "mul_assoc", "distrib_l", "distrib_r"});
  }
  throw InputError("unknown builtin theory '" + std::string(name) + "'");
}

const OpTable* Algebra::find(std::string_view op_name) const {
  for (const auto& t : ops) {
    if (t.name == op_name) return &t;
  }
  return nullptr;
}

void validate_algebra(const Algebra& a) {
  const int k = a.carrier.size();
  for (std::size_t i = 0; i < a.ops.size(); ++i) {
    const auto& t = a.ops[i];
    for (std::size_t j = i + 1; j < a.ops.size(); ++j) {
      if (t.name == a.ops[j].name) {
        throw InputError("duplicate operation table '" + t.name + "'");
      }
    }
    if (t.arity < 0) throw InputError("negative arity in table '" + t.name + "'");
    if (k == 0 && t.arity == 0) {
      throw NoConstantsPossible("operation '" + t.name +
                                "': no constants possible on an empty carrier");
    }
    const std::int64_t expect = checked_pow(k, t.arity);
    if (static_cast<std::int64_t>(t.values.size()) != expect) {
      throw InputError("table '" + t.name + "' has " +
                       std::to_string(t.values.size()) + " entries, expected " +
                       std::to_string(expect));
    }
    for (auto v : t.values) {
      if (v < 0 || v >= k) {
        throw InputError("table '" + t.name + "' entry out of carrier range");
      }
    }
  }
}

BoundAlgebra bind_algebra(const Algebra& alg, const TheoryPresentation& th) {
  BoundAlgebra bound{&alg, &th, {}};
  bound.tables.reserve(th.ops.size());
  const int k = alg.carrier.size();
  for (const auto& op : th.ops) {
    const OpTable* table = alg.find(op.name);
    if (table == nullptr) {
      throw InputError("algebra has no table for operation '" + op.name + "'");
    }
    // The table length is the authoritative arity check: on carriers of
    // size <= 1 the file format cannot distinguish arities, so the stored
    // arity may legitimately differ while the length still matches.
    if (static_cast<std::int64_t>(table->values.size()) !=
        checked_pow(k, op.arity)) {
      throw InputError("operation '" + op.name + "': table has " +
                       std::to_string(table->values.size()) +
                       " entries but arity " + std::to_string(op.arity) +
                       " needs " + std::to_string(checked_pow(k, op.arity)));
    }
    bound.tables.push_back(table);
  }
  return bound;
}

int eval_term(const Term& t, const BoundAlgebra& b, std::span<const int> env) {
  if (t.kind == Term::Kind::Var) return env[t.index];
  const OpTable& table = *b.tables[t.index];
  int idx = 0;
  const int k = b.algebra->carrier.size();
  for (const auto& a : t.args) idx = idx * k + eval_term(a, b, env);
  return table.values[idx];
}

namespace {

void decode_env(std::int64_t rank, int k, std::vector<int>& env) {
  for (std::size_t j = env.size(); j-- > 0;) {
    env[j] = static_cast<int>(rank % k);
    rank /= k;
  }
}

std::int64_t equation_states(const Equation& eq, int k, const Caps& caps) {
  const std::int64_t states = checked_pow(k, eq.var_count);
  if (states > caps.model_check_max_states) {
    throw CapExceeded("check_model: equation '" + eq.label + "' needs " +
                      std::to_string(states) + " environments, cap is " +
                      std::to_string(caps.model_check_max_states));
  }
  return states;
}

ModelFailure failure_at(const Equation& eq, const BoundAlgebra& bound, int k,
                        std::int64_t rank) {
  std::vector<int> env(eq.var_count);
  if (k > 0) decode_env(rank, k, env);
  ModelFailure f;
  f.equation_label = eq.label;
  f.lhs_value = eval_term(eq.lhs, bound, env);
  f.rhs_value = eval_term(eq.rhs, bound, env);
  f.env = std::move(env);
  return f;
}

// Least violating environment rank, or `states` when the equation holds.
std::int64_t sweep_parallel(const Equation& eq, const BoundAlgebra& bound,
                            int k, std::int64_t states) {
  std::atomic<std::int64_t> best{states};
#pragma omp parallel
  {
    std::vector<int> env(eq.var_count);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < states; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) continue;
      if (k > 0) decode_env(i, k, env);
      if (eval_term(eq.lhs, bound, env) != eval_term(eq.rhs, bound, env)) {
        std::int64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  }
  return best.load();
}

}  // namespace

ModelReport check_model(const Algebra& alg, const TheoryPresentation& th,
                        const Caps& caps) {
  const BoundAlgebra bound = bind_algebra(alg, th);
  const int k = alg.carrier.size();
  ModelReport report;
  for (const auto& eq : th.equations) {
    const std::int64_t states = equation_states(eq, k, caps);
    report.instances_checked += states;
    const std::int64_t hit = sweep_parallel(eq, bound, k, states);
    if (hit < states) {
      report.pass = false;
      report.failures.push_back(failure_at(eq, bound, k, hit));
    }
  }
  return report;
}

namespace reference {

ModelReport check_model(const Algebra& alg, const TheoryPresentation& th,
                        const Caps& caps) {
  const BoundAlgebra bound = bind_algebra(alg, th);
  const int k = alg.carrier.size();
  ModelReport report;
  for (const auto& eq : th.equations) {
    const std::int64_t states = equation_states(eq, k, caps);
    report.instances_checked += states;
    std::vector<int> env(eq.var_count);
    for (std::int64_t i = 0; i < states; ++i) {
      if (k > 0) decode_env(i, k, env);
      if (eval_term(eq.lhs, bound, env) != eval_term(eq.rhs, bound, env)) {
        report.pass = false;
        report.failures.push_back(failure_at(eq, bound, k, i));
        break;
      }
    }
  }
  return report;
}

}  // namespace reference

}  // namespace lawmeas
