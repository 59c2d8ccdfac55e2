#include "lawmeas/verify/models.hpp"

namespace lawmeas::verify {

namespace {

OpTable binary_table(const char* name, int k, int (*fn)(int, int, int)) {
  OpTable t{name, 2, {}};
  t.values.reserve(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      t.values.push_back(static_cast<std::int32_t>(fn(a, b, k)));
    }
  }
  return t;
}

OpTable unary_table(const char* name, int k, int (*fn)(int, int)) {
  OpTable t{name, 1, {}};
  t.values.reserve(k);
  for (int a = 0; a < k; ++a) {
    t.values.push_back(static_cast<std::int32_t>(fn(a, k)));
  }
  return t;
}

}  // namespace

Algebra cyclic_group(int k) {
  Algebra alg;
  alg.carrier = Carrier::numeric(k);
  alg.ops.push_back(OpTable{"e", 0, {0}});
  alg.ops.push_back(unary_table("inv", k, [](int a, int n) { return (n - a) % n; }));
  alg.ops.push_back(binary_table("mul", k, [](int a, int b, int n) { return (a + b) % n; }));
  validate_algebra(alg);
  return alg;
}

Algebra klein_four() {
  Algebra alg;
  alg.carrier = Carrier({"e", "a", "b", "c"});
  alg.ops.push_back(OpTable{"e", 0, {0}});
  alg.ops.push_back(OpTable{"inv", 1, {0, 1, 2, 3}});
  // xor on the index encodes the Klein four multiplication.
  alg.ops.push_back(binary_table("mul", 4, [](int a, int b, int) { return a ^ b; }));
  validate_algebra(alg);
  return alg;
}

Algebra cyclic_ring(int k) {
  Algebra alg;
  alg.carrier = Carrier::numeric(k);
  alg.ops.push_back(OpTable{"zero", 0, {0}});
  alg.ops.push_back(OpTable{"one", 0, {k > 1 ? 1 : 0}});
  alg.ops.push_back(unary_table("neg", k, [](int a, int n) { return (n - a) % n; }));
  alg.ops.push_back(binary_table("add", k, [](int a, int b, int n) { return (a + b) % n; }));
  alg.ops.push_back(binary_table("mul", k, [](int a, int b, int n) { return (a * b) % n; }));
  validate_algebra(alg);
  return alg;
}

Algebra z4_subtraction() {
  Algebra alg;
  alg.carrier = Carrier::numeric(4);
  alg.ops.push_back(OpTable{"e", 0, {0}});
  alg.ops.push_back(OpTable{"inv", 1, {0, 1, 2, 3}});
  alg.ops.push_back(binary_table("mul", 4, [](int a, int b, int n) {
    return ((a - b) % n + n) % n;
  }));
  validate_algebra(alg);
  return alg;
}

Algebra power_algebra(const Algebra& base, int n) {
  const int k = base.carrier.size();
  const std::int64_t points = checked_pow(k, n);

  std::vector<std::string> labels;
  labels.reserve(points);
  std::vector<int> c(n, 0);
  for (std::int64_t p = 0; p < points; ++p) {
    std::string l = "(";
    for (int i = 0; i < n; ++i) {
      if (i) l += ",";
      l += base.carrier.label(c[i]);
    }
    l += ")";
    labels.push_back(std::move(l));
    for (int i = n - 1; i >= 0; --i) {
      if (++c[i] < k) break;
      c[i] = 0;
    }
  }

  Algebra power;
  power.carrier = Carrier(std::move(labels));

  auto coords_of = [&](std::int64_t p) {
    std::vector<int> out(n);
    for (int i = n - 1; i >= 0; --i) {
      out[i] = static_cast<int>(p % k);
      p /= k;
    }
    return out;
  };
  auto point_of = [&](const std::vector<int>& coords) {
    std::int64_t p = 0;
    for (int i = 0; i < n; ++i) p = p * k + coords[i];
    return p;
  };

  for (const auto& op : base.ops) {
    OpTable lifted{op.name, op.arity, {}};
    const std::int64_t rows = checked_pow(points, op.arity);
    lifted.values.reserve(rows);
    std::vector<std::vector<int>> args(op.arity);
    for (std::int64_t r = 0; r < rows; ++r) {
      std::int64_t rest = r;
      for (int a = op.arity - 1; a >= 0; --a) {
        args[a] = coords_of(rest % points);
        rest /= points;
      }
      std::vector<int> result(n);
      for (int i = 0; i < n; ++i) {
        int idx = 0;
        for (int a = 0; a < op.arity; ++a) idx = idx * k + args[a][i];
        result[i] = op.values[idx];
      }
      lifted.values.push_back(static_cast<std::int32_t>(point_of(result)));
    }
    power.ops.push_back(std::move(lifted));
  }
  validate_algebra(power);
  return power;
}

Topology sierpinski() {
  const Carrier c = Carrier::numeric(2);
  return generate_topology(c, {SubsetMask::single(c, 1)});
}

std::vector<Topology> curated_spaces(int max_points) {
  std::vector<Topology> out;
  if (max_points >= 1) {
    out.push_back(discrete_topology(Carrier({"p"})));
  }
  if (max_points >= 2) {
    const Carrier two = Carrier::numeric(2);
    out.push_back(indiscrete_topology(two));
    out.push_back(sierpinski());
    out.push_back(discrete_topology(two));
  }
  if (max_points >= 3) {
    const Carrier three = Carrier::numeric(3);
    out.push_back(indiscrete_topology(three));
    // Chain: {} < {0} < {0,1} < X.
    out.push_back(generate_topology(
        three, {SubsetMask::of(three, {0}), SubsetMask::of(three, {0, 1})}));
    // Clopen split {0} | {1,2}.
    out.push_back(generate_topology(
        three, {SubsetMask::of(three, {0}), SubsetMask::of(three, {1, 2})}));
    out.push_back(discrete_topology(three));
  }
  return out;
}

}  // namespace lawmeas::verify
