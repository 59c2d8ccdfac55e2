#include "lawmeas/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lawmeas {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return j;
}

Carrier carrier_from(const json& j) {
  if (!j.contains("carrier") || !j["carrier"].is_array()) {
    throw InputError("missing \"carrier\" array");
  }
  std::vector<std::string> labels;
  for (const auto& l : j["carrier"]) {
    if (!l.is_string()) throw InputError("carrier labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return Carrier(std::move(labels));
}

SubsetMask mask_from(const Carrier& c, const json& arr) {
  if (!arr.is_array()) throw InputError("a subset must be an array of labels");
  SubsetMask m(c);
  for (const auto& l : arr) {
    if (!l.is_string()) throw InputError("subset entries must be label strings");
    const auto idx = c.index_of(l.get<std::string>());
    if (!idx) throw InputError("unknown element label '" + l.get<std::string>() + "'");
    m.set(*idx);
  }
  return m;
}

SetFamily family_from(const Carrier& c, const json& arr) {
  if (!arr.is_array()) throw InputError("a set family must be an array of subsets");
  SetFamily f;
  for (const auto& s : arr) f.push_back(mask_from(c, s));
  return f;
}

// Flattens a table value: either a flat row-major array of labels or
// nested arrays, one level per argument with the first argument outermost.
void flatten_table(const Carrier& c, const json& v, int depth_left,
                   std::vector<std::int32_t>& out) {
  if (v.is_string()) {
    const auto idx = c.index_of(v.get<std::string>());
    if (!idx) throw InputError("unknown element label '" + v.get<std::string>() + "'");
    out.push_back(static_cast<std::int32_t>(*idx));
    return;
  }
  if (!v.is_array()) throw InputError("table entries must be labels or arrays");
  for (const auto& e : v) flatten_table(c, e, depth_left - 1, out);
}

Algebra algebra_from(const json& j) {
  Algebra alg;
  alg.carrier = carrier_from(j);
  if (!j.contains("ops") || !j["ops"].is_object()) {
    throw InputError("missing \"ops\" object");
  }
  const int k = alg.carrier.size();
  for (const auto& [name, value] : j["ops"].items()) {
    OpTable table;
    table.name = name;
    flatten_table(alg.carrier, value, 0, table.values);
    // Infer the arity from the table length: k^arity entries. On carriers
    // of size <= 1 the length does not determine the arity; bind_algebra
    // accepts any arity whose table length matches, so the choice here is
    // immaterial.
    const auto size = static_cast<std::int64_t>(table.values.size());
    if (k == 0) {
      if (size != 0) {
        throw InputError("table '" + name + "' nonempty over an empty carrier");
      }
      table.arity = 1;
    } else if (k == 1) {
      if (size != 1) {
        throw InputError("table '" + name + "' must have one entry on a "
                         "one-element carrier");
      }
      table.arity = 0;
    } else {
      std::int64_t expect = 1;
      int arity = 0;
      while (expect < size) {
        expect *= k;
        ++arity;
      }
      if (expect != size) {
        throw InputError("table '" + name + "' has " + std::to_string(size) +
                         " entries, not a power of the carrier size");
      }
      table.arity = arity;
    }
    alg.ops.push_back(std::move(table));
  }
  validate_algebra(alg);
  return alg;
}

Topology topology_from(const Carrier& c, const json& j, const char* where) {
  if (j.contains("opens")) {
    SetFamily opens = family_from(c, j["opens"]);
    const TopologyCheck check = is_topology(c, opens);
    if (!check.ok) {
      throw InputError(std::string(where) + ": \"opens\" is not a topology: " +
                       check.describe());
    }
    return topology_from_opens(c, std::move(opens));
  }
  if (j.contains("subbasis")) {
    return generate_topology(c, family_from(c, j["subbasis"]));
  }
  throw InputError(std::string(where) + ": expected \"opens\" or \"subbasis\"");
}

}  // namespace

MeasurableSpace parse_space_json(const std::string& text) {
  const json j = parse_json(text);
  const Carrier c = carrier_from(j);
  if (j.contains("sigma")) {
    SetFamily family = family_from(c, j["sigma"]);
    const SigmaCheck check = is_sigma_algebra(c, family);
    if (!check.ok) {
      throw InputError("\"sigma\" is not a sigma-algebra: " + check.describe());
    }
    canonicalize_family(family);
    Partition atoms = atoms_of_family(c, family);
    return MeasurableSpace{c, SigmaAlgebra{c, std::move(family), std::move(atoms)}};
  }
  if (j.contains("generators")) {
    return MeasurableSpace{c, generate_sigma(c, family_from(c, j["generators"]))};
  }
  throw InputError("space file: expected \"sigma\" or \"generators\"");
}

Topology parse_topology_json(const std::string& text) {
  const json j = parse_json(text);
  const Carrier c = carrier_from(j);
  return topology_from(c, j, "topology file");
}

Algebra parse_algebra_json(const std::string& text) {
  return algebra_from(parse_json(text));
}

TopologicalAlgebra parse_topalgebra_json(const std::string& text) {
  const json j = parse_json(text);
  Algebra alg = algebra_from(j);
  if (!j.contains("topology") || !j["topology"].is_object()) {
    throw InputError("topological algebra file: missing \"topology\" object");
  }
  Topology top = topology_from(alg.carrier, j["topology"], "\"topology\"");
  return TopologicalAlgebra{std::move(alg), std::move(top)};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

namespace {

template <typename Fn>
auto with_file_context(const std::filesystem::path& path, Fn&& fn)
    -> decltype(fn(std::string())) {
  std::string text = read_text_file(path);
  try {
    return fn(std::move(text));
  } catch (const ParseError&) {
    throw;  // already carries position info; CLI adds the file name
  } catch (const Error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace

MeasurableSpace load_space(const std::filesystem::path& path) {
  return with_file_context(path, [](std::string t) { return parse_space_json(t); });
}

Topology load_topology(const std::filesystem::path& path) {
  return with_file_context(path, [](std::string t) { return parse_topology_json(t); });
}

Algebra load_algebra(const std::filesystem::path& path) {
  return with_file_context(path, [](std::string t) { return parse_algebra_json(t); });
}

TopologicalAlgebra load_topalgebra(const std::filesystem::path& path) {
  return with_file_context(path,
                           [](std::string t) { return parse_topalgebra_json(t); });
}

TheoryPresentation load_theory(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  return parse_theory(text);
}

}  // namespace lawmeas
