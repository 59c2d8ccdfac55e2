#ifndef LAWMEAS_IO_HPP
#define LAWMEAS_IO_HPP

#include <filesystem>
#include <string>

#include "lawmeas/measmodel.hpp"
#include "lawmeas/sigma.hpp"
#include "lawmeas/theory.hpp"
#include "lawmeas/topmodel.hpp"
#include "lawmeas/topology.hpp"

namespace lawmeas {

// File schemas (JSON unless noted). Subsets are arrays of element labels.
//
//   space:      {"carrier": ["a","b"], "sigma": [[...], ...]}
//           or  {"carrier": [...], "generators": [[...], ...]}
//   topology:   {"carrier": [...], "opens": [[...], ...]}
//           or  {"carrier": [...], "subbasis": [[...], ...]}
//   algebra:    {"carrier": [...], "ops": {"mul": [["0","1"],["1","0"]],
//                                          "e": ["0"], ...}}
//               (tables nest one level per argument, first argument
//                outermost; a flat row-major array is also accepted)
//   topalgebra: algebra plus "topology": {"opens": ...} or {"subbasis": ...}
//   theory:     the theory DSL (plain text, not JSON)
//
// Loaders validate declared families (a "sigma" family must satisfy the
// sigma-algebra axioms, an "opens" family the topology axioms) and throw
// InputError / ParseError with file context.

MeasurableSpace load_space(const std::filesystem::path& path);
Topology load_topology(const std::filesystem::path& path);
Algebra load_algebra(const std::filesystem::path& path);
TopologicalAlgebra load_topalgebra(const std::filesystem::path& path);
TheoryPresentation load_theory(const std::filesystem::path& path);

// Parsing entry points on in-memory text, used by the loaders and by tests.
MeasurableSpace parse_space_json(const std::string& text);
Topology parse_topology_json(const std::string& text);
Algebra parse_algebra_json(const std::string& text);
TopologicalAlgebra parse_topalgebra_json(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace lawmeas

#endif
