// lawmeas: load finite spaces, algebras, and theory presentations; run the
// verification kernel; report as stable text or JSON.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 input or usage
// error. Reports on stdout are byte-identical across runs for identical
// inputs; suite timings go to stderr.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lawmeas/cocountable.hpp"
#include "lawmeas/io.hpp"
#include "lawmeas/measmodel.hpp"
#include "lawmeas/verify/suite.hpp"

namespace {

using nlohmann::json;
using namespace lawmeas;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

json mask_json(const SubsetMask& m) { return json(m.element_labels()); }

json family_json(const SetFamily& family) {
  json out = json::array();
  for (const auto& m : family) out.push_back(mask_json(m));
  return out;
}

std::string env_string(const std::vector<int>& env, const Carrier& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (i) out += ",";
    out += c.label(env[i]);
  }
  out += ")";
  return out;
}

int cmd_theory_check(const std::string& theory_path, const std::string& algebra_path,
                     bool as_json) {
  const TheoryPresentation th = load_theory(theory_path);
  const Algebra alg = load_algebra(algebra_path);
  const ModelReport report = check_model(alg, th);

  if (as_json) {
    json failures = json::array();
    for (const auto& f : report.failures) {
      json env = json::array();
      for (int v : f.env) env.push_back(alg.carrier.label(v));
      failures.push_back(json{{"equation", f.equation_label},
                              {"env", env},
                              {"lhs", alg.carrier.label(f.lhs_value)},
                              {"rhs", alg.carrier.label(f.rhs_value)}});
    }
    json out{{"schema", "1"},
             {"command", "theory-check"},
             {"theory", th.name},
             {"pass", report.pass},
             {"equations", th.equations.size()},
             {"instances", report.instances_checked},
             {"failures", failures}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "theory check: " << th.name << " on a " << alg.carrier.size()
              << "-element algebra\n";
    std::cout << "equations: " << th.equations.size()
              << "  instances: " << report.instances_checked << "\n";
    for (const auto& f : report.failures) {
      std::cout << "fail " << f.equation_label << " at "
                << env_string(f.env, alg.carrier)
                << ": lhs=" << alg.carrier.label(f.lhs_value)
                << " rhs=" << alg.carrier.label(f.rhs_value) << "\n";
    }
    std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? kExitPass : kExitFail;
}

int cmd_borel(const std::string& topology_path, bool as_json) {
  const Topology t = load_topology(topology_path);
  const SigmaAlgebra b = borel(t);

  if (as_json) {
    json out{{"schema", "1"},
             {"command", "borel"},
             {"carrier", t.carrier.labels()},
             {"opens", t.opens.size()},
             {"atoms", family_json(b.atoms.blocks)},
             {"count", b.members.size()},
             {"members", family_json(b.members)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "carrier:";
    for (const auto& l : t.carrier.labels()) std::cout << " " << l;
    std::cout << "\nopens: " << t.opens.size() << "\n";
    std::cout << "atoms:";
    for (const auto& a : b.atoms.blocks) std::cout << " " << a.to_string();
    std::cout << "\nborel members: " << b.members.size() << "\n";
    for (const auto& m : b.members) std::cout << m.to_string() << "\n";
  }
  return kExitPass;
}

int cmd_meas_verify(const std::string& space_path, const std::string& topalg_path,
                    const std::string& theory_path, bool as_json) {
  const MeasurableSpace X = load_space(space_path);
  const TopologicalAlgebra Y = load_topalgebra(topalg_path);
  const TheoryPresentation th = load_theory(theory_path);
  const TheoremReport report = verify_theorem(X, Y, th);

  if (as_json) {
    json out{{"schema", "1"},
             {"closure", report.closure_pass},
             {"equations", report.equations_pass},
             {"product_preservation", report.product_preservation_pass},
             {"function_count", report.function_count},
             {"failures", report.failures}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "meas verify: " << th.name << ", |X| = " << X.carrier.size()
              << ", |Y| = " << Y.algebra.carrier.size() << "\n";
    std::cout << "measurable functions: " << report.function_count << "\n";
    std::cout << "closure: " << (report.closure_pass ? "pass" : "fail") << "\n";
    std::cout << "equations: " << (report.equations_pass ? "pass" : "fail") << "\n";
    std::cout << "product preservation: "
              << (report.product_preservation_pass ? "pass" : "fail") << "\n";
    for (const auto& f : report.failures) std::cout << "  " << f << "\n";
    std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? kExitPass : kExitFail;
}

int cmd_suite(int max_carrier, bool as_json) {
  if (max_carrier < 1 || max_carrier > 4) {
    throw InputError("suite: --max-carrier must be between 1 and 4");
  }
  const auto results =
      verify::run_acceptance_suite(verify::SuiteOptions{max_carrier, false});

  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::cerr << "# criterion " << r.id << ": " << r.seconds << " s\n";
  }

  if (as_json) {
    json criteria = json::array();
    for (const auto& r : results) {
      criteria.push_back(json{{"id", r.id},
                              {"name", r.name},
                              {"pass", r.pass},
                              {"checks", r.cases},
                              {"detail", r.detail}});
    }
    json out{{"schema", "1"},
             {"command", "suite"},
             {"max_carrier", max_carrier},
             {"pass", all},
             {"criteria", criteria}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.name
                << " (" << r.cases << " checks)\n";
      if (!r.pass) std::cout << "   " << r.detail << "\n";
    }
    std::cout << "suite: " << (all ? "PASS" : "FAIL") << "\n";
  }
  return all ? kExitPass : kExitFail;
}

int cmd_cocountable_demo(bool as_json) {
  const CocoWitnessReport report = coco_non_topology_witness();
  const bool ok = report.fact_a && report.fact_b;

  if (as_json) {
    json out{{"schema", "1"},
             {"command", "cocountable-demo"},
             {"fact_a", report.fact_a},
             {"fact_b", report.fact_b},
             {"conclusion", report.conclusion},
             {"detail_a", report.detail_a},
             {"detail_b", report.detail_b},
             {"detail_c", report.detail_c},
             {"note", report.fragment_note}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "cocountable demo: countable-or-cocountable sets on an "
                 "uncountable ground set\n";
    std::cout << "fact (a) " << (report.fact_a ? "PASS" : "FAIL") << ": "
              << report.detail_a << "\n";
    std::cout << "fact (b) " << (report.fact_b ? "PASS" : "FAIL") << ": "
              << report.detail_b << "\n";
    std::cout << "fact (c): " << report.detail_c << "\n";
    std::cout << "conclusion: " << report.conclusion << "\n";
    std::cout << "note: " << report.fragment_note << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite verification kernel for measurable-function models"};
  app.require_subcommand(1);

  long long cap_override = 0;
  app.add_option("--cap", cap_override,
                 "override the enumeration caps (items per sweep)");

  // theory check <theory> <algebra>
  auto* theory = app.add_subcommand("theory", "theory operations");
  theory->require_subcommand(1);
  auto* theory_check = theory->add_subcommand("check", "check an algebra against a theory");
  std::string theory_path, algebra_path;
  bool tc_json = false;
  theory_check->add_option("theory", theory_path, "theory DSL file")->required();
  theory_check->add_option("algebra", algebra_path, "algebra JSON file")->required();
  theory_check->add_flag("--json", tc_json, "emit JSON");

  // borel <topology>
  auto* borel_cmd = app.add_subcommand("borel", "Borel sigma-algebra of a finite space");
  std::string topology_path;
  bool b_json = false;
  borel_cmd->add_option("space", topology_path, "topology JSON file")->required();
  borel_cmd->add_flag("--json", b_json, "emit JSON");

  // meas verify <space> <topalgebra> <theory>
  auto* meas = app.add_subcommand("meas", "measurable-function spaces");
  meas->require_subcommand(1);
  auto* meas_verify = meas->add_subcommand(
      "verify", "verify that Meas(X,Y) is a model of the theory");
  std::string space_path, topalg_path, mv_theory_path;
  bool mv_json = false;
  meas_verify->add_option("space", space_path, "measurable-space JSON file")->required();
  meas_verify->add_option("topalgebra", topalg_path, "topological-algebra JSON file")->required();
  meas_verify->add_option("theory", mv_theory_path, "theory DSL file")->required();
  meas_verify->add_flag("--json", mv_json, "emit JSON");

  // suite
  auto* suite = app.add_subcommand("suite", "run the acceptance property suites");
  int max_carrier = 3;
  bool s_json = false;
  suite->add_option("--max-carrier", max_carrier, "largest carrier swept (1..4)");
  suite->add_flag("--json", s_json, "emit JSON");

  // cocountable demo
  auto* coco = app.add_subcommand("cocountable", "countable/cocountable family");
  coco->require_subcommand(1);
  auto* coco_demo = coco->add_subcommand("demo", "print the non-topology witness report");
  bool c_json = false;
  coco_demo->add_flag("--json", c_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (cap_override > 0) {
      Caps caps = global_caps();
      caps.family_max = cap_override;
      caps.function_space_max = cap_override;
      caps.model_check_max_states = cap_override;
      set_global_caps(caps);
    }
    if (theory_check->parsed()) {
      return cmd_theory_check(theory_path, algebra_path, tc_json);
    }
    if (borel_cmd->parsed()) return cmd_borel(topology_path, b_json);
    if (meas_verify->parsed()) {
      return cmd_meas_verify(space_path, topalg_path, mv_theory_path, mv_json);
    }
    if (suite->parsed()) return cmd_suite(max_carrier, s_json);
    if (coco_demo->parsed()) return cmd_cocountable_demo(c_json);
    std::cerr << "error: no command\n";
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
