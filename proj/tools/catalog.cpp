#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "hgs/automorphisms.hpp"
#include "hgs/error.hpp"
#include "hgs/groupspec.hpp"
#include "hgs/isomorphism.hpp"

namespace hgs::cli {

namespace {

struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  bool ok() const { return expected == observed; }
};

struct Case {
  std::string label;
  std::vector<Check> checks;
};

struct Fixture {
  std::string name;
  std::vector<Case> cases;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// "C(8) x2, D(4) x2" style summary of the structure types.
std::string type_summary(const ClassificationReport& r) {
  std::map<std::string, std::size_t> counts;
  for (const auto& s : r.structures) ++counts[s.structure.type_name];
  std::string out;
  for (const auto& [type, count] : counts) {
    if (!out.empty()) out += ", ";
    out += type + " x" + std::to_string(count);
  }
  return out.empty() ? "none" : out;
}

bool has_minimal_of_type(const ClassificationReport& r, const std::string& type) {
  return std::any_of(r.structures.begin(), r.structures.end(), [&](const auto& s) {
    return s.minimal && s.structure.type_name == type;
  });
}

struct Classified {
  ExtensionProblem problem;
  ClassificationReport report;
};

Classified classify_expr(const std::string& expr, SubgroupChoice choice) {
  EnumerateRequest request;
  request.expression = expr;
  request.choice = choice;
  if (auto budget = node_budget_from_env()) request.engine.node_budget = *budget;
  ExtensionProblem problem = make_problem(request);
  ClassificationReport report = classify(problem, request.engine);
  return {std::move(problem), std::move(report)};
}

Fixture example1() {
  Fixture f{"example1", {}};
  const std::pair<const char*, const char*> cases[] = {
      {"S(2)", "C(2)"}, {"S(3)", "C(3)"}, {"S(4)", "E(2,2)"}};
  for (const auto& [expr, type] : cases) {
    const auto c = classify_expr(expr, SubgroupChoice::PointStabilizer);
    f.cases.push_back({c.report.problem,
                       {{"structure_count", "1", std::to_string(c.report.structures.size())},
                        {"minimal_count", "1", std::to_string(c.report.minimal_count)},
                        {"types", std::string(type) + " x1", type_summary(c.report)}}});
  }
  const auto s5 = classify_expr("S(5)", SubgroupChoice::PointStabilizer);
  f.cases.push_back({s5.report.problem,
                     {{"structure_count", "0", std::to_string(s5.report.structures.size())},
                      {"normal_complement_count", "0",
                       std::to_string(s5.report.normal_complement_count)}}});
  return f;
}

Fixture example2() {
  Fixture f{"example2", {}};
  const auto c8 = classify_expr("C(8)", SubgroupChoice::Galois);
  const bool all_obstructed = std::all_of(c8.report.structures.begin(), c8.report.structures.end(),
                                          [](const auto& s) { return s.obstruction.has_value(); });
  f.cases.push_back({c8.report.problem,
                     {{"structure_count", "6", std::to_string(c8.report.structures.size())},
                      {"types", "C(8) x2, D(4) x2, Q(8) x2", type_summary(c8.report)},
                      {"minimal_count", "0", std::to_string(c8.report.minimal_count)},
                      {"every structure has a characteristic obstruction", "yes",
                       yes_no(all_obstructed)}}});
  for (const char* expr : {"D(3)", "D(5)"}) {
    const auto d = classify_expr(expr, SubgroupChoice::Galois);
    f.cases.push_back({d.report.problem,
                       {{"minimal_count", "0", std::to_string(d.report.minimal_count)}}});
  }
  return f;
}

Fixture example3() {
  Fixture f{"example3", {}};
  const auto d4 = classify_expr("D(4)", SubgroupChoice::PointStabilizer);
  bool cyclic_complement = false;
  for (const auto& m : normal_complements(d4.problem)) {
    cyclic_complement = cyclic_complement || iso_type(m.as_group()) == "C(4)";
  }
  f.cases.push_back({d4.report.problem,
                     {{"cyclic normal complement", "yes", yes_no(cyclic_complement)},
                      {"minimal_count", "0", std::to_string(d4.report.minimal_count)},
                      {"types", "C(4) x1, E(2,2) x1", type_summary(d4.report)}}});
  return f;
}

Fixture example4() {
  Fixture f{"example4", {}};
  struct Row {
    const char* expr;
    const char* order;
    const char* type;
  };
  const Row rows[] = {
      {"Hol(E(2,2))", "24", "E(2,2)"},
      {"SD(E(2,2), matgrp(2,2,[[[1,1],[1,0]]]))", "12", "E(2,2)"},
      {"SD(E(2,3), matgrp(2,3,[[[1,1,1],[1,1,0],[1,0,0]]]))", "56", "E(2,3)"},
      {"SD(E(3,2), matgrp(3,2,[[[0,1],[-1,0]]]))", "36", "E(3,2)"},
  };
  for (const auto& row : rows) {
    const auto c = classify_expr(row.expr, SubgroupChoice::Complement);
    const BuiltGroup built = build_group(row.expr);
    const ExtensionProblem prob(built.group, *built.complement);
    const CosetAction act(prob);
    const bool certified = is_minimal(complement_structure(act, *built.normal));
    f.cases.push_back({c.report.problem,
                       {{"group order", row.order, std::to_string(c.report.group_order)},
                        {std::string("minimal structure of type ") + row.type, "yes",
                         yes_no(has_minimal_of_type(c.report, row.type))},
                        {"N structure minimal", "yes", yes_no(certified)}}});
  }
  f.cases.push_back({"Hol(E(2,2)) vs S(4)",
                     {{"isomorphic", "yes",
                       yes_no(are_isomorphic(build_group("Hol(E(2,2))").group, symmetric(4)))},
                      {"holomorph certificate", "yes",
                       yes_no(lemma1_certificate(elementary_abelian(2, 2)))}}});
  return f;
}

Fixture example5(const std::string& n_expr) {
  Fixture f{"example5", {}};
  const FiniteGroup n = build_group(n_expr).group;
  const Holomorph hol = holomorph(n);
  const GammaSubgroups gamma = gamma_subgroups(hol);
  const bool distinct = gamma.gamma1.members() != gamma.gamma2.members();
  f.cases.push_back(
      {"N = " + n.name(),
       {{"|Hol(N)|", std::to_string(n.order() * hol.aut.tables.size()),
         std::to_string(hol.group().order())},
        {"gamma1 normal", "yes", yes_no(is_normal(gamma.gamma1))},
        {"gamma2 normal", "yes", yes_no(is_normal(gamma.gamma2))},
        {"gamma2 isomorphic to N", "yes", yes_no(are_isomorphic(gamma.gamma2.as_group(), n))},
        {"gamma1 != gamma2", yes_no(!n.is_abelian()), yes_no(distinct)},
        {"conjugation identity", "holds",
         gamma2_conjugation_counterexample(hol) ? "fails" : "holds"}}});
  return f;
}

Fixture run_fixture(const std::string& name, const std::optional<std::string>& n_expression) {
  if (name == "example1") return example1();
  if (name == "example2") return example2();
  if (name == "example3") return example3();
  if (name == "example4") return example4();
  if (name == "example5") return example5(n_expression.value_or("S(3)"));
  throw InvalidArgument("unknown fixture '" + name + "'; expected example1..example5 or all");
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"example1", "example2", "example3", "example4",
                                              "example5"};
  return names;
}

CatalogResult cmd_catalog(const std::string& name, const std::optional<std::string>& n_expression,
                          bool json) {
  std::vector<Fixture> fixtures;
  if (name == "all") {
    for (const auto& n : catalog_names()) fixtures.push_back(run_fixture(n, n_expression));
  } else {
    fixtures.push_back(run_fixture(name, n_expression));
  }

  CatalogResult result;
  for (const auto& f : fixtures) {
    for (const auto& c : f.cases) {
      for (const auto& check : c.checks) result.ok = result.ok && check.ok();
    }
  }

  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : fixtures) {
      nlohmann::ordered_json jf;
      jf["name"] = f.name;
      auto cases = nlohmann::ordered_json::array();
      for (const auto& c : f.cases) {
        auto checks = nlohmann::ordered_json::array();
        for (const auto& check : c.checks) {
          checks.push_back({{"check", check.name},
                            {"expected", check.expected},
                            {"observed", check.observed},
                            {"ok", check.ok()}});
        }
        cases.push_back({{"case", c.label}, {"checks", std::move(checks)}});
      }
      jf["cases"] = std::move(cases);
      arr.push_back(std::move(jf));
    }
    j["fixtures"] = std::move(arr);
    j["ok"] = result.ok;
    result.text = j.dump(2) + "\n";
    return result;
  }

  std::ostringstream out;
  for (const auto& f : fixtures) {
    out << f.name << "\n";
    for (const auto& c : f.cases) {
      out << "  " << c.label << "\n";
      for (const auto& check : c.checks) {
        out << "    " << (check.ok() ? "ok    " : "FAIL  ") << check.name << ": expected "
            << check.expected << ", observed " << check.observed << "\n";
      }
    }
  }
  out << (result.ok ? "all checks passed\n" : "some checks FAILED\n");
  result.text = out.str();
  return result;
}

}  // namespace hgs::cli
