#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>

#include "hgs/error.hpp"
#include "hgs/groupspec.hpp"
#include "report.hpp"

namespace hgs::cli {

std::optional<std::uint64_t> node_budget_from_env() {
  const char* raw = std::getenv("HG_NODE_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
    throw InvalidArgument("HG_NODE_BUDGET must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

namespace {

std::string subgroup_label(const EnumerateRequest& request) {
  switch (request.choice) {
    case SubgroupChoice::Galois: return "1";
    case SubgroupChoice::PointStabilizer: return "stabilizer of point 0";
    case SubgroupChoice::Complement: return "complement";
    case SubgroupChoice::Generators: return request.generators;
  }
  return {};
}

}  // namespace

ExtensionProblem make_problem(const EnumerateRequest& request) {
  const BuiltGroup built = build_group(request.expression);
  const FiniteGroup& g = built.group;
  switch (request.choice) {
    case SubgroupChoice::Galois: return ExtensionProblem::galois(g);
    case SubgroupChoice::PointStabilizer: return ExtensionProblem::point_stabilizer(g);
    case SubgroupChoice::Complement:
      if (!built.complement) {
        throw InvalidArgument("--complement needs an SD(...) or Hol(...) expression");
      }
      return ExtensionProblem(g, *built.complement, "(" + g.name() + ", complement)");
    case SubgroupChoice::Generators:
      return ExtensionProblem(g, parse_subgroup(g, request.generators),
                              "(" + g.name() + ", " + request.generators + ")");
  }
  throw InvalidArgument("no subgroup selected");
}

std::string cmd_enumerate(const EnumerateRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  const ExtensionProblem problem = make_problem(request);
  const ClassificationReport report = classify(problem, request.engine);
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const ReportDocument doc = make_document(report, render(parse_group_expr(request.expression)),
                                           subgroup_label(request), request.engine, elapsed);
  if (request.json) return to_json(doc, request.canonical).dump(2) + "\n";
  return to_text(doc, request.canonical);
}

Outcome run(const std::vector<std::string>& args) {
  Outcome outcome;
  std::ostringstream out, err;

  CLI::App app{"Hopf-Galois structures of finite group extensions", "hgs"};
  app.require_subcommand(1);

  EnumerateRequest request;
  bool galois = false, stabilizer = false, complement = false;
  std::string subgroup;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate the structures of (G, G')");
  enumerate->add_option("group", request.expression, "group expression, e.g. \"S(4)\"")->required();
  auto* o_galois = enumerate->add_flag("--galois", galois, "G' = 1");
  auto* o_stab = enumerate->add_flag("--stabilizer-of-point", stabilizer,
                                     "G' = stabilizer of point 0 in the natural action");
  auto* o_comp = enumerate->add_flag("--complement", complement, "G' = complement of SD/Hol");
  auto* o_sub = enumerate->add_option("--subgroup", subgroup, "G' = gens[...] in the natural action");
  o_galois->excludes(o_stab, o_comp, o_sub);
  o_stab->excludes(o_comp, o_sub);
  o_comp->excludes(o_sub);
  enumerate->add_flag("--json", request.json, "JSON output");
  enumerate->add_flag("--canonical", request.canonical, "omit timing and worker-dependent fields");
  enumerate->add_option("--workers", request.engine.workers, "search threads")
      ->check(CLI::Range(1u, 256u));
  enumerate->add_option("--degree-cap", request.engine.degree_cap, "largest degree to search")
      ->check(CLI::Range(std::size_t{2}, kDefaultDegreeCap));

  std::string fixture;
  std::optional<std::string> n_expression;
  bool catalog_json = false;
  auto* catalog = app.add_subcommand("catalog", "reproduce the stored example fixtures");
  catalog->add_option("name", fixture, "fixture name or \"all\"")->required();
  catalog->add_option("--n", n_expression, "group N for example5 (default S(3))");
  catalog->add_flag("--json", catalog_json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    outcome.exit_code = code == 0 ? kExitOk : kExitError;
    outcome.out = out.str();
    outcome.err = err.str();
    return outcome;
  }

  try {
    if (enumerate->parsed()) {
      if (galois) request.choice = SubgroupChoice::Galois;
      else if (stabilizer) request.choice = SubgroupChoice::PointStabilizer;
      else if (complement) request.choice = SubgroupChoice::Complement;
      else if (!subgroup.empty()) {
        request.choice = SubgroupChoice::Generators;
        request.generators = subgroup;
      } else {
        throw InvalidArgument(
            "choose G' with --galois, --stabilizer-of-point, --complement or --subgroup");
      }
      if (auto budget = node_budget_from_env()) request.engine.node_budget = *budget;
      outcome.out = cmd_enumerate(request);
    } else {
      const CatalogResult result = cmd_catalog(fixture, n_expression, catalog_json);
      outcome.out = result.text;
      if (!result.ok) {
        outcome.exit_code = kExitError;
        outcome.err = "catalog: observed values differ from the stored expectations\n";
      }
    }
  } catch (const ParseError& e) {
    outcome = Outcome{kExitError, {}, std::string("parse error at ") + e.what() + "\n"};
  } catch (const NotNormalClosure& e) {
    outcome = Outcome{kExitNotNormalClosure, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const LimitExceeded& e) {
    outcome = Outcome{kExitLimit, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    outcome = Outcome{kExitError, {}, std::string("error: ") + e.what() + "\n"};
  }
  return outcome;
}

}  // namespace hgs::cli
