#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace hgs::cli {

ReportDocument make_document(const ClassificationReport& report, std::string group,
                             std::string subgroup, const EngineOptions& options, double elapsed_ms) {
  ReportDocument doc;
  doc.group = std::move(group);
  doc.subgroup = std::move(subgroup);
  doc.group_order = report.group_order;
  doc.degree = report.degree;
  for (const auto& entry : report.structures) {
    StructureEntry s;
    s.type = entry.structure.type_name;
    s.generators = entry.structure.generator_strings();
    s.minimal = entry.minimal;
    s.subhopf_count = entry.lattice.size();
    if (entry.obstruction) s.obstruction_order = entry.obstruction->order();
    s.contained_in_lambda = entry.contained_in_lambda;
    doc.structures.push_back(std::move(s));
  }
  doc.intermediate_count = report.intermediate_count;
  doc.normal_complement_count = report.normal_complement_count;
  doc.normal_complement_bound = report.normal_complement_bound;
  doc.minimal_count = report.minimal_count;
  doc.degree_cap = options.degree_cap;
  doc.node_budget = options.node_budget;
  doc.workers = options.workers;
  doc.nodes = report.engine.nodes;
  doc.candidates = report.engine.candidates;
  doc.orbits = report.engine.orbits;
  doc.elapsed_ms = elapsed_ms;
  return doc;
}

nlohmann::ordered_json to_json(const ReportDocument& doc, bool canonical) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["problem"] = {{"group", doc.group},
                  {"subgroup", doc.subgroup},
                  {"group_order", doc.group_order},
                  {"degree", doc.degree}};
  auto structures = nlohmann::ordered_json::array();
  for (const auto& s : doc.structures) {
    nlohmann::ordered_json e;
    e["type"] = s.type;
    e["generators"] = s.generators;
    e["minimal"] = s.minimal;
    e["subhopf_count"] = s.subhopf_count;
    e["obstruction_order"] = s.obstruction_order ? nlohmann::ordered_json(*s.obstruction_order)
                                                 : nlohmann::ordered_json(nullptr);
    e["contained_in_lambda"] = s.contained_in_lambda;
    structures.push_back(std::move(e));
  }
  j["structures"] = std::move(structures);
  j["stats"] = {{"structure_count", doc.structures.size()},
                {"minimal_count", doc.minimal_count},
                {"intermediate_count", doc.intermediate_count},
                {"normal_complement_count", doc.normal_complement_count},
                {"normal_complement_bound", doc.normal_complement_bound},
                {"no_hopf_galois_structure", doc.structures.empty()}};
  nlohmann::ordered_json engine;
  engine["degree_cap"] = doc.degree_cap;
  engine["node_budget"] = doc.node_budget;
  engine["candidates"] = doc.candidates;
  engine["orbits"] = doc.orbits;
  if (!canonical) {
    engine["workers"] = doc.workers;
    engine["nodes"] = doc.nodes;
    engine["elapsed_ms"] = doc.elapsed_ms;
  }
  j["engine"] = std::move(engine);
  return j;
}

std::string to_text(const ReportDocument& doc, bool canonical) {
  std::ostringstream out;
  out << "problem: G = " << doc.group << ", G' = " << doc.subgroup << "\n";
  out << "order " << doc.group_order << ", degree " << doc.degree << "\n\n";
  if (doc.structures.empty()) {
    out << "no Hopf-Galois structure\n";
  } else {
    std::size_t type_width = 4;
    for (const auto& s : doc.structures) type_width = std::max(type_width, s.type.size());
    out << std::left << std::setw(4) << "#" << std::setw(static_cast<int>(type_width) + 2) << "type"
        << std::setw(9) << "minimal" << std::setw(10) << "sub-Hopf" << "generators\n";
    for (std::size_t i = 0; i < doc.structures.size(); ++i) {
      const auto& s = doc.structures[i];
      std::string gens;
      for (std::size_t k = 0; k < s.generators.size(); ++k) {
        if (k) gens += ", ";
        gens += s.generators[k];
      }
      out << std::setw(4) << i + 1 << std::setw(static_cast<int>(type_width) + 2) << s.type
          << std::setw(9) << (s.minimal ? "yes" : "no") << std::setw(10) << s.subhopf_count << gens
          << "\n";
    }
  }
  out << "\nstructures " << doc.structures.size() << ", minimal " << doc.minimal_count
      << ", intermediate subgroups " << doc.intermediate_count << ", normal complements "
      << doc.normal_complement_count << " (lower bound " << doc.normal_complement_bound << ")\n";
  out << "engine: " << doc.candidates << " candidates in " << doc.orbits << " orbits";
  if (!canonical) {
    out << ", " << doc.nodes << " nodes, " << doc.workers << " worker(s), " << std::fixed
        << std::setprecision(1) << doc.elapsed_ms << " ms";
  }
  out << "\n";
  return out.str();
}

}  // namespace hgs::cli
