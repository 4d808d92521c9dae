#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgs/minimality.hpp"

namespace hgs::cli {

struct StructureEntry {
  std::string type;
  std::vector<std::string> generators;
  bool minimal = false;
  std::size_t subhopf_count = 0;
  std::optional<std::size_t> obstruction_order;
  bool contained_in_lambda = false;
};

struct ReportDocument {
  std::string group;
  std::string subgroup;
  std::size_t group_order = 0;
  std::size_t degree = 0;
  std::vector<StructureEntry> structures;
  std::size_t intermediate_count = 0;
  std::size_t normal_complement_count = 0;
  std::size_t normal_complement_bound = 0;
  std::size_t minimal_count = 0;

  std::size_t degree_cap = 0;
  std::uint64_t node_budget = 0;
  unsigned workers = 1;
  std::uint64_t nodes = 0;
  std::size_t candidates = 0;
  std::size_t orbits = 0;
  double elapsed_ms = 0;
};

ReportDocument make_document(const ClassificationReport& report, std::string group,
                             std::string subgroup, const EngineOptions& options, double elapsed_ms);

/// Canonical mode drops everything that depends on timing or worker count.
nlohmann::ordered_json to_json(const ReportDocument& doc, bool canonical);
std::string to_text(const ReportDocument& doc, bool canonical);

}  // namespace hgs::cli
