#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgs/minimality.hpp"

namespace hgs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotNormalClosure = 2;
inline constexpr int kExitLimit = 3;

struct Outcome {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs `hgs <args...>`. Standard output is only filled on success, so a
/// failing command never leaves a partial report behind.
Outcome run(const std::vector<std::string>& args);

enum class SubgroupChoice { Galois, PointStabilizer, Complement, Generators };

struct EnumerateRequest {
  std::string expression;
  SubgroupChoice choice = SubgroupChoice::Galois;
  std::string generators;  // for SubgroupChoice::Generators
  bool json = false;
  bool canonical = false;
  EngineOptions engine;
};

/// Reads HG_NODE_BUDGET; throws InvalidArgument for a malformed value.
std::optional<std::uint64_t> node_budget_from_env();

ExtensionProblem make_problem(const EnumerateRequest& request);

std::string cmd_enumerate(const EnumerateRequest& request);

/// Fixture names accepted by `catalog`.
const std::vector<std::string>& catalog_names();

struct CatalogResult {
  std::string text;
  bool ok = true;
};

/// Runs one fixture (or "all"); `n_expression` overrides the group used by example5.
CatalogResult cmd_catalog(const std::string& name, const std::optional<std::string>& n_expression,
                          bool json);

}  // namespace hgs::cli
