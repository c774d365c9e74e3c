#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohera/stability.hpp"

namespace cohera::runner {

using json = nlohmann::json;

inline constexpr const char* kEngineVersion = "cohera 0.1.0";
inline constexpr const char* kScenarioFormat = "scn/1";
inline constexpr const char* kCacheEnv = "COHERA_CACHE_DIR";

/// Rejected scenario text: syntax (line/column) or an unresolvable block.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& block, const std::string& what, int line = 0, int column = 0);
  const std::string& block() const { return block_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string block_;
  int line_;
  int column_;
};

struct RunOptions {
  std::filesystem::path out = ".";
  std::optional<std::uint32_t> characteristic;
  int jobs = 1;
  bool use_cache = true;
};

struct TaskSpec {
  std::string kind;
  json args = json::object();
};

struct OutputOptions {
  bool json = true;
  bool markdown = true;
  bool csv = true;
  std::string stem;
};

struct Scenario {
  std::string name;
  json source;
  RingPtr ring;
  std::map<std::string, SubmoduleBasis> ideals;
  std::map<std::string, FPModule> modules;
  FunctorExpression functor;
  FamilySpec family;
  std::vector<std::string> family_ideals;
  GridBox box;
  std::vector<TaskSpec> tasks;
  OutputOptions output;
};

/// Parses and resolves a scenario; every failure is a ScenarioError.
Scenario load_scenario(const std::string& text, const RunOptions& options);

struct RunResult {
  int exit_code = 0;
  json report;
  json timings;
  std::string markdown;
  /// One CSV per lambda grid, keyed by file suffix.
  std::map<std::string, std::string> csv;
  std::vector<std::string> failures;
};

RunResult run_scenario(const Scenario& s, const RunOptions& options);

/// Loads, runs and writes report files; messages go to err. Returns the exit status.
int run_scenario_file(const std::filesystem::path& path, const RunOptions& options, std::ostream& out,
                      std::ostream& err);

void print_builtins(std::ostream& out);

}  // namespace cohera::runner
