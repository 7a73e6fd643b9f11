#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "idem/characters.hpp"
#include "idem/measure.hpp"

namespace idem {

using json = nlohmann::json;

inline constexpr const char* kScenarioSchema = "idem-scenario/1";

enum class ErrorCategory { Parse, Schema, Reference, Precondition, Internal };

const char* to_string(ErrorCategory c);
/// Process exit code for a failure of this category (0 and 1 are success and
/// "ran but a check failed").
int exit_code(ErrorCategory c);

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(ErrorCategory category, std::string field, const std::string& message)
      : std::runtime_error(message), category_(category), field_(std::move(field)) {}
  ErrorCategory category() const { return category_; }
  const std::string& field() const { return field_; }
  json to_json() const;

 private:
  ErrorCategory category_;
  std::string field_;
};

struct RunOptions {
  std::optional<double> tolerance;
  std::optional<std::size_t> max_iterations;
  std::optional<unsigned> grid;
  std::optional<std::string> only;
};

struct RunResult {
  json report;
  bool ok = true;
};

/// Group from a construction string ("S5", "C3xC3", "Q8", ...) or an object
/// with one of construct / permutations / table / semidirect.
GroupPtr parse_group(const json& spec, const std::string& field = "group");

/// Parses and runs one scenario. `task` overrides (and must agree with) the
/// scenario's own task tag when both are present. Throws ScenarioError.
RunResult run_scenario(const json& scenario, const std::string& task, const RunOptions& options = {});
/// Reads a file and runs it; parse failures become ErrorCategory::Parse.
RunResult run_scenario_file(const std::string& path, const std::string& task, const RunOptions& options = {});

/// Flattened key/value rendering of a report.
std::string render_table(const json& report);

// serialization helpers
json to_json(const CycloScalar& z);
json to_json(const Subgroup& k);
json to_json(const Character& rho);
json to_json(const Measure& mu);
json to_json(const FloatMeasure& mu, const GroupTable& g);

}  // namespace idem
