#pragma once

#include <optional>
#include <string>
#include <vector>

namespace idem {

struct FixtureResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::optional<std::string> only;
  /// Fixture whose character input is deliberately swapped (negative control).
  std::optional<std::string> corrupt;
  unsigned grid = 64;
};

std::vector<std::string> suite_fixture_ids();
/// Runs the worked-example fixtures in a fixed order. Throws
/// PreconditionError for an unknown --only id.
std::vector<FixtureResult> run_suite(const SuiteOptions& options = {});

}  // namespace idem
