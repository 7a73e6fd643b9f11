// Command-line front end: one scenario (or built-in fixture run) per call.
#include <iostream>

#include <CLI11.hpp>

#include "idem/error.hpp"
#include "idem/scenario.hpp"
#include "idem/suite.hpp"

namespace {

struct Flags {
  std::string scenario;
  std::string group;
  bool json = false;
  unsigned grid = 0;
  double tol = 0.0;
  std::size_t max_iter = 0;
  std::string only;
  std::string corrupt;
  unsigned m = 0, n = 0, max_power = 0;
};

int report_error(const idem::ScenarioError& e, bool as_json) {
  if (as_json) {
    std::cout << e.to_json().dump(2) << "\n";
  } else {
    std::cerr << "error [" << idem::to_string(e.category()) << "] " << e.what() << "\n";
  }
  return idem::exit_code(e.category());
}

int print_suite(const std::vector<idem::FixtureResult>& results, bool as_json) {
  bool ok = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    out.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (as_json) {
    std::cout << nlohmann::json{{"task", "paper-suite"}, {"fixtures", out}, {"passed", ok}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::printf("%s  %-26s %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.detail.c_str(), r.seconds);
    }
    std::printf("%zu/%zu fixtures passed\n",
                static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                       [](const auto& r) { return r.passed; })),
                results.size());
  }
  return ok ? 0 : 1;
}

int run(const std::string& task, const Flags& f) {
  idem::RunOptions opts;
  if (f.grid) opts.grid = f.grid;
  if (f.tol > 0) opts.tolerance = f.tol;
  if (f.max_iter) opts.max_iterations = f.max_iter;
  if (!f.only.empty()) opts.only = f.only;
  try {
    if (task == "paper-suite" && f.scenario.empty()) {
      idem::SuiteOptions so;
      if (!f.only.empty()) so.only = f.only;
      if (!f.corrupt.empty()) so.corrupt = f.corrupt;
      if (f.grid) so.grid = f.grid;
      try {
        return print_suite(idem::run_suite(so), f.json);
      } catch (const idem::PreconditionError& e) {
        throw idem::ScenarioError(idem::ErrorCategory::Precondition, "--only", e.what());
      }
    }
    idem::RunResult r;
    if (!f.scenario.empty()) {
      r = idem::run_scenario_file(f.scenario, task, opts);
    } else {
      nlohmann::json s{{"schema", idem::kScenarioSchema}, {"task", task}, {"params", nlohmann::json::object()}};
      if (!f.group.empty()) s["group"] = f.group;
      if (f.m) s["params"]["m"] = f.m;
      if (f.n) s["params"]["n"] = f.n;
      if (f.max_power) s["params"]["max_power"] = f.max_power;
      if (task != "group" && task != "free-walk" && task != "example33") {
        throw idem::ScenarioError(idem::ErrorCategory::Schema, "--scenario",
                                  "--scenario: the '" + task + "' command needs a scenario file");
      }
      if (task == "group" && f.group.empty()) {
        throw idem::ScenarioError(idem::ErrorCategory::Schema, "--group",
                                  "--group: give a construction such as S4 or a --scenario file");
      }
      r = idem::run_scenario(s, task, opts);
    }
    std::cout << (f.json ? r.report.dump(2) + "\n" : idem::render_table(r.report));
    return r.ok ? 0 : 1;
  } catch (const idem::ScenarioError& e) {
    return report_error(e, f.json);
  } catch (const idem::InternalCheckError& e) {
    return report_error(idem::ScenarioError(idem::ErrorCategory::Internal, task, e.what()), f.json);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contractive idempotents on finite groups: commutation, power limits, unit groups"};
  app.require_subcommand(1);
  Flags f;
  std::string chosen;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"group", "Summarize a group and its named subgroups"},
      {"classify", "Classify an idempotent measure"},
      {"commute", "Decide whether two idempotents rho m_K commute"},
      {"limit", "Limit of powers of a product of idempotents"},
      {"stromberg", "Convergence or coset obstruction for a probability"},
      {"measure-groups", "N_{K,rho}, G_{K,rho} and products of unit groups"},
      {"free-walk", "Decay of m_Cm * m_Cn powers in the free product"},
      {"example33", "Torus product versus Haar measure on SO(3)"},
      {"paper-suite", "Run every worked-example fixture"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--scenario", f.scenario, "Scenario JSON file");
    sub->add_flag("--json", f.json, "Print the JSON report");
    sub->add_option("--grid", f.grid, "Quadrature points per axis")->check(CLI::Range(2u, 2048u));
    sub->add_option("--tol", f.tol, "Iteration tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", f.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
    sub->add_option("--only", f.only, "Run a single fixture");
    if (name == "group") sub->add_option("--group", f.group, "Construction such as S4, D4, C3xC3, Q8");
    if (name == "paper-suite") sub->add_option("--corrupt", f.corrupt, "Swap a fixture's character (negative control)");
    if (name == "free-walk") {
      sub->add_option("--m", f.m, "Order of the first factor")->check(CLI::Range(2u, 127u));
      sub->add_option("--n", f.n, "Order of the second factor")->check(CLI::Range(2u, 127u));
      sub->add_option("--max-power", f.max_power, "Highest power")->check(CLI::Range(1u, 64u));
    }
    sub->callback([&chosen, name = name] { chosen = name; });
  }
  CLI11_PARSE(app, argc, argv);
  return run(chosen, f);
}
