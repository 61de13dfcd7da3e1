#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jacder::cli {

inline constexpr std::array<std::string_view, 15> kCommands = {
    "jac",    "apply",   "bracket",   "div",         "potential",
    "kernel", "decompose", "member",  "commute",     "criterion",
    "centralizer", "basis-decompose", "eigen",       "pair",       "ode"};

enum class OutputFormat { Text, Json };

struct JobSpec {
  std::string command;
  // Expression sources keyed by flag name: "f", "g", "h", "T.P", "T.Q".
  std::map<std::string, std::string> inputs;
  std::optional<int> degree_bound;
  OutputFormat format = OutputFormat::Text;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Solver bound cap from JACDER_MAX_DEGREE, default 32.
int max_degree_cap();

// argv without the program name. "@path" values are replaced by the file's
// contents. Throws Error(UsageError).
JobSpec parse_job(const std::vector<std::string>& args);

// Exit 0 on success, 1 on domain errors, 2 on parse or usage errors. In JSON
// mode errors are reported on stdout as {"error": ..., "message": ...}.
RunResult run(const JobSpec& job);

RunResult run_cli(const std::vector<std::string>& args);

}  // namespace jacder::cli
