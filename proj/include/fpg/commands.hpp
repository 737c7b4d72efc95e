#pragma once

#include "fpg/suites.hpp"

#include <string>

namespace fpg {

// exit codes shared by the command line and the Python module
enum Exit { kOk = 0, kSuiteFailed = 1, kFactorDomain = 2, kNotComposable = 3, kLeafDomain = 4, kBadInput = 5 };

struct CommandError : std::runtime_error {
  int code;
  json report;
  CommandError(int c, json r) : std::runtime_error(r.value("message", "")), code(c), report(std::move(r)) {}
};

// each command maps a JSON input to a JSON output, or throws CommandError
json cmd_factor(const json& in, const std::string& mode);
json cmd_chart(const std::string& op, const json& in);
json cmd_groupoid(const std::string& op, const std::string& model, const json& in, bool cross, const SuiteConfig& c);
json cmd_leaf(const std::string& op, const std::string& model, const json& in);
// recorded commands with their expected output
RunReport verify_fixture(const json& in, const SuiteConfig& c);

struct CommandResult {
  int code;
  json out;
};
// dispatch by name; every library error becomes an exit code and an error record
CommandResult run_command(const std::string& command, const std::string& op, const std::string& model,
                          const std::string& mode, bool cross, const SuiteConfig& c, const json& in);

}  // namespace fpg
