// fpg: command-line workbench over the flag groupoid library
#include "fpg/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace fpg;

namespace {

json read_input(const std::string& path, const std::string& inline_json) {
  if (!inline_json.empty()) return json::parse(inline_json);
  if (path.empty()) return json::object();
  if (path == "-") return json::parse(std::cin);
  std::ifstream f(path);
  if (!f) throw JsonError("cannot open " + path);
  return json::parse(f);
}

void write_output(const std::string& path, const json& out) {
  std::string s = out.dump(2);
  if (path.empty() || path == "-") {
    std::cout << s << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw JsonError("cannot write " + path);
  f << s << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on flag groupoids of SL(r+1)"};
  app.require_subcommand(1);
  SuiteConfig cfg;
  std::string json_in, json_out, model = "gamma", inline_json;
  app.add_option("--rank", cfg.rank, "rank r of SL(r+1)")->check(CLI::Range(1, 6));
  app.add_option("--n", cfg.n, "half arity of the groupoid, or number of cells")->check(CLI::Range(1, 6));
  app.add_option("--samples", cfg.samples, "samples per suite")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--model", model, "groupoid model")->check(CLI::IsMember({"gamma", "c2n", "fot", "gdbu", "gmn", "tFn"}));
  app.add_option("--json-in", json_in, "input file, - for stdin");
  app.add_option("--json", inline_json, "input given inline");
  app.add_option("--json-out", json_out, "output file (default stdout)");

  std::string mode = "gauss", op, suite;
  bool cross = false;
  auto* factor = app.add_subcommand("factor", "Gauss and Bruhat factorizations");
  factor->add_option("--mode", mode)->check(CLI::IsMember({"gauss", "bruhat+", "bruhat-"}));
  auto* chart = app.add_subcommand("chart", "Bott-Samelson and Lusztig charts");
  chart->add_option("op", op)->required()->check(CLI::IsMember({"lusztig", "invert", "bs", "coords", "tau"}));
  auto* groupoid = app.add_subcommand("groupoid", "structure maps in any model");
  groupoid->add_option("op", op)->required()->check(CLI::IsMember({"source", "target", "unit", "inverse", "mul", "sample"}));
  groupoid->add_flag("--cross-check", cross, "redo the operation in Gamma and compare");
  auto* leaf = app.add_subcommand("leaf", "symplectic leaf classification");
  leaf->add_option("op", op)->required()->check(CLI::IsMember({"classify", "same-leaf", "dim", "fiber"}));
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  names.push_back("fixture");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(names));
  for (auto* s : {factor, chart, groupoid, leaf, verify}) s->fallthrough();

  CLI11_PARSE(app, argc, argv);

  std::string command = *factor ? "factor" : *chart ? "chart" : *groupoid ? "groupoid" : *leaf ? "leaf" : "verify";
  if (command == "verify") op = suite;
  json in;
  try {
    in = read_input(json_in, inline_json);
  } catch (const std::exception& e) {
    write_output(json_out, {{"error", "BadInput"}, {"message", e.what()}});
    return kBadInput;
  }
  auto res = run_command(command, op, model, mode, cross, cfg, in);
  try {
    write_output(json_out, res.out);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  }
  return res.code;
}
