#include "fpg/commands.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fpg;

// JSON crosses the boundary as text; the Python side wraps it in dicts
PYBIND11_MODULE(_core, m) {
  m.doc() = "exact computations on flag groupoids of SL(r+1)";

  m.def(
      "run",
      [](const std::string& command, const std::string& op, const std::string& model, const std::string& mode,
         bool cross, int rank, int n, int samples, std::uint64_t seed, const std::string& input) {
        SuiteConfig c{rank, n, samples, seed};
        json in = input.empty() ? json::object() : json::parse(input);
        CommandResult res;
        {
          py::gil_scoped_release release;
          res = run_command(command, op, model, mode, cross, c, in);
        }
        return std::make_pair(res.code, res.out.dump());
      },
      py::arg("command"), py::arg("op") = "", py::arg("model") = "gamma", py::arg("mode") = "gauss",
      py::arg("cross") = false, py::arg("rank") = 2, py::arg("n") = 1, py::arg("samples") = 20, py::arg("seed") = 1,
      py::arg("input") = "");

  m.def("suite_names", &suite_names);
  m.def("leaf_dim", [](int rank, const std::vector<std::vector<int>>& words) {
    std::vector<WeylElt> ws;
    for (auto w : words) {
      for (auto& i : w) --i;
      ws.push_back(WeylElt::from_word(rank, w));
    }
    return leaf_dim(ws);
  });
  m.def("reduced_word", [](int rank, std::vector<int> word) {
    for (auto& i : word) --i;
    WeylElt w = WeylElt::from_word(rank, word);
    std::vector<int> out;
    for (int i : w.word()) out.push_back(i + 1);
    return out;
  });
}
