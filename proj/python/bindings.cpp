#include "kisin/cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

kisin::Cochar to_cochar(const std::vector<std::vector<long long>> &blocks) {
  std::vector<std::vector<kisin::Integer>> b;
  for (const auto &row : blocks)
    b.emplace_back(row.begin(), row.end());
  return kisin::Cochar::from_blocks(b);
}

py::tuple pack(const kisin::RunResult &r) { return py::make_tuple(r.exit_code, r.output, r.error); }

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semi-module strata of Kisin varieties";
  m.attr("schema_version") = kisin::schema_version;

  m.def(
      "run",
      [](const std::string &command, const std::string &config_json) {
        kisin::RunResult r;
        {
          py::gil_scoped_release release;
          kisin::Json config;
          try {
            config = kisin::Json::parse(config_json);
          } catch (const kisin::Json::exception &e) {
            r = {kisin::exit_invalid, {}, e.what()};
          }
          if (r.error.empty())
            r = kisin::run(command, config);
        }
        return pack(r);
      },
      py::arg("command"), py::arg("config_json"),
      "Run a command on a JSON instance; returns (exit_code, output, error).");

  m.def(
      "run_args",
      [](const std::vector<std::string> &args) {
        kisin::RunResult r;
        {
          py::gil_scoped_release release;
          r = kisin::run_args(args);
        }
        return pack(r);
      },
      py::arg("args"));

  m.def(
      "dominance_leq",
      [](const std::vector<std::vector<long long>> &nu, const std::vector<std::vector<long long>> &mu) {
        try {
          return kisin::dominance_leq(to_cochar(nu), to_cochar(mu));
        } catch (const kisin::InvalidInput &e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("nu"), py::arg("mu"));
}
