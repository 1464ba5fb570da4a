#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hilbert_hodge/cli.hpp"
#include "hilbert_hodge/kunneth.hpp"

namespace py = pybind11;
namespace hh = hilbert_hodge;

namespace {

// Python ints are unbounded; GMP values cross the boundary as decimal strings.
py::int_ to_py(const hh::Integer& value) { return py::int_(py::str(value.get_str())); }

hh::Integer from_py(const py::int_& value) {
  return hh::Integer(py::str(value).cast<std::string>());
}

std::string document_json(const hh::cli::RunConfig& config) {
  return hh::dump(hh::to_json(hh::cli::build_document(config)));
}

hh::cli::RunConfig spec_config(hh::cli::Mode mode, int n, const std::vector<int>& m) {
  hh::cli::RunConfig config;
  config.mode = mode;
  config.n = n;
  config.m = m;
  return config;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Hodge numbers of H^k(X, V_m) for Hilbert modular varieties";

  static py::exception<hh::Error> error(mod, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const hh::Error& e) {
      PyErr_SetString(error.ptr(),
                      ("[" + std::string(hh::to_string(e.code())) + "] " + e.what()).c_str());
    }
  });

  mod.def(
      "rank",
      [](int n, const std::vector<int>& m) {
        return to_py(hh::validate_spec(n, m, hh::SpecMode::Engine).rank());
      },
      py::arg("n"), py::arg("m"));

  mod.def(
      "count_N", [](const std::vector<int>& m, long P) { return to_py(hh::count_N(m, P)); },
      py::arg("m"), py::arg("P"), "Number of subsets I with |m_I| + |I| = P.");

  mod.def(
      "table_json",
      [](int n, const std::vector<int>& m, const py::int_& cusps, const py::int_& genus) {
        auto config = spec_config(hh::cli::Mode::Table, n, m);
        config.cusps = from_py(cusps);
        config.genus = from_py(genus);
        return document_json(config);
      },
      py::arg("n"), py::arg("m"), py::arg("cusps"), py::arg("genus"));

  mod.def(
      "sheaf_matrix_json",
      [](int n, const std::vector<int>& m, std::size_t oracle_cap) {
        auto config = spec_config(hh::cli::Mode::SheafMatrix, n, m);
        config.oracle_cap = oracle_cap;
        return document_json(config);
      },
      py::arg("n"), py::arg("m"), py::arg("oracle_cap") = hh::default_oracle_cap());

  mod.def(
      "eisenstein_json",
      [](int n, const std::vector<int>& m, const py::int_& cusps) {
        auto config = spec_config(hh::cli::Mode::Eisenstein, n, m);
        config.cusps = from_py(cusps);
        return document_json(config);
      },
      py::arg("n"), py::arg("m"), py::arg("cusps"));

  mod.def(
      "verify_json",
      [](int max_n, int max_m) {
        hh::cli::RunConfig config;
        config.mode = hh::cli::Mode::Verify;
        config.max_n = max_n;
        config.max_m = max_m;
        return document_json(config);
      },
      py::arg("max_n") = 4, py::arg("max_m") = 3);

  mod.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "hilbert-hodge");
        std::ostringstream out, err;
        const int code = hh::cli::main_entry(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line front end; returns (exit code, stdout, stderr).");
}
