// JSON strings in and out; the Python package converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "tdlc/davis.hpp"
#include "tdlc/error.hpp"
#include "tdlc/euler.hpp"
#include "tdlc/io.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace tdlc;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::exception<Error>(m, "TdlcError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const auto type = py::module_::import("tdlc._core").attr("TdlcError");
      py::set_error(type, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));

  m.def("homology", [](const std::string& doc) { return homology(io::parse_complex(parse(doc))); });
  m.def("cohomology_compact", [](const std::string& doc) { return cohomology_compact(io::parse_complex(parse(doc))); });
  m.def("relative_cohomology", [](const std::string& k, const std::string& l) {
    return relative_cohomology(io::parse_complex(parse(k)), io::parse_complex(parse(l)));
  });

  m.def("graph_invariants", [](const std::string& doc) {
    return json(graph_invariants(io::parse_graph(parse(doc)))).dump();
  });

  m.def("euler_characteristic", [](const std::string& doc) {
    return json(euler_characteristic(io::parse_graph_of_groups(parse(doc)))).dump();
  });
  m.def("unimodular", [](const std::string& doc) { return unimodularity_check(io::parse_graph_of_groups(parse(doc))); });
  m.def("tree_action_cohomology", [](const std::string& gog, const std::string& rep) {
    const auto g = io::parse_graph_of_groups(parse(gog));
    return json(tree_action_cohomology(g, io::parse_representation(g, parse(rep)))).dump();
  });
  m.def("aut_tree_chi", [](std::size_t d) { return json(aut_tree_chi(d)).dump(); });

  m.def("chevalley_chi", [](const std::string& type, long q) {
    return json(chevalley_chi(CartanMatrix::preset(type), q)).dump();
  });

  m.def("davis_verdict", [](const std::string& doc, bool skip_empty_t, std::size_t jobs) {
    py::gil_scoped_release release;
    return json(davis_verdict(io::parse_coxeter_matrix(parse(doc)), {skip_empty_t, jobs})).dump();
  }, py::arg("doc"), py::arg("skip_empty_t") = false, py::arg("jobs") = 1);
}
