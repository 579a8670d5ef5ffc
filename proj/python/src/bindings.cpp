// Thin bindings; big integers and rationals cross as decimal strings and are
// converted in chargen/__init__.py.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chargen/acceptance.hpp"
#include "chargen/calogero.hpp"
#include "chargen/cli.hpp"
#include "chargen/errors.hpp"
#include "chargen/genfun.hpp"
#include "chargen/kostant.hpp"
#include "chargen/multiplicities.hpp"
#include "chargen/poly_text.hpp"

namespace py = pybind11;
using namespace chargen;

namespace {

Weight weight(const std::vector<int>& v) {
  if (v.size() != 3) throw py::value_error("a weight has three Dynkin labels");
  return {v[0], v[1], v[2]};
}

GenFun named(const std::string& which) {
  if (which == "G") return build_G();
  if (which == "E") return build_E();
  if (which == "G_R") return build_G_real();
  if (which == "E_R") return build_E_real();
  throw py::value_error("unknown generating function '" + which + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact A3 characters and weight multiplicities";

  py::register_exception<Error>(m, "ChargenError");

  m.def("character_z", [](const std::vector<int>& w) {
    return format_poly(solve_character(weight(w)).body);
  });
  m.def("character_x", [](const std::vector<int>& w, const std::string& algebra) {
    const Algebra a = parse_algebra(algebra);
    if (a == Algebra::A3) return format_poly(char_to_x(solve_character(weight(w))));
    return format_poly(weyl_character(RootSystem::get(a), weight(w)));
  }, py::arg("m"), py::arg("algebra") = "a3");
  m.def("eigenvalue", [](const std::vector<int>& w) { return to_string(eigenvalue(weight(w))); });
  m.def("dim", [](const std::vector<int>& w, const std::string& algebra) {
    return to_string(weyl_dim(RootSystem::get(parse_algebra(algebra)), weight(w)));
  }, py::arg("m"), py::arg("algebra") = "a3");
  m.def("multiplicity", [](const std::vector<int>& mw, const std::vector<int>& nw,
                           const std::string& method) {
    return to_string(multiplicity(weight(mw), weight(nw), parse_mult_method(method)));
  }, py::arg("m"), py::arg("n"), py::arg("method") = "kostant");
  m.def("kostant", [](int k1, int k2, int k3) { return to_string(kostant_Z(k1, k2, k3)); });
  m.def("expand", [](const std::string& which, const std::vector<int>& caps) {
    std::vector<std::pair<std::vector<int>, std::string>> out;
    for (auto& [e, c] : expand_genfun(named(which), caps).nonzero_terms())
      out.emplace_back(e, format_poly(c));
    return out;
  });
  m.def("verify_pde", [](const std::string& which, const std::vector<int>& caps) {
    const GenFun g = named(which);
    const DiffOperator& op = g.name == "G_R" ? delta_t_real() : delta_t();
    return verify_pde(g, op, caps).is_zero();
  });
  m.def("criterion", [](int id, const std::string& level) {
    const CriterionResult r = run_criterion(id, parse_level(level));
    return std::make_pair(r.passed, format_result(r));
  }, py::arg("id"), py::arg("level") = "quick");
  m.def("run_cli", [](const std::vector<std::string>& args) {
    const cli::Outcome o = cli::run(args);
    return py::make_tuple(o.exit_code, o.out, o.err);
  });
}
