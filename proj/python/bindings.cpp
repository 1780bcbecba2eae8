#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "weylcomb/classical.hpp"
#include "weylcomb/cli.hpp"
#include "weylcomb/coeff_table.hpp"
#include "weylcomb/expr.hpp"
#include "weylcomb/operator_models.hpp"
#include "weylcomb/qgha_modules.hpp"

namespace py = pybind11;
using namespace weylcomb;

namespace {

// Big integers cross the boundary as Python ints via their decimal string.
py::object to_py(const mpz_class& v) { return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10)); }

py::dict coefficients(unsigned n, unsigned d) {
  const CoeffTable t = d == 1 ? coeff_table_recurrence(n) : coeff_table_engine(n, d);
  py::dict out;
  for (const auto& e : t.row(n, d)) out[py::tuple(py::cast(e.lambda.parts()))] = to_py(e.value);
  return out;
}

QghaSpec qgha_spec(const std::string& ring, const std::string& q, const std::string& f, const std::string& g) {
  const Ring r = Ring::parse(ring);
  return QghaSpec(r, r.coerce(Scalar::parse(q)), parse_poly(f, 'h', r), parse_poly(g, 'h', r));
}

}  // namespace

PYBIND11_MODULE(_weylcomb, m) {
  m.doc() = "Exact normal ordering, universal polynomials and qGHA modules";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("coefficients", &coefficients, py::arg("n"), py::arg("d") = 1,
        "Row n of the coefficient table as {partition tuple: coefficient}.");
  m.def("closed_form", [](unsigned n, std::vector<unsigned> parts) {
    return to_py(coeff_closed_form(n, Partition(std::move(parts))));
  });
  m.def("universal_power", [](unsigned n, unsigned d) { return universal_power(n, d).to_string(); },
        py::arg("n"), py::arg("d") = 1);
  m.def(
      "normal_order",
      [](const std::string& expr, const std::string& algebra, const std::string& ring, const std::string& q,
         const std::string& h) {
        const Ring r = Ring::parse(ring);
        OreAlgebraSpec spec;
        if (algebra == "weyl") spec = OreAlgebraSpec::weyl(r);
        else if (algebra == "qplane") spec = OreAlgebraSpec::quantum_plane(Scalar::parse(q), r);
        else if (algebra == "qweyl") spec = OreAlgebraSpec::quantum_weyl(Scalar::parse(q), r);
        else if (algebra == "ah") spec = OreAlgebraSpec::a_h(parse_poly(h, 'x', r), r);
        else throw std::invalid_argument("unknown algebra '" + algebra + "'");
        return parse_ore(expr, spec).to_string();
      },
      py::arg("expr"), py::arg("algebra") = "weyl", py::arg("ring") = "rat", py::arg("q") = "1",
      py::arg("h") = "1");
  m.def("stirling1", [](unsigned n, unsigned k) { return to_py(stirling1_signless(n, k)); });
  m.def("stirling2", [](unsigned n, unsigned k) { return to_py(stirling2(n, k)); });
  m.def("bell", [](unsigned n) { return to_py(bell(n)); });
  m.def("eulerian", [](unsigned n, unsigned k) { return to_py(eulerian(n, k)); });
  m.def(
      "generalized_stirling",
      [](unsigned n, unsigned k, unsigned q, unsigned d, const std::string& route) {
        return to_py(generalized_stirling(n, k, q, d, route == "weyl" ? StirlingRoute::weyl : StirlingRoute::ctable));
      },
      py::arg("n"), py::arg("k"), py::arg("q"), py::arg("d"), py::arg("route") = "ctable");
  m.def("modp_all_zero", [](unsigned p, unsigned m) { return modp_check(p, m).all_zero; });
  m.def("ode_solve", [](const std::vector<std::string>& y, unsigned N) {
    std::vector<Scalar> ys;
    for (const auto& s : y) ys.push_back(Scalar::parse(s));
    std::vector<std::string> out;
    for (const Scalar& v : ode_solve(ys, N)) out.push_back(v.to_string());
    return out;
  });
  m.def("young_check", &young_commutator_check);
  m.def("qgha_classify",
        [](const std::string& ring, const std::string& q, const std::string& f, const std::string& g,
           unsigned n_max) {
          std::vector<std::string> out;
          for (const auto& mod : classify_simples(qgha_spec(ring, q, f, g), n_max)) out.push_back(mod.to_json());
          return out;
        },
        py::arg("ring"), py::arg("q"), py::arg("f"), py::arg("g"), py::arg("n_max") = 10,
        "Simple modules as JSON strings.");
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
