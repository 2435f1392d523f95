// Thin bindings. Anything structured crosses the boundary as a JSON string
// (same schema as the CLI); the Python wrapper decodes it.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kurank2/birgraph.hpp"
#include "kurank2/catalog.hpp"
#include "kurank2/certifier.hpp"
#include "kurank2/chern.hpp"
#include "kurank2/class_parser.hpp"
#include "kurank2/cubic3.hpp"
#include "kurank2/euler_forms.hpp"
#include "kurank2/format.hpp"
#include "kurank2/render.hpp"

namespace py = pybind11;
using namespace kurank2;

namespace {

// __int128 has no pybind caster; go through the decimal string.
py::int_ wide(Wide x) { return py::int_(py::str(to_string(x))); }

Mat2 mat(const std::array<Int, 4>& m) { return {m[0], m[1], m[2], m[3]}; }

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_kurank2, m) {
  // owned by the module dict; a raw pointer avoids a static destructor at exit
  static PyObject* exc_type = py::exception<Error>(m, "Error", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::handle(exc_type)(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(exc_type, inst.ptr());
    }
  });

  m.def("pick", [](Int a, Int b) {
    const PickPair p = pick_decompose({a, b});
    return std::pair{std::pair{p.plus.a, p.plus.b}, std::pair{p.minus.a, p.minus.b}};
  });
  m.def("delta_sin_sq", [](Int a, Int b) { return delta_sin_sq({a, b}).str(); });
  m.def("chi", [](Int n1, Int m1, Int n2, Int m2) { return wide(chi({n1, m1}, {n2, m2})); });
  m.def("moduli_dim", [](Int n, Int mm) { return wide(moduli_dim({n, mm})); });
  m.def("symbolic", [](Int n, Int mm) { return to_symbolic({n, mm}); });
  m.def("parse_class", [](const std::string& s) {
    const KuClass v = parse_class(s);
    return std::pair{v.n, v.m};
  });
  m.def("hilbert", [](Int d, Int g, Int k) {
    const KuClass v = hilbert_character(d, g, k);
    return std::pair{v.n, v.m};
  });
  m.def("moduli_info_json", [](Int n, Int mm) { return dump(to_json(moduli_info({n, mm}))); });
  m.def("classify_json", [](std::array<Int, 4> q, std::array<Int, 4> d) {
    return dump(to_json(classify_form(EulerForm{mat(q)}, SerreIsometry{mat(d)})));
  });
  m.def("compatible", [](std::array<Int, 4> q, std::array<Int, 4> d) {
    return compatible(EulerForm{mat(q)}, SerreIsometry{mat(d)});
  });
  m.def("catalog_json", [] { return dump(catalog_json()); });
  m.def("certify_json", [](const std::string& entry, Int a, Int b) {
    return dump(to_json(certify(lookup(parse_label(entry)), {a, b})));
  });
  m.def("verify_json", [](const std::string& text) {
    const Certificate c = certificate_from_json(Json::parse(text));
    const VerifyResult r = verify(c, lookup(c.entry));
    return std::pair{r.ok, r.failure};
  });
  m.def(
      "certify_all_json",
      [](const std::string& entry, Int bound, unsigned threads) {
        const FanoKuEntry& e = lookup(parse_label(entry));
        py::gil_scoped_release unlock;
        return dump(to_json(certify_all(e, bound, threads)));
      },
      py::arg("entry"), py::arg("bound"), py::arg("threads") = 1);
  m.def("birgraph_json", [](Int bound) { return dump(to_json(build_graph(bound))); });
  m.def("connected", [](Int bound) { return check_connected(bound).connected; });
  m.def(
      "lattice_svg",
      [](Int n_min, Int n_max, Int m_min, Int m_max, bool hexagonal, bool annotate) {
        RenderSpec s;
        s.mode = hexagonal ? CoordinateMode::Hexagonal : CoordinateMode::Euclidean;
        s.n_min = n_min, s.n_max = n_max, s.m_min = m_min, s.m_max = m_max;
        s.annotate = annotate;
        return render_lattice_svg(s);
      },
      py::arg("n_min") = -4, py::arg("n_max") = 4, py::arg("m_min") = -4, py::arg("m_max") = 4,
      py::arg("hexagonal") = true, py::arg("annotate") = true);
}
