#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "palf/error.hpp"
#include "palf/front.hpp"
#include "palf/grid.hpp"
#include "palf/monodromy.hpp"
#include "palf/palf.hpp"

namespace py = pybind11;
using namespace palf;

namespace {

py::object to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json from_py(const py::object& o) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_palf, m) {
    m.doc() = "PALF construction from Legendrian fronts";
    static py::exception<Error> err(m, "PalfError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            err(e.what());
        }
    });

    m.def("tb", [](const std::string& text) {
        py::dict out;
        for (const auto& c : classical_invariants(parse_front(text))) out[py::str(c.label)] = c.tb;
        return out;
    }, py::arg("front"), "Thurston-Bennequin number per component");

    m.def("grid", [](const std::string& text, int min_p, int min_q) {
        auto g = pad_coprime(to_square_bridge(modify_for_handles(parse_front(text))), min_p, min_q);
        return to_text(g);
    }, py::arg("front"), py::arg("min_p") = 2, py::arg("min_q") = 2);

    m.def("build", [](const std::string& text, int min_p, int min_q) {
        return to_py(to_json(build_palf(parse_front(text), min_p, min_q)));
    }, py::arg("front"), py::arg("min_p") = 2, py::arg("min_q") = 2, "Build a PALF and return its JSON form");

    m.def("verify", [](const py::object& doc) {
        return to_py(to_json(verify(palf_from_json(from_py(doc)))));
    }, py::arg("palf"), "Re-audit a PALF given as parsed JSON");

    m.def("family_genera", [](const std::string& text, const std::vector<std::pair<int, int>>& sizes) {
        auto f = family(parse_front(text), sizes);
        return py::make_tuple(f.genera, f.certified);
    }, py::arg("front"), py::arg("sizes"));

    m.def("alexander_torus", [](int p, int q) {
        std::vector<std::string> out;
        for (const auto& c : alexander_torus(p, q)) out.push_back(c.str());
        return out;
    }, py::arg("p"), py::arg("q"), "coefficients, constant term first, as decimal strings");
}
