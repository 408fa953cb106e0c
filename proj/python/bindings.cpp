#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cotwist/session.hpp"

namespace py = pybind11;
using namespace cotwist;

PYBIND11_MODULE(_cotwist, m) {
    m.doc() = "exact twist verification over Q(i)[[params]]";

    py::register_exception<UsageError>(m, "UsageError");
    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<InvariantError>(m, "InvariantError");

    py::class_<CheckItem>(m, "CheckItem")
        .def_readonly("label", &CheckItem::label)
        .def_readonly("ok", &CheckItem::pass)
        .def_readonly("detail", &CheckItem::detail);

    py::class_<Report>(m, "Report")
        .def_readonly("suite", &Report::suite)
        .def_readonly("order", &Report::order)
        .def_readonly("seed", &Report::seed)
        .def_readonly("max_degree", &Report::max_degree)
        .def_readonly("items", &Report::items)
        .def("ok", &Report::ok)
        .def("transcript", &Report::transcript)
        .def("__repr__", [](const Report& r) {
            return "<Report " + r.suite + (r.ok() ? " ok>" : " FAILED>");
        });

    py::class_<Definition>(m, "Definition")
        .def("generators",
             [](const Definition& d) { return d.alg->generators; })
        .def("coordinates",
             [](const Definition& d) { return d.coords->coords; })
        .def("normalize", [](const Definition& d, const std::string& e) {
            return normalizeExpr(d, e);
        })
        .def("star", [](const Definition& d, const std::string& a, const std::string& b) {
            return starExpr(d, a, b);
        })
        .def("phi", [](const Definition& d, const std::string& e) { return phiExpr(d, e); })
        .def("check_cocycle", [](const Definition& d) { return runCheckCocycle(d); })
        .def("moyal_demo", [](const Definition& d) { return runMoyalDemo(d); })
        .def(
            "verify",
            [](const Definition& d, const std::string& suite, std::uint64_t seed, int max_degree) {
                return runSuite(d, suite, {seed, max_degree});
            },
            py::arg("suite"), py::arg("seed") = 1, py::arg("max_degree") = 3);

    m.def("load_defs", &loadDefs, py::arg("path"), py::arg("order") = -1);
    m.def("parse_defs", &parseDefs, py::arg("text"), py::arg("order") = -1);
    m.def("suite_names", [] { return suiteNames(); });
}
