#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ctop/annulus.hpp"
#include "ctop/bypass.hpp"
#include "ctop/chord.hpp"

namespace py = pybind11;
using namespace ctop;

PYBIND11_MODULE(_ctop, m) {
    m.doc() = "convex-surface dividing-set engine";

    py::register_exception<MalformedDiagram>(m, "MalformedDiagram");

    py::class_<ChordDiagram>(m, "ChordDiagram")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("pairs"))
        .def_property_readonly("n", &ChordDiagram::n)
        .def_property_readonly("points", &ChordDiagram::points)
        .def("partner", &ChordDiagram::partner)
        .def("pairs", [](const ChordDiagram& d) { return d.pairs(); })
        .def("key", &ChordDiagram::key)
        .def("__eq__", [](const ChordDiagram& a, const ChordDiagram& b) { return a == b; })
        .def("__hash__", [](const ChordDiagram& d) { return py::hash(py::str(d.key())); })
        .def("__repr__", [](const ChordDiagram& d) { return format_disk_literal(d); });

    m.def("enumerate_disk_configs", &enumerate_disk_configs, py::arg("n"));
    m.def("is_boundary_parallel", &is_boundary_parallel);
    m.def("mirror", &mirror);
    m.def("catalan", &catalan);
    m.def("format_disk_literal", &format_disk_literal);
    m.def("parse_disk_literal", &parse_disk_literal);

    py::class_<DiskArc>(m, "DiskArc")
        .def(py::init([](int pos, bool dig) { return DiskArc{pos, dig}; }), py::arg("pos"),
             py::arg("dig") = true)
        .def_readwrite("pos", &DiskArc::pos)
        .def_readwrite("dig", &DiskArc::dig);

    py::class_<DiskRewrite>(m, "DiskRewrite")
        .def_readonly("diagram", &DiskRewrite::diagram)
        .def_readonly("loops", &DiskRewrite::loops);

    m.def("apply_bypass", &apply_bypass, py::arg("diagram"), py::arg("arc"));
    m.def("is_trivial_move", &is_trivial_move, py::arg("diagram"), py::arg("arc"));
}
