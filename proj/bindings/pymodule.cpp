#include "chipres/oracle.hpp"
#include "chipres/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace chipres;

namespace {

py::object json_to_py(const Json& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

Multigraph graph_from_text(const std::string& text) { return parse_graph(text); }

}  // namespace

PYBIND11_MODULE(_chipres, m) {
    m.doc() = "chip-firing ideals and cellular resolutions (C++ core)";

    py::class_<Multigraph>(m, "Multigraph")
        .def(py::init(&graph_from_text), py::arg("text"),
             "Parse a graph from the JSON or plain-text description.")
        .def_property_readonly("n", &Multigraph::n)
        .def_property_readonly("m", &Multigraph::m)
        .def_property_readonly("vertices", &Multigraph::vertex_names)
        .def("vertex_index", &Multigraph::vertex_index)
        .def("__repr__", [](const Multigraph& g) {
            std::ostringstream out;
            out << "Multigraph(n=" << g.n() << ", m=" << g.m() << ")";
            return out.str();
        });

    m.def("laplacian", [](const Multigraph& g, py::object reduced_at) {
        int at = reduced_at.is_none() ? -1 : g.vertex_index(reduced_at.cast<std::string>());
        IntMatrix L = laplacian(g, at);
        std::vector<std::vector<long long>> out(L.rows(), std::vector<long long>(L.cols()));
        for (int r = 0; r < L.rows(); ++r)
            for (int c = 0; c < L.cols(); ++c) out[r][c] = L.at(r, c).convert_to<long long>();
        return out;
    }, py::arg("graph"), py::arg("reduced_at") = py::none());

    m.def("spanning_tree_count",
          [](const Multigraph& g, const std::string& q) { return spanning_tree_count(g, g.vertex_index(q)).str(); });

    m.def("bonds", [](const Multigraph& g, const std::string& q) {
        std::vector<std::vector<std::string>> out;
        for (const Cut& c : enumerate_bonds(g, g.vertex_index(q))) {
            std::vector<std::string> side;
            for (int v = 0; v < g.n(); ++v)
                if (c.other >> v & 1) side.push_back(g.name(v));
            out.push_back(side);
        }
        return out;
    });

    m.def("greens", [](const Multigraph& g, const std::string& q) {
        RatMatrix j = greens_matrix(g, g.vertex_index(q));
        std::vector<std::vector<std::string>> out(j.rows(), std::vector<std::string>(j.cols()));
        for (int r = 0; r < j.rows(); ++r)
            for (int c = 0; c < j.cols(); ++c) out[r][c] = to_string(j.at(r, c));
        return out;
    });

    m.def("q_reduce", [](const Multigraph& g, const std::string& q, const std::string& divisor) {
        int qi = g.vertex_index(q);
        return divisor_string(g, q_reduce(g, qi, parse_divisor(g, divisor)));
    });

    m.def("gens", [](const Multigraph& g, const std::string& q, const std::string& ideal, bool all_cuts) {
        return json_to_py(gens_report(g, g.vertex_index(q), ideal_from_name(ideal), all_cuts));
    }, py::arg("graph"), py::arg("q"), py::arg("ideal"), py::arg("all_cuts") = false);

    m.def("betti", [](const Multigraph& g, const std::string& q, bool fine) {
        return json_to_py(betti_report(g, g.vertex_index(q), fine));
    }, py::arg("graph"), py::arg("q"), py::arg("fine") = false);

    m.def("resolution", [](const Multigraph& g, const std::string& q, const std::string& ideal) {
        return json_to_py(resolution_report(g, g.vertex_index(q), ideal_from_name(ideal)));
    });

    m.def("facets", [](const Multigraph& g, const std::string& q) {
        return json_to_py(facets_report(g, g.vertex_index(q)));
    });

    m.def("alexander_dual", [](const Multigraph& g, const std::string& q) {
        return json_to_py(dual_report(g, g.vertex_index(q)));
    });

    m.def("parking_count",
          [](const Multigraph& g, const std::string& q) { return parking_count(g, g.vertex_index(q)).str(); });

    m.def("verify", [](const Multigraph& g, const std::string& q, const std::string& suite) {
        return json_to_py(verify_report(g, g.vertex_index(q), suite));
    }, py::arg("graph"), py::arg("q"), py::arg("suite") = "all");
}
