#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pentaforge/cliquewidth.hpp"
#include "pentaforge/coloring.hpp"
#include "pentaforge/families.hpp"
#include "pentaforge/io.hpp"
#include "pentaforge/recognizer.hpp"

#include <numeric>

namespace py = pybind11;
using namespace pentaforge;

namespace {

py::object to_py(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_py(const py::object& o) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Certificate cert_from_py(const py::object& o) { return certificate_from_json(from_py(o)); }

VertexSet all_vertices(const Graph& g) {
    VertexSet vs(g.n());
    std::iota(vs.begin(), vs.end(), 0);
    return vs;
}

}  // namespace

PYBIND11_MODULE(pentaforge, m) {
    m.doc() = "Structured (2P3, C4, C6)-free graphs: generation, recognition, clique-width, coloring";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InternalContradiction>(m, "InternalContradiction", PyExc_RuntimeError);
    py::register_exception<KExprError>(m, "KExprError", PyExc_ValueError);
    py::register_exception<FamilyError>(m, "FamilyError", PyExc_ValueError);
    py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);
    py::register_exception<NotInClassError>(m, "NotInClassError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edge_list(n, edges); }),
             py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("n", &Graph::n)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", &Graph::neighbors)
        .def("degree", &Graph::degree)
        .def("induced", &Graph::induced)
        .def("__len__", &Graph::n)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<pentaforge.Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("parse_graph", &parse_graph_any, py::arg("text"));
    m.def("format_graph", &format_graph_text, py::arg("g"), py::arg("comment") = "");
    m.def("add_universal", &add_universal, py::arg("g"), py::arg("m"));
    m.def("base_names", [] {
        std::vector<std::string> out;
        for (const auto& b : base_library()) out.push_back(b.name);
        return out;
    });
    m.def("base_graph", [](const std::string& name) {
        const auto* b = find_base(name);
        if (!b) throw py::key_error(name);
        return b->graph;
    });

    m.def(
        "generate",
        [](const std::string& tag, int budget, std::uint64_t seed, int t) {
            Rng rng(seed);
            auto gen = random_member(tag, budget, rng, t);
            return py::make_tuple(gen.graph, to_py(certificate_to_json(gen.cert)));
        },
        py::arg("family"), py::arg("budget"), py::arg("seed"), py::arg("t") = 0,
        "Random family member and its certificate.");

    m.def("forbidden_profile", [](const Graph& g) { return to_py(profile_to_json(forbidden_profile(g))); });
    m.def("simplicial_vertices", &simplicial_vertices);
    m.def("universal_vertices", &universal_vertices);
    m.def("holes", &holes, py::arg("g"), py::arg("max_len"));
    m.def("contract_twins", [](const Graph& g) {
        auto q = contract_twins(g);
        return py::make_tuple(q.quotient, q.classes);
    });
    m.def("match_base", &match_base);

    m.def("classify", [](const Graph& g) { return to_py(outcome_to_json(classify(g))); });
    m.def("verify_certificate", [](const Graph& g, const py::object& cert) {
        auto rep = verify_certificate(g, cert_from_py(cert));
        return py::make_tuple(rep.ok, rep.failures);
    });

    m.def("cwd", [](const Graph& g) -> py::object {
        auto r = expr_for(g);
        if (g.n() == 0) {
            py::dict d;
            d["width"] = 0;
            d["expr"] = py::none();
            d["verified"] = true;
            return d;
        }
        if (!r.expr) return to_py(outcome_to_json(r.outcome));
        py::dict d;
        d["width"] = width(r.expr);
        d["expr"] = to_text(r.expr);
        d["verified"] = matches_induced(eval(r.expr), g, all_vertices(g));
        return d;
    });
    m.def("kexpr_eval", [](const std::string& text) {
        auto lg = eval(parse_kexpr(text));
        return py::make_tuple(lg.graph, lg.names, lg.labels);
    });
    m.def("kexpr_width", [](const std::string& text) { return width(parse_kexpr(text)); });
    m.def("kexpr_canonical", [](const std::string& text) { return to_text(parse_kexpr(text)); });
    m.def(
        "k_colorable", [](const std::string& text, int k) { return k_colorable_cwd(parse_kexpr(text), k); },
        py::arg("expr"), py::arg("k"));

    m.def("chromatic_number", [](const Graph& g) {
        auto r = chromatic_structured(g);
        return py::make_tuple(r.chi, r.assignment);
    });
    m.def(
        "chromatic_exact",
        [](const Graph& g) {
            auto r = chromatic_exact(g);
            return py::make_tuple(r.chi, r.assignment);
        },
        "Branch-and-bound oracle for small graphs.");
    m.def("peel_simplicial", [](const Graph& g) {
        auto t = peel_simplicial(g);
        return py::make_tuple(t.removed, t.core);
    });
}
