#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "addpair/additivity.hpp"
#include "addpair/canonical.hpp"
#include "addpair/cliques.hpp"
#include "addpair/error.hpp"
#include "addpair/graph.hpp"
#include "addpair/graph6.hpp"
#include "addpair/patterns.hpp"
#include "addpair/report.hpp"
#include "addpair/verifier.hpp"

namespace py = pybind11;
using namespace addpair;

namespace {

std::optional<std::vector<int>> as_list(const std::optional<VertexSet>& s) {
    if (!s) return std::nullopt;
    return s->to_vector();
}

const PatternCatalog& catalog_by_name(const std::string& name) {
    if (name == "F") return catalog_F();
    if (name == "P") return catalog_P();
    if (name == "C5") return catalog_C5();
    if (name == "P0c") return catalog_P0c();
    throw InputError("unknown catalog '" + name + "'");
}

py::dict summary_dict(const RunResult& result) {
    auto json_module = py::module_::import("json");
    py::dict summary = json_module.attr("loads")(summary_to_json(result.summary).dump());
    summary["wall_seconds"] = result.summary.wall_seconds;
    return summary;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Additive graph pairs: clique machinery, witnesses, outcome classification, verification runs";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnsupportedSize>(m, "UnsupportedSize", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static("from_edges",
                    [](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, std::span<const Edge>(edges)); })
        .def_static("from_graph6", [](const std::string& text) { return parse_graph6(text); })
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def("edges", &Graph::edges)
        .def("edge_count", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("complement", [](const Graph& g) { return complement(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

    m.def("complete", &complete);
    m.def("edgeless", &edgeless);
    m.def("cycle", &cycle);
    m.def("union_graph", &union_graph);
    m.def("difference", &difference);
    m.def("induced", [](const Graph& g, const std::vector<int>& x) { return induced(g, VertexSet::from_vector(x)).graph; });
    m.def("canonical_form", [](const Graph& g) { return py::bytes(canonical_form(g)); });
    m.def("is_isomorphic", &is_isomorphic);

    m.def("max_clique", [](const Graph& g) {
        const CliqueResult c = max_clique(g);
        return py::make_tuple(c.size, c.members.to_vector());
    });
    m.def("omega", [](const Graph& g) { return max_clique(g).size; });
    m.def("max_stable_set", [](const Graph& g) {
        const CliqueResult c = max_stable_set(g);
        return py::make_tuple(c.size, c.members.to_vector());
    });

    m.def("is_additive", &is_additive);
    m.def("find_min_witness", [](const Graph& b, const Graph& r) -> py::object {
        const auto w = find_min_witness(b, r);
        if (!w) return py::none();
        py::dict d;
        d["x"] = w->x.to_vector();
        d["omega_b"] = w->omega_b;
        d["omega_r"] = w->omega_r;
        d["deficiency"] = w->deficiency;
        return d;
    });
    m.def("union_decomposable", [](const Graph& b, const Graph& r) { return as_list(union_decomposable(b, r)); },
          "Smallest clique of G(B,R) that is not a B-clique plus an R-clique, or None.");

    m.def("catalog", [](const std::string& name) { return catalog_by_name(name).members; });
    m.def("build_P0", &build_P0);
    m.def("build_P1", &build_P1);
    m.def("build_P2", &build_P2);
    m.def("build_P0_complement", &build_P0_complement);
    m.def("contains_induced", [](const Graph& host, const Graph& pattern) -> std::optional<std::vector<int>> {
        auto e = contains_induced(host, pattern);
        if (!e) return std::nullopt;
        return e->map;
    });
    m.def("classify_outcomes", [](const Graph& b, const Graph& r) { return classify_outcomes(b, r).list(); });

    m.def("verify_pair", [](const Graph& b, const Graph& r) {
        const PairReport report = verify_pair(b, r, VerifyOptions{true, true});
        auto json_module = py::module_::import("json");
        py::dict d = json_module.attr("loads")(pair_to_json(report).dump());
        d["additive"] = report.additive;
        d["theorem_ok"] = report.theorem_ok;
        return d;
    });
    m.def("enumerate_exhaustive", [](int n, int workers) {
        RunOptions options;
        options.workers = workers;
        options.keep_reports = false;
        RunResult result;
        {
            py::gil_scoped_release release;
            result = enumerate_exhaustive(n, options);
        }
        return summary_dict(result);
    }, py::arg("n"), py::arg("workers") = 1);
    m.def("sample_random", [](int n, std::uint64_t count, std::uint64_t seed, int workers) {
        RunOptions options;
        options.workers = workers;
        options.keep_reports = false;
        RunResult result;
        {
            py::gil_scoped_release release;
            result = sample_random(n, count, seed, options);
        }
        return summary_dict(result);
    }, py::arg("n"), py::arg("count"), py::arg("seed") = 0, py::arg("workers") = 1);
    m.def("necessity_suite", []() {
        py::list out;
        for (const NecessityCase& c : necessity_suite()) {
            py::dict d;
            d["name"] = c.name;
            d["b"] = c.b;
            d["r"] = c.r;
            d["expected"] = c.expected;
            d["outcomes"] = c.report.outcomes ? c.report.outcomes->list() : std::vector<int>{};
            d["additive"] = c.report.additive;
            d["matches"] = c.matches();
            out.append(d);
        }
        return out;
    });
}
