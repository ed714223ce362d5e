#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclex/canonical.hpp"
#include "cyclex/cycles.hpp"
#include "cyclex/graph.hpp"
#include "cyclex/graph6.hpp"
#include "cyclex/induced.hpp"
#include "cyclex/local.hpp"
#include "cyclex/patterns.hpp"
#include "cyclex/report.hpp"
#include "cyclex/sweep.hpp"
#include "cyclex/theorems.hpp"

namespace py = pybind11;
using namespace cyclex;

namespace {

VertexSet set_from_list(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, std::span<const std::pair<int, int>>(edges));
}

std::vector<int> set_to_list(VertexSet s) { return s.to_vector(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "graph engine for local connectivity and cycle extendability";

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& line) { return parse_graph6(line); })
        .def("to_graph6", [](const Graph& g) { return write_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int u) { return set_to_list(g.neighbors(u)); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(graph6='" + write_graph6(g) + "')";
        });

    m.def("union_of", &union_of);
    m.def("join_of", &join_of);
    m.def("complement_of", &complement_of);
    m.def("named_graph", [](const std::string& name) {
        for (PatternId id : catalog_patterns())
            if (pattern_name(id) == name) return named_graph(id);
        throw std::invalid_argument("unknown pattern name: " + name);
    }, "fixed catalog pattern by name (see catalog())");
    m.def("complete_graph", [](int n) { return named_graph(PatternId::complete(n)); });
    m.def("path_graph", [](int n) { return named_graph(PatternId::path(n)); });
    m.def("cycle_graph", [](int n) { return named_graph(PatternId::cycle(n)); });
    m.def("star_graph", [](int n) { return named_graph(PatternId::star(n)); });

    m.def("is_connected", &is_connected);
    m.def("diameter", [](const Graph& g) { return diameter(g); });
    m.def("distance_sets", [](const Graph& g, int u, int k) { return set_to_list(distance_sets(g, u, k)); });
    m.def("induce", [](const Graph& g, const std::vector<int>& vs) { return induce(g, set_from_list(vs)); });
    m.def("degree_profile", [](const Graph& g) {
        const auto p = degree_profile(g);
        return py::make_tuple(p.min_degree, p.max_degree, p.sequence);
    });

    m.def("find_induced", [](const Graph& host, const Graph& pattern) -> py::object {
        if (auto w = find_induced(host, pattern)) return py::cast(w->image);
        return py::none();
    }, "image of pattern vertex i under one induced embedding, or None");
    m.def("is_family_free", [](const Graph& host, const std::vector<Graph>& family) {
        return is_family_free(host, family);
    });
    m.def("is_induced_subgraph_of", &is_induced_subgraph_of);

    auto condition = [](const ConditionReport& r) {
        return py::make_tuple(r.holds, r.witness_text());
    };
    m.def("is_locally_connected", [condition](const Graph& g) { return condition(is_locally_connected(g)); });
    m.def("is_locally_ore", [condition](const Graph& g) { return condition(is_locally_ore(g)); });
    m.def("is_locally_dirac", [condition](const Graph& g) { return condition(is_locally_dirac(g)); });
    m.def("satisfies_condition_e1", [condition](const Graph& g) { return condition(satisfies_condition_e1(g)); });
    m.def("induced_p3s", [](const Graph& g) {
        std::vector<std::tuple<int, int, int>> out;
        for (const InducedP3& p : induced_p3s(g)) out.emplace_back(p.end1, p.center, p.end2);
        return out;
    });

    m.def("girth_circumference", [](const Graph& g) -> py::object {
        if (auto gc = girth_circumference(g)) return py::make_tuple(gc->first, gc->second);
        return py::none();
    });
    m.def("has_cycle_of_order", &has_cycle_of_order);
    m.def("is_hamiltonian", &is_hamiltonian);
    m.def("is_weakly_pancyclic", &is_weakly_pancyclic);
    m.def("is_acyclic", &is_acyclic);
    m.def("cyclable_sets", [](const Graph& g) {
        std::vector<std::vector<int>> out;
        for (VertexSet s : cyclable_sets(g)) out.push_back(s.to_vector());
        return out;
    });
    m.def("is_cycle_extendable", [](const Graph& g, const std::vector<int>& s) {
        return is_cycle_extendable(g, set_from_list(s));
    });
    m.def("is_fully_cycle_extendable", [](const Graph& g) {
        const auto r = is_fully_cycle_extendable(g);
        return py::make_tuple(r.holds, r.witness_text());
    });
    m.def("every_vertex_on_triangle", [](const Graph& g) {
        const auto r = every_vertex_on_triangle(g);
        return py::make_tuple(r.holds, r.vertex_witness ? py::cast(*r.vertex_witness) : py::none());
    });

    m.def("hypothesis_membership", [](const Graph& g) {
        std::vector<std::string> out;
        for (TheoremId t : hypothesis_membership(g)) out.push_back(theorem_token(t));
        return out;
    });
    m.def("verify_theorem", [](const Graph& g, const std::string& token) {
        const auto id = theorem_from_token(token);
        if (!id) throw std::invalid_argument("unknown theorem id: " + token);
        const auto v = verify_theorem(g, *id);
        const char* status = v.status == VerdictStatus::Verified     ? "verified"
                             : v.status == VerdictStatus::Violation ? "violation"
                                                                    : "not_applicable";
        return py::make_tuple(status, v.witness);
    });
    m.def("theorem_ids", [] {
        std::vector<std::string> out;
        for (TheoremId t : kAllTheorems) out.push_back(theorem_token(t));
        return out;
    });
    m.def("theorem_claim", [](const std::string& token) {
        const auto id = theorem_from_token(token);
        if (!id) throw std::invalid_argument("unknown theorem id: " + token);
        return theorem_claim(*id);
    });
    m.def("proposition_lattice_checks", [] {
        const auto r = proposition_lattice_checks();
        return py::make_tuple(r.all_pass(), r.checks, r.failures);
    });
    m.def("abc_partition", [](const Graph& g, const std::vector<int>& cycle, int z, int u) {
        const auto sets = abc_partition(g, OrderedCycle::over(g, cycle), z, u);
        return py::make_tuple(sets.a.to_vector(), sets.b.to_vector(), sets.c.to_vector());
    });
    m.def("trace_t6_sequence", [](const Graph& g, const std::vector<int>& cycle, int z, int u1) {
        const auto r = trace_t6_sequence(g, OrderedCycle::over(g, cycle), z, u1);
        py::dict out;
        out["bound_exceeded"] = r.bound_exceeded;
        out["stalled_at"] = r.stalled_at;
        out["u_seq"] = r.u_seq;
        out["invariants_ok"] = r.invariants_ok;
        return out;
    });

    m.def("canonical_certificate", [](const Graph& g) { return canonical_certificate(g).to_hex(); });
    m.def("canonical_form", &canonical_form);
    m.def("enumerate_graphs", [](int n, bool connected_only) { return enumerate_graphs(n, connected_only); },
          py::arg("n"), py::arg("connected_only") = true);

    m.def("check_report_json", [](const Graph& g) { return render_checks({check_graph(g)}, OutputFormat::Json, 0.0); });
    m.def("run_verify", [](const std::string& theorem, int n_max, int jobs) {
        VerifyConfig cfg;
        cfg.n_max = n_max;
        cfg.jobs = jobs;
        if (theorem != "all") {
            const auto id = theorem_from_token(theorem);
            if (!id) throw std::invalid_argument("unknown theorem id: " + theorem);
            cfg.theorems = {*id};
        }
        const auto report = run_verify(cfg);
        return render_sweep(report, OutputFormat::Json);
    }, py::arg("theorem") = "all", py::arg("n_max") = 6, py::arg("jobs") = 1,
       "run a sweep and return the JSON report");
    m.def("run_conjecture_search", [](int n_max, int jobs) {
        return render_search(run_conjecture_search(n_max, jobs), OutputFormat::Json);
    }, py::arg("n_max") = 6, py::arg("jobs") = 1);
    m.def("catalog", [] {
        std::vector<py::dict> out;
        for (const CatalogEntry& e : catalog_entries()) {
            py::dict d;
            d["name"] = e.name;
            d["graph6"] = e.graph6;
            d["order"] = e.order;
            d["size"] = e.size;
            d["degree_sequence"] = e.degree_sequence;
            out.push_back(d);
        }
        return out;
    });
}
