/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// Python bindings. Vertices and blocks are 0-based lists of ints on this side;
// graphs are passed as Graph objects built from an order and an edge list.

#include <strongco/coalition.hh>
#include <strongco/domination.hh>
#include <strongco/errors.hh>
#include <strongco/families.hh>
#include <strongco/generators.hh>
#include <strongco/scg.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace strongco;

using Lists = std::vector<std::vector<Vertex>>;

namespace
{
    auto to_set(const Graph & g, const std::vector<Vertex> & members) -> VertexSet
    {
        return VertexSet::from_members(g.order(), members);
    }

    auto style_of(const std::string & s) -> DominationStyle
    {
        return parse_domination_style(s);
    }

    auto report_dict(const PartitionReport & report) -> py::dict
    {
        py::list verdicts;
        for (auto & v : report.verdicts) {
            py::dict d;
            d["block"] = v.block_index;
            d["status"] = std::string(to_string(v.status));
            d["partners"] = v.partners;
            verdicts.append(d);
        }
        py::dict result;
        result["valid"] = report.valid;
        result["verdicts"] = verdicts;
        return result;
    }
}

PYBIND11_MODULE(_strongco, m)
{
    m.doc() = "Strong coalition numbers of small graphs";

    static py::exception<CapacityError> capacity_error(m, "CapacityError", PyExc_ValueError);
    py::register_exception_translator([] (std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const CapacityError & e) {
            py::set_error(capacity_error, e.what());
        }
        catch (const ParseError & e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>, std::vector<std::string>>(),
                py::arg("order"), py::arg("edges"), py::arg("labels") = std::vector<std::string>{ })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edges", &Graph::edges)
        .def_property_readonly("labels", &Graph::labels)
        .def_property_readonly("degrees", &Graph::degrees)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("is_connected", &Graph::is_connected)
        .def("to_edge_list", [] (const Graph & g) { return to_edge_list(g); })
        .def("__repr__", [] (const Graph & g) {
            return "<Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("parse_edge_list", [] (const std::string & text) { return parse_edge_list(text); }, py::arg("text"));
    m.def("generate", [] (const std::string & spec) { return generate(parse_family_spec(spec)); }, py::arg("spec"),
            "Build a family graph from a spec such as 'path:9' or 'complete_bipartite:4,3'.");
    m.def("random_graph", &random_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("random_regular_graph", &random_regular_graph, py::arg("n"), py::arg("d"), py::arg("seed"));

    m.def("is_dominating", [] (const Graph & g, const std::vector<Vertex> & s, const std::string & style) {
            return is_dominating(g, to_set(g, s), style_of(style));
        }, py::arg("graph"), py::arg("vertices"), py::arg("style") = "strong");
    m.def("gamma", [] (const Graph & g, const std::string & style) { return gamma(g, style_of(style)); },
            py::arg("graph"), py::arg("style") = "strong");
    m.def("count_all_sds", [] (const Graph & g, const std::string & style, int exact_limit) {
            return count_all_sds(g, style_of(style), exact_limit);
        }, py::arg("graph"), py::arg("style") = "strong", py::arg("exact_limit") = default_exact_limit);
    m.def("domatic", [] (const Graph & g, const std::string & style) {
            auto r = domatic(g, style_of(style));
            return py::make_tuple(r.value, r.witness.to_lists());
        }, py::arg("graph"), py::arg("style") = "strong", "Returns (value, blocks).");

    m.def("solve", [] (const Graph & g, const std::string & style, int exact_limit, unsigned workers, bool use_bounds) {
            SolveResult r;
            {
                py::gil_scoped_release release;
                r = solve(g, style_of(style), SolverOptions{ exact_limit, workers, use_bounds });
            }
            py::dict d;
            d["value"] = r.value;
            d["witness"] = r.witness ? py::cast(r.witness->to_lists()) : py::none();
            d["certified"] = r.certified;
            d["certificate"] = r.certificate;
            d["nodes_explored"] = r.nodes_explored;
            d["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.wall_time).count();
            return d;
        }, py::arg("graph"), py::arg("style") = "strong", py::arg("exact_limit") = default_exact_limit,
        py::arg("workers") = 1u, py::arg("use_bounds") = true,
        "Exact coalition number with a witness partition (0-based blocks, None when the value is 0).");

    m.def("upper_bounds", [] (const Graph & g, const std::string & style, int exact_limit) {
            auto b = upper_bounds(g, style_of(style), exact_limit);
            py::list reasons;
            for (auto & r : b.reasons)
                reasons.append(py::make_tuple(r.name, r.value, r.status == BoundStatus::applied));
            return py::make_tuple(b.bound, reasons);
        }, py::arg("graph"), py::arg("style") = "strong", py::arg("exact_limit") = default_exact_limit,
        "Returns (bound, [(name, value, applied)]).");

    m.def("validate_partition", [] (const Graph & g, const Lists & blocks, const std::string & style) {
            return report_dict(validate_partition(g, Partition::from_lists(g.order(), blocks), style_of(style)));
        }, py::arg("graph"), py::arg("blocks"), py::arg("style") = "strong");

    m.def("construct_from_domatic", [] (const Graph & g) {
            auto c = construct_from_domatic(g);
            return py::make_tuple(c.partition.to_lists(), c.strong_domatic_number, c.extra_block);
        }, py::arg("graph"), "Returns (blocks, strong domatic number, extra block kept).");

    m.def("build_scg", [] (const Graph & g, const Lists & blocks, const std::string & style) {
            try {
                auto cg = build_scg(g, Partition::from_lists(g.order(), blocks), style_of(style));
                return py::make_tuple(cg.vertex_labels, cg.edges, export_dot(cg));
            }
            catch (const InvalidPartitionError & e) {
                throw py::value_error(e.what());
            }
        }, py::arg("graph"), py::arg("blocks"), py::arg("style") = "strong",
        "Returns (labels, 0-based edges, DOT text).");

    auto oracle = [] (const OracleAnswer & a) -> py::object {
        return a.applicable ? py::object(py::int_(a.value)) : py::object(py::none());
    };
    m.def("sc_oracle", [oracle] (const std::string & spec) { return oracle(sc_oracle(parse_family_spec(spec))); }, py::arg("spec"));
    m.def("c_oracle", [oracle] (const std::string & spec) { return oracle(c_oracle(parse_family_spec(spec))); }, py::arg("spec"));
    m.def("family_f_member", &family_f_member, py::arg("graph"));
    m.def("family_g_check", [] (int r, int s, int p) {
            auto c = family_g_check(FamilyGParams{ r, s, p });
            return py::make_tuple(c.graph, c.sc_equals_order);
        }, py::arg("r"), py::arg("s"), py::arg("p"), "Returns (graph, sc equals order).");
}
