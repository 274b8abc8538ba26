#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gis/generate.hpp"
#include "gis/io.hpp"
#include "gis/oracle.hpp"
#include "gis/reduce.hpp"
#include "gis/search.hpp"

namespace py = pybind11;
using namespace gis;

namespace {

graph graph_from_string(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

py::dict stats_dict(const solve_stats& s) {
    py::dict d;
    d["kernel_size"] = s.kernel_size;
    d["time_ker_s"] = s.time_ker_s;
    d["htime_s"] = s.htime_s;
    d["trials"] = s.trials;
    d["seed"] = s.seed;
    d["proven_optimal"] = s.proven_optimal;
    d["offset"] = s.offset.raw();
    return d;
}

}  // namespace

PYBIND11_MODULE(_gisrls, m) {
    m.doc() = "Generalized independent set toolkit: data reduction, exact "
              "enumeration, and reduction-driven local search. Vertex ids are "
              "0-based here; instance files are 1-based.";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<invalid_input>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<overflow_error>(m, "Overflow", PyExc_OverflowError);

    py::class_<graph>(m, "Graph")
        .def(py::init<std::size_t, int>(), py::arg("n"), py::arg("scale") = 0)
        .def_static("from_string", &graph_from_string)
        .def_static("from_file", &parse_instance_file)
        .def("to_string", &instance_to_string)
        .def("add_permanent_edge", &graph::add_permanent_edge)
        .def("add_removable_edge",
             [](graph& g, vertex_id u, vertex_id v, std::int64_t p) {
                 g.add_removable_edge(u, v, benefit(p));
             })
        .def("set_profit", [](graph& g, vertex_id v, std::int64_t w) { g.set_profit(v, benefit(w)); })
        .def("profit", [](const graph& g, vertex_id v) { return g.profit(v).raw(); })
        .def("alive", &graph::alive)
        .def_property_readonly("n", &graph::vertex_count)
        .def_property_readonly("alive_count", &graph::alive_count)
        .def_property_readonly("permanent_edges", &graph::permanent_edge_count)
        .def_property_readonly("removable_edges", &graph::removable_edge_count)
        .def_property_readonly("scale", &graph::scale)
        .def_property_readonly("max_degree", &graph::max_degree);

    m.def("generate", [](std::size_t n, double edge_prob, double removable_frac,
                         std::int64_t profit_min, std::int64_t profit_max,
                         std::int64_t penalty_min, std::int64_t penalty_max, int scale,
                         std::uint64_t seed) {
              gen_params p{n, edge_prob, removable_frac, profit_min, profit_max,
                           penalty_min, penalty_max, scale, seed};
              return generate_instance(p);
          },
          py::arg("n"), py::arg("edge_prob") = 0.1, py::arg("removable_frac") = 0.5,
          py::arg("profit_min") = -10, py::arg("profit_max") = 10, py::arg("penalty_min") = -5,
          py::arg("penalty_max") = 8, py::arg("scale") = 0, py::arg("seed") = 1);

    m.def("net_benefit",
          [](const graph& g, const std::vector<vertex_id>& s) { return net_benefit(g, s).raw(); });
    m.def("is_generalized_independent", [](const graph& g, const std::vector<vertex_id>& s) {
        return is_generalized_independent(g, s);
    });
    m.def("tilde_w", [](const graph& g, vertex_id v) { return tilde_w(g, v).raw(); });
    m.def("w_plus",
          [](const graph& g, const std::vector<vertex_id>& s) { return w_plus(g, s).raw(); });

    py::class_<kernel_result>(m, "KernelResult")
        .def_property_readonly("kernel", [](const kernel_result& k) { return k.kernel; })
        .def_property_readonly("offset", [](const kernel_result& k) { return k.offset.raw(); })
        .def_property_readonly("forced", [](const kernel_result& k) { return k.forced; })
        .def_property_readonly("kernel_size",
                               [](const kernel_result& k) { return k.kernel.alive_count(); })
        .def_property_readonly("events", [](const kernel_result& k) { return k.trace.size(); })
        .def("lift",
             [](const kernel_result& k, const std::vector<vertex_id>& sol, const graph& original) {
                 solution s = lift_solution(k, sol, original);
                 return py::make_tuple(s.members, s.net_benefit.raw());
             },
             py::arg("kernel_solution"), py::arg("original"));

    m.def("complete_reduction",
          [](const graph& g, rule_mask disabled) {
              return complete_reduction(g, reduce_options{disabled, true});
          },
          py::arg("g"), py::arg("disabled_rules") = rule_mask(0));

    m.def("brute_force_alpha",
          [](const graph& g, std::size_t limit) {
              oracle_result r = brute_force_alpha(g, limit);
              return py::make_tuple(r.alpha.raw(), r.witness);
          },
          py::arg("g"), py::arg("limit") = 26);

    m.def("verify_solution", [](const graph& g, const std::vector<vertex_id>& s,
                                std::int64_t claimed) {
        verify_result r = verify_solution(g, s, benefit(claimed));
        py::dict d;
        d["feasible"] = r.feasible;
        d["value_matches"] = r.value_matches;
        d["actual"] = r.actual.raw();
        d["ok"] = r.ok();
        return d;
    });

    m.def("rls_solve",
          [](const graph& g, double cutoff_seconds, int trials, std::uint64_t seed,
             std::uint64_t tolerance_l, double epsilon, bool large_mode,
             std::uint64_t max_outer_iters, rule_mask disabled, int threads) {
              solve_params p;
              p.cutoff_seconds = cutoff_seconds;
              p.trials = trials;
              p.seed = seed;
              p.tolerance_l = tolerance_l;
              p.epsilon = epsilon;
              p.large_mode = large_mode;
              p.max_outer_iters = max_outer_iters;
              p.disabled = disabled;
              p.threads = threads;
              solve_result r = rls_solve(g, p);
              return py::make_tuple(r.sol.members, r.sol.net_benefit.raw(), stats_dict(r.stats));
          },
          py::arg("g"), py::arg("cutoff_seconds") = 30.0, py::arg("trials") = 10,
          py::arg("seed") = 1, py::arg("tolerance_l") = 0, py::arg("epsilon") = 0.2,
          py::arg("large_mode") = false, py::arg("max_outer_iters") = 0,
          py::arg("disabled_rules") = rule_mask(0), py::arg("threads") = 0);
}
