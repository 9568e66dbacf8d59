#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "maqw/linalg.hpp"
#include "maqw/serialize.hpp"
#include "maqw/verify.hpp"

namespace py = pybind11;
using namespace maqw;

namespace {

using Rows = std::vector<std::vector<cx>>;

Rows to_rows(const ComplexMatrix& m) {
    Rows rows(m.dim(), std::vector<cx>(m.dim()));
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) rows[r][c] = m(r, c);
    return rows;
}

ComplexMatrix from_rows(const Rows& rows) {
    ComplexMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size())
            throw std::invalid_argument("matrix rows must form a square");
        for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(maqaoa_walk, m) {
    m.doc() = "ma-QAOA schedules and quantum walks on dynamic graphs for {H, T, CX} circuits";
    m.attr("__version__") = "0.1.0";

    py::class_<Schedule>(m, "Schedule")
        .def_property_readonly("num_qubits", &Schedule::num_qubits)
        .def_property_readonly("num_layers",
                               [](const Schedule& s) { return s.layers().size(); })
        .def("to_json", [](const Schedule& s) { return schedule_to_json(s).dump(2); })
        .def("table", &render_schedule_table)
        .def("__repr__", [](const Schedule& s) {
            return "<Schedule n=" + std::to_string(s.num_qubits()) + " layers=" +
                   std::to_string(s.layers().size()) + ">";
        });

    py::class_<DynamicGraph>(m, "DynamicGraph")
        .def_property_readonly("num_vertices", &DynamicGraph::num_vertices)
        .def_property_readonly("num_steps",
                               [](const DynamicGraph& g) { return g.steps().size(); })
        .def("to_json", [](const DynamicGraph& g) { return dynamic_graph_to_json(g).dump(2); })
        .def("__repr__", [](const DynamicGraph& g) {
            return "<DynamicGraph vertices=" + std::to_string(g.num_vertices()) + " steps=" +
                   std::to_string(g.steps().size()) + ">";
        });

    m.def("transpile_circuit",
          [](const std::string& text) { return transpile(parse_circuit_text(text)); },
          py::arg("circuit_text"), "Compile circuit text into a schedule");

    m.def("schedule_from_json",
          [](const std::string& text) {
              return schedule_from_json(nlohmann::json::parse(text));
          },
          py::arg("json_text"));

    m.def("dynamic_graph_from_json",
          [](const std::string& text) {
              return dynamic_graph_from_json(nlohmann::json::parse(text));
          },
          py::arg("json_text"));

    m.def("schedule_unitary",
          [](const Schedule& s) { return to_rows(schedule_unitary(s)); });

    m.def("walk_unitary", [](const DynamicGraph& g) { return to_rows(walk_unitary(g)); });

    m.def("reference_unitary",
          [](const std::string& text) {
              return to_rows(reference_gate_unitary(parse_circuit_text(text)));
          },
          py::arg("circuit_text"), "Exact gate-product unitary of circuit text");

    m.def("run_schedule",
          [](const Schedule& s, const std::string& init) {
              return run_schedule(s, parse_initial_state(init, s.num_qubits()))
                  .final_state.amplitudes();
          },
          py::arg("schedule"), py::arg("init") = "plus");

    m.def("run_walk",
          [](const DynamicGraph& g, const std::string& init) {
              int n = 0;
              while ((std::size_t{1} << n) < g.num_vertices()) ++n;
              return run_walk(g, parse_initial_state(init, n)).final_state.amplitudes();
          },
          py::arg("walk"), py::arg("init") = "plus");

    m.def("phase_aligned_distance",
          [](const Rows& u, const Rows& v) {
              return phase_aligned_distance(from_rows(u), from_rows(v));
          });

    m.def("verify_circuit",
          [](const std::string& text, double tolerance) {
              const GateCircuit circuit = parse_circuit_text(text);
              const EquivalenceReport report =
                  check_equivalence(schedule_unitary(transpile(circuit)),
                                    reference_gate_unitary(circuit), tolerance, true);
              py::dict out;
              out["distance"] = report.distance;
              out["phase"] = report.phase;
              out["tolerance"] = report.tolerance;
              out["pass"] = report.pass;
              return out;
          },
          py::arg("circuit_text"), py::arg("tolerance") = 1e-9);

    m.def("gadget_h", &gadget_h, py::arg("qubit"), py::arg("num_qubits"));
    m.def("gadget_t", &gadget_t, py::arg("qubit"), py::arg("num_qubits"));
    m.def("gadget_cx", &gadget_cx, py::arg("control"), py::arg("target"), py::arg("num_qubits"));

    m.def("schedule_to_walk", &schedule_to_dynamic_graph, py::arg("schedule"));
    m.def("walk_to_schedule", &dynamic_graph_to_schedule, py::arg("walk"));
}
