#include "maqw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "maqw/linalg.hpp"
#include "maqw/serialize.hpp"
#include "maqw/verify.hpp"

namespace maqw {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

json load_json_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open file '" + path + "'");
    return json::parse(file);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write file '" + out_path + "'");
    file << text;
}

void warn_on_noncommuting_mixers(const Schedule& schedule, std::ostream& err) {
    int index = 0;
    for (const auto& [gamma, beta] : schedule.layers()) {
        ++index;
        if (beta.is_zero()) continue;
        const double gap = beta_form_gap(beta);
        if (gap > default_tolerances().beta_form_warning) {
            err << "warning: layer " << index << " mixer edges do not commute; sum-form and "
                << "product-form evaluations differ by " << gap << "\n";
        }
    }
}

int cmd_transpile(const std::string& circuit_path, const std::string& format,
                  const std::string& out_path, std::ostream& out) {
    const Schedule schedule = transpile(parse_circuit_file(circuit_path));
    std::string text;
    if (format == "table") {
        text = render_schedule_table(schedule);
    } else if (format == "csv") {
        text = render_schedule_csv(schedule);
    } else {
        text = schedule_to_json(schedule).dump(2) + "\n";
    }
    emit(text, out_path, out);
    return kExitPass;
}

int cmd_simulate(const std::string& circuit_path, const std::string& schedule_path,
                 const std::string& init, bool trace, std::ostream& out, std::ostream& err) {
    Schedule schedule = circuit_path.empty()
                            ? schedule_from_json(load_json_file(schedule_path))
                            : transpile(parse_circuit_file(circuit_path));
    warn_on_noncommuting_mixers(schedule, err);

    const Statevector initial = parse_initial_state(init, schedule.num_qubits());
    const ScheduleRun run = run_schedule(schedule, initial);

    if (trace) {
        out << "initial state:\n" << format_amplitudes(initial);
        for (std::size_t i = 0; i < run.after_half_layer.size(); ++i) {
            const std::size_t layer = i / 2 + 1;
            const bool is_gamma = (i % 2 == 0);
            out << "after U(" << (is_gamma ? "γ" : "β") << layer << ","
                << (is_gamma ? "C" : "B") << "):\n"
                << format_amplitudes(run.after_half_layer[i]);
        }
    }
    out << "final state:\n" << format_amplitudes(run.final_state);
    return kExitPass;
}

int cmd_walk(const std::string& walk_path, const std::string& init, bool trace,
             std::ostream& out) {
    const DynamicGraph walk = dynamic_graph_from_json(load_json_file(walk_path));
    int num_qubits = 0;
    while ((std::size_t{1} << num_qubits) < walk.num_vertices()) ++num_qubits;

    const Statevector initial = parse_initial_state(init, num_qubits);
    const WalkRun run = run_walk(walk, initial);

    if (trace) {
        out << "initial state:\n" << format_amplitudes(initial);
        for (std::size_t i = 0; i < run.after_step.size(); ++i) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.12g", walk.steps()[i].second);
            out << "after step " << (i + 1) << " (t = " << buf << "):\n"
                << format_amplitudes(run.after_step[i]);
        }
    }
    out << "final state:\n" << format_amplitudes(run.final_state);
    return kExitPass;
}

int cmd_verify(const std::string& circuit_path, double tolerance, bool as_json,
               std::ostream& out) {
    const GateCircuit circuit = parse_circuit_file(circuit_path);
    const EquivalenceReport report = check_equivalence(
        schedule_unitary(transpile(circuit)), reference_gate_unitary(circuit), tolerance, true);

    if (as_json) {
        json j{{"distance", report.distance},
               {"phase", report.phase},
               {"tolerance", report.tolerance},
               {"pass", report.pass},
               {"worst", {{"row", report.worst_row}, {"col", report.worst_col},
                          {"abs", report.worst_abs}}}};
        out << j.dump(2) << "\n";
    } else {
        char buf[192];
        std::snprintf(buf, sizeof(buf),
                      "gates: %zu\ndistance: %.6g\nphase: %.6g\nworst entry: (%zu, %zu) |d| = "
                      "%.6g\ntolerance: %.6g\nresult: %s\n",
                      circuit.gates().size(), report.distance, report.phase, report.worst_row,
                      report.worst_col, report.worst_abs, report.tolerance,
                      report.pass ? "PASS" : "FAIL");
        out << buf;
    }
    return report.pass ? kExitPass : kExitVerifyFail;
}

int cmd_convert(const std::string& in_path, const std::string& out_path, std::ostream& out) {
    const json j = load_json_file(in_path);
    std::string text;
    if (j.is_object() && j.contains("layers")) {
        text = dynamic_graph_to_json(schedule_to_dynamic_graph(schedule_from_json(j))).dump(2) +
               "\n";
    } else if (j.is_object() && j.contains("steps")) {
        text = schedule_to_json(dynamic_graph_to_schedule(dynamic_graph_from_json(j))).dump(2) +
               "\n";
    } else {
        throw std::runtime_error("input JSON has neither 'layers' nor 'steps'");
    }
    emit(text, out_path, out);
    return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ma-QAOA schedules and quantum walks on dynamic graphs for {H, T, CX} circuits"};
    app.name("maqaoa-walk");
    app.require_subcommand(1);

    std::string circuit_path, schedule_path, walk_path, in_path, out_path;
    std::string format = "table";
    std::string init = "plus";
    double tolerance = 1e-9;
    bool trace = false;
    bool as_json = false;

    auto* transpile_cmd =
        app.add_subcommand("transpile", "Compile a circuit file into a schedule");
    transpile_cmd->add_option("circuit", circuit_path, "circuit file")->required();
    transpile_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    transpile_cmd->add_option("--out", out_path, "write output to a file");

    auto* simulate_cmd =
        app.add_subcommand("simulate", "Run a schedule on an initial state");
    auto* sim_circuit = simulate_cmd->add_option("--circuit", circuit_path, "circuit file");
    auto* sim_schedule = simulate_cmd->add_option("--schedule", schedule_path, "schedule JSON");
    sim_circuit->excludes(sim_schedule);
    simulate_cmd->add_option("--init", init, "plus or basis:<index>");
    simulate_cmd->add_flag("--trace", trace, "print the state after every half-layer");

    auto* walk_cmd = app.add_subcommand("walk", "Run a dynamic-graph walk");
    walk_cmd->add_option("walk", walk_path, "dynamic-graph JSON")->required();
    walk_cmd->add_option("--init", init, "plus or basis:<index>");
    walk_cmd->add_flag("--trace", trace, "print the state after every step");

    auto* verify_cmd =
        app.add_subcommand("verify", "Check a transpiled circuit against the exact gate unitary");
    verify_cmd->add_option("circuit", circuit_path, "circuit file")->required();
    verify_cmd->add_option("--tol", tolerance, "pass/fail tolerance");
    verify_cmd->add_flag("--json", as_json, "emit the report as JSON");

    auto* convert_cmd =
        app.add_subcommand("convert", "Convert schedule JSON <-> dynamic-graph JSON");
    convert_cmd->add_option("input", in_path, "schedule or dynamic-graph JSON")->required();
    convert_cmd->add_option("--out", out_path, "write output to a file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (app.got_subcommand(transpile_cmd))
            return cmd_transpile(circuit_path, format, out_path, out);
        if (app.got_subcommand(simulate_cmd)) {
            if (circuit_path.empty() == schedule_path.empty()) {
                err << "error: simulate needs exactly one of --circuit or --schedule\n";
                return kExitUsage;
            }
            return cmd_simulate(circuit_path, schedule_path, init, trace, out, err);
        }
        if (app.got_subcommand(walk_cmd)) return cmd_walk(walk_path, init, trace, out);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(circuit_path, tolerance, as_json, out);
        if (app.got_subcommand(convert_cmd)) return cmd_convert(in_path, out_path, out);
    } catch (const CircuitParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        err << "json error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace maqw
