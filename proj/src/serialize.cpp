#include "maqw/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "maqw/linalg.hpp"

namespace maqw {

using nlohmann::json;

CircuitParseError::CircuitParseError(int line, const std::string& message)
    : std::runtime_error(message + ", line " + std::to_string(line)), line_(line) {}

namespace {

int parse_int_token(const std::string& token, int line, const std::string& what) {
    try {
        std::size_t consumed = 0;
        const int value = std::stoi(token, &consumed);
        if (consumed != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw CircuitParseError(line, "expected an integer " + what + ", got '" + token + "'");
    }
}

int check_parsed_qubit(int qubit, int num_qubits, int line) {
    if (qubit < 1 || qubit > num_qubits) {
        std::ostringstream msg;
        msg << "qubit " << qubit << " out of range [1, " << num_qubits << "]";
        throw CircuitParseError(line, msg.str());
    }
    return qubit;
}

}  // namespace

GateCircuit parse_circuit(std::istream& input) {
    int line_number = 0;
    int num_qubits = -1;
    std::vector<Gate> gates;

    std::string raw;
    while (std::getline(input, raw)) {
        ++line_number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);

        std::istringstream line(raw);
        std::vector<std::string> tokens;
        for (std::string token; line >> token;) tokens.push_back(token);
        if (tokens.empty()) continue;

        if (num_qubits < 0) {
            if (tokens[0] != "qubits")
                throw CircuitParseError(line_number,
                                        "expected 'qubits N' header, got '" + tokens[0] + "'");
            if (tokens.size() != 2)
                throw CircuitParseError(line_number, "expected 'qubits N' header");
            num_qubits = parse_int_token(tokens[1], line_number, "qubit count");
            if (num_qubits < 1 || num_qubits > kMaxQubits) {
                std::ostringstream msg;
                msg << "qubit count " << num_qubits << " outside [1, " << kMaxQubits << "]";
                throw CircuitParseError(line_number, msg.str());
            }
            continue;
        }

        const std::string& kind = tokens[0];
        if (kind == "H" || kind == "T") {
            if (tokens.size() != 2)
                throw CircuitParseError(line_number, kind + " expects one qubit argument");
            const int q = check_parsed_qubit(
                parse_int_token(tokens[1], line_number, "qubit"), num_qubits, line_number);
            gates.push_back(kind == "H" ? Gate::h(q) : Gate::t(q));
        } else if (kind == "CX") {
            if (tokens.size() != 3)
                throw CircuitParseError(line_number, "CX expects control and target qubits");
            const int control = check_parsed_qubit(
                parse_int_token(tokens[1], line_number, "control"), num_qubits, line_number);
            const int target = check_parsed_qubit(
                parse_int_token(tokens[2], line_number, "target"), num_qubits, line_number);
            if (control == target)
                throw CircuitParseError(line_number, "control equals target");
            gates.push_back(Gate::cx(control, target));
        } else {
            throw CircuitParseError(line_number, "unknown gate '" + kind + "'");
        }
    }

    if (num_qubits < 0) throw CircuitParseError(line_number, "missing 'qubits N' header");
    return GateCircuit(num_qubits, std::move(gates));
}

GateCircuit parse_circuit_text(const std::string& text) {
    std::istringstream stream(text);
    return parse_circuit(stream);
}

GateCircuit parse_circuit_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open circuit file '" + path + "'");
    return parse_circuit(file);
}

json schedule_to_json(const Schedule& schedule) {
    json layers = json::array();
    for (const auto& [gamma, beta] : schedule.layers()) {
        json betas = json::array();
        for (const auto& [edge, angle] : beta.edge_angles())
            betas.push_back({{"u", edge.first}, {"w", edge.second}, {"angle", angle}});
        layers.push_back({{"gamma", gamma.angles()}, {"beta", std::move(betas)}});
    }
    return json{{"format", kFormatTag}, {"n", schedule.num_qubits()}, {"layers", std::move(layers)}};
}

namespace {

void check_format_tag(const json& j, const char* what) {
    if (!j.is_object()) throw std::runtime_error(std::string(what) + ": expected a JSON object");
    if (!j.contains("format") || j.at("format") != kFormatTag)
        throw std::runtime_error(std::string(what) + ": missing or unsupported format tag (want \"" +
                                 kFormatTag + "\")");
}

}  // namespace

Schedule schedule_from_json(const json& j) {
    check_format_tag(j, "schedule");
    if (!j.contains("layers")) throw std::runtime_error("schedule: missing 'layers'");
    const int num_qubits = j.at("n").get<int>();
    check_qubit_count(num_qubits);

    std::vector<Schedule::Layer> layers;
    for (const auto& layer : j.at("layers")) {
        std::vector<double> gamma = layer.at("gamma").get<std::vector<double>>();
        BetaLayer::EdgeAngles angles;
        for (const auto& entry : layer.at("beta")) {
            const BetaLayer::Edge edge{entry.at("u").get<std::size_t>(),
                                       entry.at("w").get<std::size_t>()};
            if (!angles.emplace(edge, entry.at("angle").get<double>()).second) {
                std::ostringstream msg;
                msg << "schedule: duplicate beta edge (" << edge.first << ", " << edge.second
                    << ")";
                throw std::runtime_error(msg.str());
            }
        }
        layers.emplace_back(GammaLayer(num_qubits, std::move(gamma)),
                            BetaLayer(num_qubits, angles));
    }
    return Schedule(num_qubits, std::move(layers));
}

json dynamic_graph_to_json(const DynamicGraph& walk) {
    int num_qubits = 0;
    while ((std::size_t{1} << num_qubits) < walk.num_vertices()) ++num_qubits;

    json steps = json::array();
    for (const auto& [graph, time] : walk.steps()) {
        json loops = json::array();
        for (const auto& [v, weight] : graph.self_loops())
            loops.push_back({{"v", v}, {"w", weight}});
        json edges = json::array();
        for (const auto& [edge, weight] : graph.edges())
            edges.push_back({{"u", edge.first}, {"v", edge.second}, {"w", weight}});
        steps.push_back({{"time", time}, {"loops", std::move(loops)}, {"edges", std::move(edges)}});
    }
    return json{{"format", kFormatTag}, {"n", num_qubits}, {"steps", std::move(steps)}};
}

DynamicGraph dynamic_graph_from_json(const json& j) {
    check_format_tag(j, "dynamic graph");
    if (!j.contains("steps")) throw std::runtime_error("dynamic graph: missing 'steps'");
    const int num_qubits = j.at("n").get<int>();
    check_qubit_count(num_qubits);

    DynamicGraph walk(std::size_t{1} << num_qubits);
    for (const auto& step : j.at("steps")) {
        WeightedGraph graph(std::size_t{1} << num_qubits);
        for (const auto& loop : step.at("loops"))
            graph.add_self_loop(loop.at("v").get<std::size_t>(), loop.at("w").get<double>());
        for (const auto& edge : step.at("edges"))
            graph.add_edge(edge.at("u").get<std::size_t>(), edge.at("v").get<std::size_t>(),
                           edge.at("w").get<double>());
        walk.add_step(std::move(graph), step.at("time").get<double>());
    }
    return walk;
}

std::string format_angle(double radians) {
    const double quarter = std::numbers::pi / 4.0;
    const long long k = std::llround(radians / quarter);
    if (k >= 0 && std::abs(radians - k * quarter) <= default_tolerances().pi_multiple_snap) {
        if (k == 0) return "0";
        const long long g = std::gcd(k, 4ll);
        const long long num = k / g;
        const long long den = 4 / g;
        std::string out = num == 1 ? "π" : std::to_string(num) + "π";
        if (den != 1) out += "/" + std::to_string(den);
        return out;
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", radians);
    return buf;
}

namespace {

std::string join_angles(const std::vector<double>& angles) {
    std::string out = "(";
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (i) out += ", ";
        out += format_angle(angles[i]);
    }
    return out + ")";
}

}  // namespace

std::string render_schedule_table(const Schedule& schedule) {
    // One row per half-layer; beta rows list every hypercube edge in
    // lexicographic order so the columns line up across layers.
    std::vector<std::pair<std::string, std::string>> rows;
    int index = 0;
    for (const auto& [gamma, beta] : schedule.layers()) {
        ++index;
        rows.emplace_back("U(γ" + std::to_string(index) + ",C)", join_angles(gamma.angles()));
        std::vector<double> beta_vector;
        for (const auto& [edge, angle] : full_edge_angle_vector(beta))
            beta_vector.push_back(angle);
        rows.emplace_back("U(β" + std::to_string(index) + ",B)", join_angles(beta_vector));
    }

    // γ/β are two UTF-8 bytes but single display columns.
    const std::size_t label_width = 6 + std::to_string(index).size();
    std::ostringstream out;
    out << "U" << std::string(label_width + 2 - 1, ' ') << "Angle vector\n";
    for (const auto& [label, angles] : rows) {
        const std::size_t display = label.size() - 1;
        out << label << std::string(label_width + 2 - display, ' ') << angles << "\n";
    }
    return out.str();
}

std::string render_schedule_csv(const Schedule& schedule) {
    std::ostringstream out;
    out << "index,kind,angles\n";
    char buf[48];
    int index = 0;
    for (const auto& [gamma, beta] : schedule.layers()) {
        ++index;
        out << index << ",gamma";
        for (double angle : gamma.angles()) {
            std::snprintf(buf, sizeof(buf), "%.17g", angle);
            out << "," << buf;
        }
        out << "\n" << index << ",beta";
        for (const auto& [edge, angle] : full_edge_angle_vector(beta)) {
            std::snprintf(buf, sizeof(buf), "%.17g", angle);
            out << "," << buf;
        }
        out << "\n";
    }
    return out.str();
}

std::string format_amplitudes(const Statevector& psi) {
    std::ostringstream out;
    char buf[96];
    const int n = psi.num_qubits();
    for (std::size_t z = 0; z < psi.dim(); ++z) {
        std::string bits(n, '0');
        for (int q = 1; q <= n; ++q)
            if (qubit_bit(z, q, n)) bits[q - 1] = '1';
        const cx amp = psi.amplitudes()[z];
        const double re = amp.real() + 0.0;  // flush -0
        const double im = amp.imag() + 0.0;
        std::snprintf(buf, sizeof(buf), "|%s>  %.12g %c %.12gi", bits.c_str(), re,
                      im < 0.0 ? '-' : '+', std::abs(im));
        out << buf << "\n";
    }
    return out.str();
}

Statevector parse_initial_state(const std::string& spec, int num_qubits) {
    if (spec == "plus") return Statevector::plus_state(num_qubits);
    if (spec.rfind("basis:", 0) == 0) {
        const std::string index_text = spec.substr(6);
        unsigned long long index = 0;
        try {
            std::size_t consumed = 0;
            index = std::stoull(index_text, &consumed);
            if (consumed != index_text.size()) throw std::invalid_argument(index_text);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad basis index '" + index_text + "' in init spec");
        }
        return Statevector::basis_state(num_qubits, index);
    }
    throw std::invalid_argument("unknown init spec '" + spec + "' (use plus or basis:<index>)");
}

}  // namespace maqw
