#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "maqw/schedule.hpp"
#include "maqw/transpile.hpp"
#include "maqw/walk.hpp"

namespace maqw {

inline constexpr const char* kFormatTag = "maqaoa-walk/1";

/// Error in the circuit text format; what() reads "<message>, line <line>".
class CircuitParseError : public std::runtime_error {
  public:
    CircuitParseError(int line, const std::string& message);
    int line() const { return line_; }

  private:
    int line_;
};

/// Text format: first non-comment line "qubits N", then one gate per line
/// ("H q", "T q", "CX c t"); '#' starts a comment; qubits are 1-based.
GateCircuit parse_circuit(std::istream& input);
GateCircuit parse_circuit_text(const std::string& text);
GateCircuit parse_circuit_file(const std::string& path);

nlohmann::json schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const nlohmann::json& j);

nlohmann::json dynamic_graph_to_json(const DynamicGraph& walk);
DynamicGraph dynamic_graph_from_json(const nlohmann::json& j);

/// "7π/4"-style rendering for angles within pi_multiple_snap of a multiple of
/// pi/4, plain decimals otherwise.
std::string format_angle(double radians);

std::string render_schedule_table(const Schedule& schedule);
std::string render_schedule_csv(const Schedule& schedule);

/// One line per basis state: binary label and the amplitude to 12 significant
/// digits.
std::string format_amplitudes(const Statevector& psi);

/// "plus" or "basis:<index>".
Statevector parse_initial_state(const std::string& spec, int num_qubits);

}  // namespace maqw
