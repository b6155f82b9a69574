#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "cws/circuit.hpp"
#include "cws/graph.hpp"
#include "cws/stabilizer.hpp"
#include "cws/standard_form.hpp"
#include "cws/verify.hpp"

namespace cws {

// Raised for malformed input files; carries a line/column position.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json code_to_json(const CwsCode& code);
CwsCode code_from_json(const nlohmann::json& j);

nlohmann::json stabilizer_to_json(const StabilizerPresentation& p);
StabilizerPresentation stabilizer_from_json(const nlohmann::json& j);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

nlohmann::json local_circuit_to_json(const LocalCliffordCircuit& c);

nlohmann::json report_to_json(const DetectionReport& report);

// Parses a whole file, translating syntax errors into ParseError with
// "line L, column C" positions and schema problems into ParseError too.
nlohmann::json load_json_file(const std::string& path);

void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace cws
