#pragma once

#include <string>

#include "json.hpp"
#include "srpt/circuit.hpp"

namespace srpt {

// Reads a circuit spec document. Structural problems (bad JSON types, unknown
// topology, unknown keys) throw Error(InvalidSpec); element values are not
// checked here, that is validate()'s job.
CircuitSpec circuit_spec_from_json(const nlohmann::json& doc);
CircuitSpec load_circuit_spec(const std::string& path);

nlohmann::ordered_json circuit_spec_to_json(const CircuitSpec& spec);
nlohmann::ordered_json derived_to_json(const ValidatedSpec& spec);
nlohmann::ordered_json violations_to_json(const std::vector<Violation>& violations);

// Human-readable description of the accepted document, used by `--help`.
std::string circuit_spec_schema_help();

}  // namespace srpt
