#pragma once

#include "json.hpp"
#include "srpt/hamiltonian.hpp"

namespace srpt {

// Canonical derive document: variable table, dense row-major matrices in SI
// and internal units, symbolic term list, cosine terms and black-box access.
// Numbers carry 12 significant digits.
nlohmann::ordered_json hamiltonian_to_json(const HamiltonianModel& m);

// Black-box argument strings: port slots plus any slot that is no longer a
// bare variable.
std::vector<std::string> blackbox_arguments(const HamiltonianModel& m);

nlohmann::ordered_json matrix_to_json(const Eigen::MatrixXd& a, const std::string& units);
nlohmann::ordered_json vector_to_json(const Eigen::VectorXd& v, const std::string& units);

}  // namespace srpt
