#pragma once

#include <cmath>
#include <string>

#include "srpt/circuit.hpp"
#include "srpt/circuit_json.hpp"

namespace srpt::test {

inline ValidatedSpec load_spec(const std::string& name) {
  return validate_or_throw(load_circuit_spec(std::string(SRPT_SPEC_DIR) + "/" + name + ".json"));
}

inline std::string spec_path(const std::string& name) {
  return std::string(SRPT_SPEC_DIR) + "/" + name + ".json";
}

inline double phi0_r2() {
  return constants::reduced_flux_quantum * constants::reduced_flux_quantum;
}

// Fig5c cell with a half-quantum bias.
inline CircuitSpec bamba(int n, double l_r, double l_c, double e_j, double c_j = 1e-12,
                         double c_r = 1e-12, double f = 0.5) {
  CircuitSpec s;
  s.topology = Topology::Fig5c_BambaCircuit;
  s.n_cells = n;
  s.resonator = ResonatorParams{l_r, c_r};
  CellParams c;
  c.l_c = l_c;
  c.e_j = e_j;
  c.c_j = c_j;
  c.phi_ext_over_phi_q = f;
  s.cell = c;
  return s;
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace srpt::test
