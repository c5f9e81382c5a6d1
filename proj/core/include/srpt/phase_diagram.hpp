#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srpt/circuit.hpp"
#include "srpt/meanfield.hpp"
#include "srpt/thermal.hpp"

namespace srpt {

// Axes: ratio = N L_R / threshold (L_R is rescaled, all else fixed) and
// temperature in K. Rows come back in grid order, ratio-major.
struct PhaseDiagramGrid {
  std::vector<double> ratio;
  std::vector<double> temperature;
};

struct PhaseDiagramOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  bool critical_temperature = false;
  ThermalOptions thermal;
};

struct PhaseDiagramRow {
  std::size_t index = 0;
  double ratio = 0.0;
  double temperature = 0.0;  // K
  double l_r = 0.0;          // H
  double phi0 = 0.0;         // Wb
  double psi0 = 0.0;         // Wb
  Phase phase = Phase::Normal;
  std::optional<double> tc_lower, tc_upper;  // K
  std::optional<std::string> error;          // "Code: message" when the point failed
};

// Fig5b/5c with a junction at a half-quantum bias; throws TopologyMismatch,
// UnsupportedBias or ZeroJosephsonEnergy for a base spec without a threshold.
std::vector<PhaseDiagramRow> phase_diagram(const ValidatedSpec& base, const PhaseDiagramGrid& grid,
                                           const PhaseDiagramOptions& opt = {});

// One point; never throws, failures land in row.error.
PhaseDiagramRow phase_diagram_point(const ValidatedSpec& base, double threshold, double ratio,
                                    double temperature, const PhaseDiagramOptions& opt);

}  // namespace srpt
