#include "srpt/phase_diagram.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "srpt/errors.hpp"

namespace srpt {

PhaseDiagramRow phase_diagram_point(const ValidatedSpec& base, double threshold, double ratio,
                                    double temperature, const PhaseDiagramOptions& opt) {
  PhaseDiagramRow row;
  row.ratio = ratio;
  row.temperature = temperature;
  row.l_r = ratio * threshold / base.n_cells();
  try {
    CircuitSpec s = base.spec();
    s.resonator->l_r = row.l_r;
    const ValidatedSpec spec = validate_or_throw(s);
    const EffectivePotential ep = effective_potential(spec);
    if (temperature == 0.0) {
      const MeanFieldResult mf = minimize_potential(ep);
      row.phi0 = mf.phi0;
      row.psi0 = mf.psi0;
      row.phase = mf.phase;
    } else {
      const ThermalOrder o = phi0_T(spec, temperature, opt.thermal);
      row.phi0 = o.phi0;
      row.psi0 = o.psi0;
      row.phase = std::abs(o.phi0) > phase_flux_tolerance(ep) ? Phase::Superradiant : Phase::Normal;
    }
    if (opt.critical_temperature && critical_inductance(ep).superradiant) {
      try {
        const CriticalTemperature tc = critical_temperature(spec, opt.thermal);
        row.tc_lower = tc.lower;
        row.tc_upper = tc.upper;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotSuperradiantAtZeroT) throw;
      }
    }
  } catch (const Error& e) {
    row.error = std::string(error_code_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    row.error = std::string("error: ") + e.what();
  }
  return row;
}

std::vector<PhaseDiagramRow> phase_diagram(const ValidatedSpec& base, const PhaseDiagramGrid& grid,
                                           const PhaseDiagramOptions& opt) {
  const CriticalInductance ci = critical_inductance(effective_potential(base));
  if (!std::isfinite(ci.threshold))
    throw Error(ErrorCode::UnsupportedBias, "threshold is infinite at zero flux bias");
  const std::size_t nt = grid.temperature.size();
  const std::size_t total = grid.ratio.size() * nt;
  std::vector<PhaseDiagramRow> rows(total);
  if (total == 0) return rows;

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      rows[i] = phase_diagram_point(base, ci.threshold, grid.ratio[i / nt], grid.temperature[i % nt], opt);
      rows[i].index = i;
    }
  };
  unsigned n = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, total));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace srpt
