#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "srpt/meanfield.hpp"
#include "srpt/nogo.hpp"
#include "srpt/partition.hpp"
#include "srpt/phase_diagram.hpp"
#include "srpt/spectrum.hpp"
#include "srpt/thermal.hpp"

namespace srpt::cli {

using Json = nlohmann::ordered_json;

Json verdict_to_json(const Verdict& v);
Json decoupling_to_json(const DecouplingResult& d);
Json meanfield_to_json(const MeanFieldResult& r);
Json competition_to_json(const CompetitionReport& r);
Json unitary_to_json(const UnitaryReport& r);
Json assumption_a_to_json(const AssumptionA& a);

// CSV with a header row; every number has 12 significant digits.
std::string phase_diagram_csv(const std::vector<PhaseDiagramRow>& rows);
Json phase_diagram_json(const std::vector<PhaseDiagramRow>& rows);

}  // namespace srpt::cli
