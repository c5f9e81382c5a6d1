#include <gtest/gtest.h>

#include <numbers>

#include "srpt/circuit.hpp"
#include "srpt/circuit_json.hpp"
#include "srpt/errors.hpp"
#include "support.hpp"

using namespace srpt;

namespace {

bool has_violation(const ValidationResult& r, ViolationKind k, const std::string& field) {
  for (const auto& v : r.violations())
    if (v.kind == k && v.field == field) return true;
  return false;
}

}  // namespace

TEST(Circuit, TopologyNamesRoundTrip) {
  for (auto t : {Topology::Fig2_InductiveLC, Topology::Fig3_CapacitiveLC, Topology::Fig4_CapacitiveTline,
                 Topology::Fig5a_GeneralCoupling, Topology::Fig5b_InductivePerCell,
                 Topology::Fig5c_BambaCircuit, Topology::Fig5d_NoResonatorInductor,
                 Topology::Fig6_InductiveTline})
    EXPECT_EQ(parse_topology(topology_name(t)), t);
  EXPECT_FALSE(parse_topology("Fig7").has_value());
}

TEST(Circuit, TopologyClassMatchesFamilies) {
  EXPECT_EQ(classify_topology(Topology::Fig2_InductiveLC), TopologyClass::NoGoFamily);
  EXPECT_EQ(classify_topology(Topology::Fig3_CapacitiveLC), TopologyClass::NoGoFamily);
  EXPECT_EQ(classify_topology(Topology::Fig4_CapacitiveTline), TopologyClass::NoGoFamily);
  for (auto t : {Topology::Fig5a_GeneralCoupling, Topology::Fig5b_InductivePerCell,
                 Topology::Fig5c_BambaCircuit, Topology::Fig5d_NoResonatorInductor,
                 Topology::Fig6_InductiveTline})
    EXPECT_EQ(classify_topology(t), TopologyClass::NotConfirmedFamily);
}

TEST(Circuit, LcDerivedQuantities) {
  const ValidatedSpec s = test::load_spec("fig5c_above");
  const double l = 1e-9, c = 1e-12;
  EXPECT_NEAR(*s.derived().z_r, std::sqrt(l / c), 1e-12 * std::sqrt(l / c));
  EXPECT_NEAR(*s.derived().omega_c, 1.0 / std::sqrt(l * c), 1e-3);
  EXPECT_NEAR(s.units().energy_unit(), constants::hbar / std::sqrt(l * c), 1e-36);
  EXPECT_DOUBLE_EQ(s.derived().phi_ext_reduced, 0.5);
}

TEST(Circuit, TlineDerivedQuantities) {
  const ValidatedSpec s = test::load_spec("fig4");
  const double v = 1.0 / std::sqrt(4e-7 * 1.6e-10);
  EXPECT_NEAR(*s.derived().velocity, v, 1e-6 * v);
  EXPECT_NEAR(*s.derived().lambda_a, 2.0 * std::numbers::pi * v / 2e10, 1e-15);
  EXPECT_EQ(*s.derived().segments, 8);
  EXPECT_NEAR(*s.derived().mode_count, 8.0, 1e-12);
  EXPECT_NEAR(s.units().energy_unit(), constants::hbar * std::numbers::pi * v / 8e-3, 1e-36);
}

TEST(Circuit, Fig5dUsesParallelCouplingInductance) {
  const ValidatedSpec s = test::load_spec("fig5d");
  const double l_eff = 1e-10 / 2;
  EXPECT_NEAR(s.units().energy_unit(), constants::hbar / std::sqrt(l_eff * 1e-12), 1e-36);
  const ModeParams m = resonator_mode(s);
  EXPECT_NEAR(m.omega, 1.0 / std::sqrt(l_eff * 1e-12), 1e-3);
  EXPECT_FALSE(s.derived().omega_c.has_value());
}

TEST(Circuit, BiasIsReducedIntoUnitInterval) {
  auto s = test::bamba(1, 1e-9, 1e-10, 1e-22, 1e-15, 1e-12, 2.25);
  EXPECT_DOUBLE_EQ(validate_or_throw(s).derived().phi_ext_reduced, 0.25);
  s.cell->phi_ext_over_phi_q = -0.5;
  EXPECT_DOUBLE_EQ(validate_or_throw(s).derived().phi_ext_reduced, 0.5);
  s.cell->phi_ext_over_phi_q.reset();
  EXPECT_DOUBLE_EQ(validate_or_throw(s).derived().phi_ext_reduced, 0.5);  // Fig5c default
}

TEST(Circuit, RejectsNonPositiveElements) {
  auto s = test::bamba(1, -1e-9, 0.0, 1e-22);
  const ValidationResult r = validate(s);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_violation(r, ViolationKind::NonPositiveElement, "resonator.l_r"));
  EXPECT_TRUE(has_violation(r, ViolationKind::NonPositiveElement, "cell.l_c"));
  EXPECT_THROW(r.value(), Error);
}

TEST(Circuit, ZeroJosephsonEnergyIsAllowed) {
  auto s = test::bamba(1, 1e-9, 1e-10, 0.0);
  EXPECT_TRUE(validate(s).ok());
  s.cell->e_j = -1e-22;
  EXPECT_FALSE(validate(s).ok());
}

TEST(Circuit, RejectsFieldsForeignToTopology) {
  CircuitSpec s;
  s.topology = Topology::Fig3_CapacitiveLC;
  s.resonator = ResonatorParams{1e-9, 1e-12};
  s.cell = CellParams{};
  s.cell->l_c = 1e-10;
  const ValidationResult r = validate(s);
  EXPECT_TRUE(has_violation(r, ViolationKind::TopologyFieldMismatch, "cell"));

  CircuitSpec d = test::bamba(2, 1e-9, 1e-10, 1e-22);
  d.topology = Topology::Fig5d_NoResonatorInductor;
  EXPECT_TRUE(has_violation(validate(d), ViolationKind::TopologyFieldMismatch, "resonator.l_r"));
}

TEST(Circuit, JunctionFieldsComeTogether) {
  CircuitSpec s;
  s.topology = Topology::Fig5b_InductivePerCell;
  s.n_cells = 2;
  s.resonator = ResonatorParams{1e-9, 1e-12};
  s.cell = CellParams{};
  s.cell->l_c = 1e-10;
  s.cell->e_j = 1e-22;
  EXPECT_TRUE(has_violation(validate(s), ViolationKind::TopologyFieldMismatch, "cell.c_j"));
  s.cell->c_j = 1e-15;
  EXPECT_TRUE(validate(s).ok());
}

TEST(Circuit, RejectsNonIntegerSegments) {
  CircuitSpec s = validate_or_throw(load_circuit_spec(test::spec_path("fig4"))).spec();
  s.tline->dx = 3e-3;
  EXPECT_TRUE(has_violation(validate(s), ViolationKind::NonIntegerSegments, "tline.dx"));
  s.tline->dx = 8e-3;  // a single segment
  EXPECT_TRUE(has_violation(validate(s), ViolationKind::NonIntegerSegments, "tline.dx"));
}

TEST(Circuit, JsonRoundTrip) {
  for (const char* name : {"fig2_rf_squid", "fig4", "fig5c_above", "fig5d", "fig6"}) {
    const CircuitSpec a = load_circuit_spec(test::spec_path(name));
    const CircuitSpec b = circuit_spec_from_json(nlohmann::json::parse(circuit_spec_to_json(a).dump()));
    EXPECT_EQ(circuit_spec_to_json(a), circuit_spec_to_json(b)) << name;
  }
}

TEST(Circuit, JsonRejectsStructuralProblems) {
  using nlohmann::json;
  EXPECT_THROW(circuit_spec_from_json(json::parse(R"({"topology":"Nope"})")), Error);
  EXPECT_THROW(circuit_spec_from_json(json::parse(
                   R"({"topology":"Fig3_CapacitiveLC","resonator":{"l_r":1e-9,"c_r":1e-12},"extra":1})")),
               Error);
  EXPECT_THROW(circuit_spec_from_json(json::parse(
                   R"({"topology":"Fig3_CapacitiveLC","resonator":{"l_r":"big","c_r":1e-12}})")),
               Error);
}

TEST(Units, ConversionsInvert) {
  const UnitSystem u(3.3e-24);
  EXPECT_NEAR(u.flux_si(u.flux(1.7e-16)), 1.7e-16, 1e-30);
  EXPECT_NEAR(u.charge_si(u.charge(3e-19)), 3e-19, 1e-33);
  EXPECT_NEAR(u.inverse_inductance_si(u.inverse_inductance(1e-9)), 1e9, 1e-3);
  EXPECT_NEAR(u.temperature_si(u.thermal_energy(4.2)), 4.2, 1e-12);
  // [phi, q] = i hbar in SI becomes 1 in internal units.
  EXPECT_NEAR(u.flux_unit() * u.charge_unit(), constants::hbar, 1e-48);
}

TEST(Units, JosephsonArgumentHasUnitCoefficient) {
  const UnitSystem u(1.0);
  EXPECT_NEAR(2.0 * std::numbers::pi * u.flux_si(1.0) / constants::flux_quantum, 1.0, 1e-15);
}
