#include <gtest/gtest.h>

#include <cmath>

#include "otto/core.hpp"
#include "reference_values.hpp"

namespace ref = otto::reference;
using otto::CycleParams;

namespace {

CycleParams at(double r, double xi) { return CycleParams{}.with_r(r).with_xi(xi); }

}  // namespace

TEST(Constants, HbarOmegaC) {
  EXPECT_NEAR(CycleParams{}.energy_unit_pev(), ref::hbar_omega_c_pev, 1e-12);
  EXPECT_NEAR(CycleParams{}.energy_unit_pev(), 4.135667696, 1e-9);
}

TEST(Validate, RejectsEachField) {
  const auto field_of = [](CycleParams p) {
    try {
      otto::validate(p);
    } catch (const otto::DomainError& e) {
      return e.field();
    }
    return std::string();
  };
  CycleParams p;
  EXPECT_EQ(field_of(p), "");
  p = {};
  p.beta_c = 0.0;
  EXPECT_EQ(field_of(p), "beta_c");
  p = {};
  p.omega_c = -1.0;
  EXPECT_EQ(field_of(p), "omega_c");
  p = {};
  p.omega_ratio = 1.0;
  EXPECT_EQ(field_of(p), "omega_ratio");
  p = {};
  p.beta_ratio = 0.0;
  EXPECT_EQ(field_of(p), "beta_ratio");
  EXPECT_EQ(field_of(at(-0.1, 0.0)), "r");
  EXPECT_EQ(field_of(at(0.0, 0.5000001)), "xi");
  EXPECT_EQ(field_of(at(0.0, -1e-9)), "xi");
  EXPECT_EQ(field_of(at(std::nan(""), 0.0)), "r");
  EXPECT_EQ(field_of(at(0.0, 0.5)), "");
}

TEST(Validate, HotBathMayBeColderThanCold) {
  CycleParams p;
  p.beta_ratio = 2.5;
  EXPECT_NO_THROW(otto::validate(p));
}

TEST(DeriveAngles, DefaultMachine) {
  const auto a = otto::derive_angles(at(0.0, 0.0));
  EXPECT_NEAR(a.theta_c, ref::theta_c, 1e-15);
  EXPECT_NEAR(a.theta_h, ref::theta_h, 1e-15);
  EXPECT_DOUBLE_EQ(a.zeta, 1.0);
  EXPECT_NEAR(a.tanh_c(), ref::tanh_c, 1e-15);
  EXPECT_NEAR(a.tanh_h(), ref::tanh_h, 1e-15);
}

TEST(DeriveAngles, SqueezingFactor) {
  EXPECT_NEAR(otto::derive_angles(at(1.0, 0.0)).zeta, ref::zeta_r1, 1e-16);
  EXPECT_NEAR(ref::zeta_r1, 0.070651, 1e-6);
  EXPECT_EQ(otto::squeezing_factor(400.0), 0.0);
}

TEST(DeriveAngles, RejectsZeroBeta) {
  CycleParams p;
  p.beta_c = 0.0;
  EXPECT_THROW(otto::derive_angles(p), otto::DomainError);
}

TEST(CycleEnergetics, ReferencePoints) {
  const auto quasi = otto::cycle_energetics(at(0.0, 0.0));
  EXPECT_NEAR(quasi.q_cold, ref::qc_00, 1e-14);
  EXPECT_NEAR(quasi.q_hot, ref::qh_00, 1e-14);
  EXPECT_NEAR(quasi.w_net, ref::w_00, 1e-14);

  const auto engine = otto::cycle_energetics(at(1.0, 0.2));
  EXPECT_NEAR(engine.q_cold, ref::qc_engine, 1e-14);
  EXPECT_NEAR(engine.q_hot, ref::qh_engine, 1e-14);
  EXPECT_NEAR(engine.w_net, ref::w_engine, 1e-14);
  EXPECT_FALSE(engine.eta.has_value());
}

TEST(CycleEnergetics, FirstLawClosure) {
  for (double r : {0.0, 0.3, 0.9, 2.0})
    for (double xi : {0.0, 0.17, 0.5}) {
      const auto o = otto::cycle_energetics(at(r, xi));
      EXPECT_NEAR(o.q_cold + o.q_hot + o.w_net, 0.0, 1e-15);
    }
}

TEST(CycleEnergetics, PevConversion) {
  const CycleParams p = at(1.0, 0.2);
  const auto o = otto::in_units(otto::cycle_energetics(p), p, otto::EnergyUnit::pev);
  EXPECT_NEAR(o.q_hot, ref::qh_engine * ref::hbar_omega_c_pev, 1e-13);
}

TEST(Efficiency, OttoLimitWhenQuasiStatic) {
  const auto eta = otto::efficiency(at(1.0, 0.0));
  ASSERT_TRUE(eta);
  EXPECT_NEAR(*eta, 1.0 - 1.0 / 3.5, 1e-15);
}

TEST(Efficiency, FiniteTime) {
  const auto eta = otto::efficiency(at(1.0, 0.2));
  ASSERT_TRUE(eta);
  EXPECT_NEAR(*eta, ref::eta_engine, 1e-14);
  EXPECT_NEAR(otto::efficiency_via_ratio(at(1.0, 0.2)), ref::eta_engine, 1e-14);
}

TEST(Efficiency, AbsentOutsideEngine) {
  EXPECT_FALSE(otto::efficiency(at(0.5, 0.2)));
  EXPECT_FALSE(otto::efficiency(at(0.0, 0.0)));
}

TEST(Cop, OttoLimitWhenQuasiStatic) {
  const auto c = otto::cop(at(0.0, 0.0));
  ASSERT_TRUE(c);
  EXPECT_NEAR(*c, 0.4, 1e-15);
}

TEST(Cop, FiniteTime) {
  const auto c = otto::cop(at(0.0, 0.1));
  ASSERT_TRUE(c);
  EXPECT_NEAR(*c, ref::cop_fridge, 1e-14);
  EXPECT_NEAR(otto::cop_via_ratio(at(0.0, 0.1)), ref::cop_fridge, 1e-14);
}

TEST(Cop, AbsentOutsideRefrigerator) { EXPECT_FALSE(otto::cop(at(1.0, 0.2))); }

TEST(FiniteTimeRatio, UnityWhenQuasiStatic) {
  for (double r : {0.0, 0.3, 0.7, 1.4}) EXPECT_DOUBLE_EQ(otto::finite_time_ratio(at(r, 0.0)).ratio, 1.0);
}

TEST(FiniteTimeRatio, ReferencePoints) {
  const auto engine = otto::finite_time_ratio(at(1.0, 0.2));
  EXPECT_NEAR(engine.f, ref::f_engine, 1e-14);
  EXPECT_NEAR(engine.g, ref::g_engine, 1e-14);
  EXPECT_NEAR(engine.ratio, ref::ratio_engine, 1e-13);
  const auto fridge = otto::finite_time_ratio(at(0.0, 0.1));
  EXPECT_NEAR(fridge.f, ref::f_fridge, 1e-14);
  EXPECT_NEAR(fridge.g, ref::g_fridge, 1e-14);
  EXPECT_NEAR(fridge.ratio, ref::ratio_fridge, 1e-14);
}

TEST(FiniteTimeRatio, SingularWhenTanhBalanceVanishes) {
  // θ_c = θ_h makes tanhθ_c − ζ tanhθ_h exactly zero at r = 0.
  CycleParams p = at(0.0, 0.1);
  p.omega_ratio = 2.0;
  p.beta_ratio = 0.5;
  EXPECT_THROW(otto::finite_time_ratio(p), otto::SingularityError);
  // The energetics stay finite there.
  const auto o = otto::cycle_energetics(p);
  EXPECT_TRUE(std::isfinite(o.w_net));
}

TEST(EngineXiBound, ReferencePoints) {
  const auto bound = otto::engine_xi_bound(at(1.0, 0.0));
  ASSERT_TRUE(bound);
  EXPECT_NEAR(*bound, ref::engine_bound_r1, 1e-14);
  EXPECT_FALSE(otto::engine_xi_bound(at(0.0, 0.0)));
  // Just above the switching point the bound is tiny but present.
  const auto near = otto::engine_xi_bound(at(0.487395, 0.0));
  ASSERT_TRUE(near);
  EXPECT_NEAR(*near, ref::engine_bound_r0487395, 1e-14);
  const auto at_switch = otto::engine_xi_bound(at(ref::switching_r, 0.0));
  EXPECT_TRUE(!at_switch || *at_switch < 1e-14);
}

TEST(EngineXiBound, IgnoresXi) {
  EXPECT_EQ(otto::engine_xi_bound(at(1.0, 0.4)), otto::engine_xi_bound(at(1.0, 0.0)));
}

TEST(FridgeXiBound, ReferencePoints) {
  const auto bound = otto::fridge_xi_bound(at(0.0, 0.0));
  ASSERT_TRUE(bound);
  EXPECT_NEAR(*bound, ref::fridge_bound_r0, 1e-14);
  EXPECT_FALSE(otto::fridge_xi_bound(at(0.487395, 0.0)));
  EXPECT_FALSE(otto::fridge_xi_bound(at(1.0, 0.0)));
}

TEST(OttoLimits, Values) {
  const auto default_machine = otto::otto_limits(3.5);
  EXPECT_NEAR(default_machine.eta_otto, 0.714285714285714, 1e-14);
  EXPECT_NEAR(default_machine.cop_otto, 0.4, 1e-15);
  const auto two = otto::otto_limits(2.0);
  EXPECT_DOUBLE_EQ(two.eta_otto, 0.5);
  EXPECT_DOUBLE_EQ(two.cop_otto, 1.0);
  EXPECT_NEAR(default_machine.cop_otto, 1.0 / default_machine.eta_otto - 1.0, 1e-15);
  EXPECT_THROW(otto::otto_limits(1.0), otto::DomainError);
}

TEST(GeneralizedRelation, QuasiStaticProductIsFrequencyRatio) {
  for (double r : {0.0, 0.2, 0.9}) {
    EXPECT_LT(otto::generalized_relation_residual(at(r, 0.0)), 1e-15);
  }
}

TEST(GeneralizedRelation, FiniteTimeProduct) {
  const auto f = otto::formal_ratios(at(0.0, 0.1));
  EXPECT_NEAR(f.eta, ref::eta_formal_fridge, 1e-14);
  EXPECT_NEAR(f.cop, ref::cop_fridge, 1e-14);
  EXPECT_NEAR(f.eta * f.cop, ref::ratio_fridge / 3.5, 1e-14);
  EXPECT_LT(otto::generalized_relation_residual(at(0.0, 0.1)), 1e-15);
}

TEST(GeneralizedRelation, RejectsZeroHeat) {
  // ξ = 0 at the switching configuration with θ_c = θ_h: every energy is exactly zero.
  CycleParams p = at(0.0, 0.0);
  p.omega_ratio = 2.0;
  p.beta_ratio = 0.5;
  EXPECT_THROW(otto::formal_ratios(p), otto::SingularityError);
}
