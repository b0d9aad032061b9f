#pragma once

#include <cmath>
#include <optional>

#include "otto/constants.hpp"
#include "otto/errors.hpp"
#include "otto/params.hpp"

namespace otto {

/// Dimensionless inputs of the closed forms: θ = ½βħω for each bath and the squeezing
/// factor ζ = 1/cosh²(2r), which scales the hot-bath steady inversion.
struct DerivedAngles {
  double theta_c = 0.0;
  double theta_h = 0.0;
  double zeta = 1.0;

  double tanh_c() const { return std::tanh(theta_c); }
  double tanh_h() const { return std::tanh(theta_h); }
  /// tanhθ_c − ζ tanhθ_h; vanishes at the quasi-static engine/refrigerator switch.
  double population_gap() const { return tanh_c() - zeta * tanh_h(); }
};

inline double squeezing_factor(double r) {
  const double c = std::cosh(2.0 * r);
  return 1.0 / (c * c);
}

inline DerivedAngles derive_angles(const CycleParams& p) {
  validate(p);
  const double hbar = PhysicalConstants::hbar;
  return {0.5 * p.beta_c * hbar * p.omega_c, 0.5 * p.beta_h() * hbar * p.omega_h(),
          squeezing_factor(p.r)};
}

/// Heats and work of one cycle in units of ħω_c. Positive heat flows into the working
/// substance; negative work is delivered by it.
struct CycleOutcome {
  double q_cold = 0.0;
  double q_hot = 0.0;
  double w_net = 0.0;
  std::optional<double> eta;
  std::optional<double> cop;
};

enum class EnergyUnit { hbar_omega_c, pev };

/// Rescales the energies of an outcome computed for `p`; the ratios are unitless.
inline CycleOutcome in_units(CycleOutcome outcome, const CycleParams& p, EnergyUnit unit) {
  if (unit == EnergyUnit::pev) {
    const double scale = p.energy_unit_pev();
    outcome.q_cold *= scale;
    outcome.q_hot *= scale;
    outcome.w_net *= scale;
  }
  return outcome;
}

inline CycleOutcome cycle_energetics(const CycleParams& p) {
  const DerivedAngles a = derive_angles(p);
  const double tc = a.tanh_c();
  const double th = a.tanh_h();
  const double gap = tc - a.zeta * th;
  CycleOutcome out;
  out.q_cold = -0.5 * gap - p.xi * a.zeta * th;
  out.q_hot = 0.5 * p.omega_ratio * gap - p.xi * p.omega_ratio * tc;
  out.w_net = -(out.q_cold + out.q_hot);
  return out;
}

inline bool engine_signs(const CycleOutcome& o) {
  return o.q_hot > 0.0 && o.q_cold < 0.0 && o.w_net < 0.0;
}

inline bool refrigerator_signs(const CycleOutcome& o) {
  return o.q_cold > 0.0 && o.q_hot < 0.0 && o.w_net > 0.0;
}

/// η = −W_net/Q_h, present only while the cycle runs as an engine.
inline std::optional<double> efficiency(const CycleParams& p) {
  const CycleOutcome o = cycle_energetics(p);
  if (!engine_signs(o)) return std::nullopt;
  return -o.w_net / o.q_hot;
}

/// COP = Q_c/W_net, present only while the cycle runs as a refrigerator.
inline std::optional<double> cop(const CycleParams& p) {
  const CycleOutcome o = cycle_energetics(p);
  if (!refrigerator_signs(o)) return std::nullopt;
  return o.q_cold / o.w_net;
}

/// Energetics with η and COP filled where they are defined.
inline CycleOutcome evaluate(const CycleParams& p) {
  CycleOutcome o = cycle_energetics(p);
  if (engine_signs(o)) o.eta = -o.w_net / o.q_hot;
  if (refrigerator_signs(o)) o.cop = o.q_cold / o.w_net;
  return o;
}

inline constexpr double singular_gap_tolerance = 1e-15;

/// Finite-time correction R = (1 + 2ξF)/(1 − 2ξG) and its two ingredients.
struct RatioTerms {
  double f = 0.0;
  double g = 0.0;
  double ratio = 1.0;
};

/// Throws SingularityError at the quasi-static switching point, where F and G diverge.
inline RatioTerms finite_time_ratio(const CycleParams& p) {
  const DerivedAngles a = derive_angles(p);
  const double gap = a.population_gap();
  if (std::abs(gap) < singular_gap_tolerance) {
    throw SingularityError("finite_time_ratio: tanh(theta_c) - zeta*tanh(theta_h) vanishes");
  }
  RatioTerms t;
  t.f = a.zeta * a.tanh_h() / gap;
  t.g = a.tanh_c() / gap;
  t.ratio = (1.0 + 2.0 * p.xi * t.f) / (1.0 - 2.0 * p.xi * t.g);
  return t;
}

struct OttoLimits {
  double eta_otto = 0.0;
  double cop_otto = 0.0;
};

inline OttoLimits otto_limits(double omega_ratio) {
  if (!(std::isfinite(omega_ratio) && omega_ratio > 1.0)) {
    detail::reject("omega_ratio", omega_ratio, "(1, inf)");
  }
  return {1.0 - 1.0 / omega_ratio, 1.0 / (omega_ratio - 1.0)};
}

/// η = 1 − (ω_c/ω_h)R, evaluated regardless of operating regime.
inline double efficiency_via_ratio(const CycleParams& p) {
  return 1.0 - finite_time_ratio(p).ratio / p.omega_ratio;
}

/// COP = R·COP_Otto / (1 + COP_Otto(1 − R)), evaluated regardless of operating regime.
inline double cop_via_ratio(const CycleParams& p) {
  const double ratio = finite_time_ratio(p).ratio;
  const double c = otto_limits(p.omega_ratio).cop_otto;
  return ratio * c / (1.0 + c * (1.0 - ratio));
}

/// Largest ξ at which the cycle still delivers work (W_net < 0). The `xi` field of `p` is
/// ignored. Absent when no ξ ≥ 0 yields an engine.
inline std::optional<double> engine_xi_bound(const CycleParams& p) {
  const DerivedAngles a = derive_angles(p.with_xi(0.0));
  const double tc = a.tanh_c();
  const double th = a.tanh_h();
  const double bound = (p.omega_ratio - 1.0) * (tc - a.zeta * th) /
                       (2.0 * (p.omega_ratio * tc + a.zeta * th));
  if (!(bound > 0.0)) return std::nullopt;
  return bound;
}

/// Largest ξ at which the cycle still refrigerates (Q_c > 0). The `xi` field of `p` is
/// ignored.
inline std::optional<double> fridge_xi_bound(const CycleParams& p) {
  const DerivedAngles a = derive_angles(p.with_xi(0.0));
  const double bound = 0.5 * (1.0 - a.tanh_c() / (a.zeta * a.tanh_h()));
  if (!(bound > 0.0)) return std::nullopt;
  return bound;
}

/// Sign-unrestricted η = −W_net/Q_h and COP = Q_c/W_net.
struct FormalRatios {
  double eta = 0.0;
  double cop = 0.0;
};

inline FormalRatios formal_ratios(const CycleParams& p) {
  const CycleOutcome o = cycle_energetics(p);
  if (o.q_hot == 0.0) throw SingularityError("formal efficiency undefined: Q_h = 0");
  if (o.w_net == 0.0) throw SingularityError("formal COP undefined: W_net = 0");
  return {-o.w_net / o.q_hot, o.q_cold / o.w_net};
}

/// |COP·η − (ω_c/ω_h)R| for the formal ratios. The product identity holds for every
/// regime, so the residual measures rounding only.
inline double generalized_relation_residual(const CycleParams& p) {
  const FormalRatios f = formal_ratios(p);
  return std::abs(f.cop * f.eta - finite_time_ratio(p).ratio / p.omega_ratio);
}

}  // namespace otto
