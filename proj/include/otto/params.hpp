#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "otto/constants.hpp"
#include "otto/errors.hpp"

namespace otto {

/// One Otto cycle: cold gap ω_c, expansion ratio ω_h/ω_c, inverse temperatures β_c and
/// β_h/β_c, squeezing r of the hot bath and the adiabaticity ξ of the driving strokes.
///
/// Defaults reproduce the reference machine: ω_c = 2π kHz, ω_h = 3.5 ω_c,
/// β_c = 1/(10 peV), β_h = 0.7 β_c, unsqueezed, quasi-static.
struct CycleParams {
  double omega_c = two_pi * 1.0e3;  // rad/s
  double omega_ratio = 3.5;
  double beta_c = 0.1;  // peV^-1
  double beta_ratio = 0.7;
  double r = 0.0;
  double xi = 0.0;

  double omega_h() const { return omega_c * omega_ratio; }
  double beta_h() const { return beta_c * beta_ratio; }

  /// ħω_c in peV, the conversion factor out of the default energy unit.
  double energy_unit_pev() const { return PhysicalConstants::hbar * omega_c; }

  CycleParams with_r(double value) const {
    CycleParams copy = *this;
    copy.r = value;
    return copy;
  }
  CycleParams with_xi(double value) const {
    CycleParams copy = *this;
    copy.xi = value;
    return copy;
  }

  friend bool operator==(const CycleParams&, const CycleParams&) = default;
};

inline constexpr double xi_max = 0.5;

namespace detail {

[[noreturn]] inline void reject(const char* field, double value, const char* domain) {
  std::ostringstream msg;
  msg << field << " = " << value << " outside " << domain;
  throw DomainError(field, msg.str());
}

}  // namespace detail

/// Throws DomainError naming the first field that violates its domain.
inline void validate(const CycleParams& p) {
  if (!(std::isfinite(p.omega_c) && p.omega_c > 0.0)) detail::reject("omega_c", p.omega_c, "(0, inf)");
  if (!(std::isfinite(p.omega_ratio) && p.omega_ratio > 1.0))
    detail::reject("omega_ratio", p.omega_ratio, "(1, inf)");
  if (!(std::isfinite(p.beta_c) && p.beta_c > 0.0)) detail::reject("beta_c", p.beta_c, "(0, inf)");
  if (!(std::isfinite(p.beta_ratio) && p.beta_ratio > 0.0))
    detail::reject("beta_ratio", p.beta_ratio, "(0, inf)");
  if (!(std::isfinite(p.r) && p.r >= 0.0)) detail::reject("r", p.r, "[0, inf)");
  if (!(std::isfinite(p.xi) && p.xi >= 0.0 && p.xi <= xi_max)) detail::reject("xi", p.xi, "[0, 0.5]");
}

}  // namespace otto
