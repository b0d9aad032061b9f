#pragma once

// Brute-force evaluation of the Otto cycle with explicit density matrices. Shares only
// the definition of θ with the closed forms in core.hpp; everything else is built from
// states, unitaries and traces.

#include <cmath>
#include <complex>
#include <sstream>

#include "otto/core.hpp"
#include "otto/errors.hpp"
#include "otto/matrix2.hpp"
#include "otto/params.hpp"

namespace otto::oracle {

inline constexpr double state_tolerance = 1e-14;

/// Hermitian, unit-trace, positive 2x2 matrix. Construction checks the invariants.
class DensityMatrix2 {
 public:
  explicit DensityMatrix2(const Matrix2& m) : m_(m) {
    if (max_abs_diff(m, m.adjoint()) > state_tolerance) {
      throw ConsistencyError("density matrix is not Hermitian");
    }
    if (std::abs(m.trace() - 1.0) > state_tolerance) {
      throw ConsistencyError("density matrix trace differs from 1");
    }
    const auto ev = hermitian_eigenvalues(m);
    if (ev[0] < -state_tolerance || ev[1] > 1.0 + state_tolerance) {
      throw ConsistencyError("density matrix eigenvalue outside [0, 1]");
    }
  }

  const Matrix2& matrix() const { return m_; }

  /// Tr(ρA) for Hermitian A.
  double expectation(const Matrix2& observable) const { return (m_ * observable).trace().real(); }

  double population(const Ket2& state) const { return inner(state, m_ * state).real(); }

 private:
  Matrix2 m_;
};

class Unitary2 {
 public:
  explicit Unitary2(const Matrix2& m) : m_(m) {
    if (max_abs_diff(m.adjoint() * m, Matrix2::identity()) > state_tolerance) {
      throw ConsistencyError("matrix is not unitary");
    }
  }

  const Matrix2& matrix() const { return m_; }
  Unitary2 adjoint() const { return Unitary2(m_.adjoint()); }

  DensityMatrix2 conjugate(const DensityMatrix2& rho) const {
    return DensityMatrix2(m_ * rho.matrix() * m_.adjoint());
  }

 private:
  Matrix2 m_;
};

/// |⟨to|U|from⟩|²
inline double transition_probability(const Unitary2& u, const Ket2& from, const Ket2& to) {
  return std::norm(inner(to, u.matrix() * from));
}

/// e^{−βH}/Tr e^{−βH} for H = ½ħω σ_axis, with θ = ½βħω. Built from Boltzmann weights
/// of the two levels, shifted by the ground energy to stay finite at large θ.
inline DensityMatrix2 gibbs_state(Axis axis, double theta) {
  if (!(theta >= 0.0)) detail::reject("theta", theta, "[0, inf)");
  const double w_excited = std::exp(-2.0 * theta);
  const double w_ground = 1.0;
  const double z = w_excited + w_ground;
  const Ket2 up = eigenket(axis, true);
  const Ket2 down = eigenket(axis, false);
  return DensityMatrix2((w_excited / z) * outer(up, up) + (w_ground / z) * outer(down, down));
}

/// Transport from the σ_x eigenbasis onto the σ_y eigenbasis with transition
/// probability ξ between the instantaneous levels and relative phase χ.
inline Unitary2 expansion_unitary(double xi, double chi) {
  if (!(xi >= 0.0 && xi <= xi_max)) detail::reject("xi", xi, "[0, 0.5]");
  const double stay = std::sqrt(1.0 - xi);
  const double jump = std::sqrt(xi);
  const cplx phase = std::polar(1.0, chi);
  const Ket2 plus_y = eigenket(Axis::y, true);
  const Ket2 minus_y = eigenket(Axis::y, false);
  const Ket2 image_plus = cplx(stay) * plus_y + (jump * phase) * minus_y;
  const Ket2 image_minus = (-jump * std::conj(phase)) * plus_y + cplx(stay) * minus_y;
  return Unitary2(outer(image_plus, eigenket(Axis::x, true)) +
                  outer(image_minus, eigenket(Axis::x, false)));
}

/// μ = cosh r, ν = sinh r; ζ = 1/(μ² + ν²)².
inline double squeeze_contraction(double r) {
  const double mu = std::cosh(r);
  const double nu = std::sinh(r);
  const double s = mu * mu + nu * nu;
  return 1.0 / (s * s);
}

/// Hot-bath steady state: the y-Gibbs populations contracted toward ½ by ζ(r), so the
/// inversion becomes −ζ tanhθ_h.
inline DensityMatrix2 squeezed_steady_state(double theta_h, double r) {
  if (!(r >= 0.0 && std::isfinite(r))) detail::reject("r", r, "[0, inf)");
  const DensityMatrix2 thermal = gibbs_state(Axis::y, theta_h);
  const double zeta = squeeze_contraction(r);
  const Ket2 up = eigenket(Axis::y, true);
  const Ket2 down = eigenket(Axis::y, false);
  const double p_up = 0.5 + zeta * (thermal.population(up) - 0.5);
  const double p_down = 0.5 + zeta * (thermal.population(down) - 0.5);
  return DensityMatrix2(cplx(p_up) * outer(up, up) + cplx(p_down) * outer(down, down));
}

/// Mean energies after each stroke and the heat/work of each, in ħω_c units.
struct StrokeEnergies {
  double e1 = 0.0;  // after cold thermalization
  double e2 = 0.0;  // after expansion
  double e3 = 0.0;  // after hot thermalization
  double e4 = 0.0;  // after compression

  double w_expansion() const { return e2 - e1; }
  double q_hot() const { return e3 - e2; }
  double w_compression() const { return e4 - e3; }
  double q_cold() const { return e1 - e4; }
  double w_net() const { return w_expansion() + w_compression(); }
};

inline StrokeEnergies run_cycle(const CycleParams& p, double chi) {
  const DerivedAngles angles = derive_angles(p);
  const Matrix2 h_cold = cplx(0.5) * pauli::x();
  const Matrix2 h_hot = cplx(0.5 * p.omega_ratio) * pauli::y();

  const Unitary2 u = expansion_unitary(p.xi, chi);
  const DensityMatrix2 rho1 = gibbs_state(Axis::x, angles.theta_c);
  const DensityMatrix2 rho2 = u.conjugate(rho1);
  const DensityMatrix2 rho3 = squeezed_steady_state(angles.theta_h, p.r);
  const DensityMatrix2 rho4 = u.adjoint().conjugate(rho3);

  return {rho1.expectation(h_cold), rho2.expectation(h_hot), rho3.expectation(h_hot),
          rho4.expectation(h_cold)};
}

/// Applies the literal map ρ → SρS†/Tr(SρS†) with
/// S = (μ|−_y⟩⟨+_y| + ν|+_y⟩⟨−_y|)/√(μ² + ν²) to the hot Gibbs state and returns ⟨σ_y⟩.
/// Diagnostic only: the result does not match the −ζ tanhθ_h inversion of the cycle.
inline double literal_squeeze_diagnostic(double theta_h, double r) {
  if (!(r >= 0.0 && std::isfinite(r))) detail::reject("r", r, "[0, inf)");
  const DensityMatrix2 thermal = gibbs_state(Axis::y, theta_h);
  const double mu = std::cosh(r);
  const double nu = std::sinh(r);
  const Ket2 up = eigenket(Axis::y, true);
  const Ket2 down = eigenket(Axis::y, false);
  const Matrix2 s =
      cplx(1.0 / std::sqrt(mu * mu + nu * nu)) * (cplx(mu) * outer(down, up) + cplx(nu) * outer(up, down));
  const Matrix2 image = s * thermal.matrix() * s.adjoint();
  const double norm = image.trace().real();
  if (!(norm > 0.0)) {
    std::ostringstream msg;
    msg << "squeeze map annihilates the state at theta_h = " << theta_h << ", r = " << r;
    throw ConsistencyError(msg.str());
  }
  const DensityMatrix2 result(cplx(1.0 / norm) * image);
  return result.expectation(pauli::y());
}

}  // namespace otto::oracle
