#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "otto/core.hpp"
#include "otto/oracle.hpp"
#include "otto/params.hpp"

namespace otto {

struct VerifyGrid {
  double r_from = 0.0;
  double r_to = 1.5;
  std::size_t r_points = 51;
  double xi_from = 0.0;
  double xi_to = 0.45;
  std::size_t xi_points = 16;
  std::vector<double> chis{0.0, 0.7, 2.9};

  static double node(double from, double to, std::size_t n, std::size_t k) {
    if (n <= 1) return from;
    if (k + 1 == n) return to;
    return from + static_cast<double>(k) * ((to - from) / static_cast<double>(n - 1));
  }
};

/// Worst residual of one check over the grid, and where it happened.
struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double worst_r = 0.0;
  double worst_xi = 0.0;
  std::size_t evaluated = 0;

  void record(double residual, double r, double xi) {
    if (evaluated++ == 0 || residual > max_residual) {
      max_residual = residual;
      worst_r = r;
      worst_xi = xi;
    }
  }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::size_t singular_points = 0;

  bool passed(double tolerance) const {
    return std::all_of(checks.begin(), checks.end(),
                       [&](const CheckResult& c) { return c.max_residual < tolerance; });
  }
};

/// Oracle ≡ closed forms plus the algebraic identities, evaluated at every grid node.
/// Energies are compared in absolute ħω_c units; ratio identities relative to max(1, |x|).
/// Ratio checks skip nodes where F, G or the formal ratios are singular.
inline VerifyReport run_verification(const CycleParams& base, const VerifyGrid& grid) {
  VerifyReport report;
  CheckResult oracle_q_hot{"oracle_q_hot"};
  CheckResult oracle_q_cold{"oracle_q_cold"};
  CheckResult oracle_w_net{"oracle_w_net"};
  CheckResult chi_independence{"chi_independence"};
  CheckResult telescoping{"telescoping"};
  CheckResult transition{"compression_transition_probability"};
  CheckResult first_law{"first_law"};
  CheckResult efficiency_forms{"efficiency_ratio_form"};
  CheckResult cop_forms{"cop_ratio_form"};
  CheckResult product{"generalized_relation"};

  for (std::size_t i = 0; i < grid.r_points; ++i) {
    const double r = VerifyGrid::node(grid.r_from, grid.r_to, grid.r_points, i);
    for (std::size_t j = 0; j < grid.xi_points; ++j) {
      const double xi = VerifyGrid::node(grid.xi_from, grid.xi_to, grid.xi_points, j);
      const CycleParams p = base.with_r(r).with_xi(xi);
      const CycleOutcome closed = cycle_energetics(p);

      const double scale =
          std::max({std::abs(closed.q_cold), std::abs(closed.q_hot), std::abs(closed.w_net), 1e-30});
      first_law.record(std::abs(closed.q_cold + closed.q_hot + closed.w_net) / scale, r, xi);

      bool have_reference = false;
      oracle::StrokeEnergies reference;
      for (double chi : grid.chis) {
        const oracle::StrokeEnergies s = oracle::run_cycle(p, chi);
        oracle_q_hot.record(std::abs(s.q_hot() - closed.q_hot), r, xi);
        oracle_q_cold.record(std::abs(s.q_cold() - closed.q_cold), r, xi);
        oracle_w_net.record(std::abs(s.w_net() - closed.w_net), r, xi);
        telescoping.record(
            std::abs(s.w_expansion() + s.q_hot() + s.w_compression() + s.q_cold()), r, xi);

        const oracle::Unitary2 u = oracle::expansion_unitary(xi, chi);
        const oracle::Unitary2 u_dag = u.adjoint();
        const double back_plus = oracle::transition_probability(
            u_dag, eigenket(Axis::y, false), eigenket(Axis::x, true));
        const double back_minus = oracle::transition_probability(
            u_dag, eigenket(Axis::y, true), eigenket(Axis::x, false));
        transition.record(std::max(std::abs(back_plus - xi), std::abs(back_minus - xi)), r, xi);

        if (!have_reference) {
          reference = s;
          have_reference = true;
        } else {
          chi_independence.record(std::max({std::abs(s.e1 - reference.e1), std::abs(s.e2 - reference.e2),
                                            std::abs(s.e3 - reference.e3), std::abs(s.e4 - reference.e4)}),
                                  r, xi);
        }
      }

      try {
        const RatioTerms ratio = finite_time_ratio(p);
        const FormalRatios formal = formal_ratios(p);
        const double eta_ratio = efficiency_via_ratio(p);
        const double cop_ratio = cop_via_ratio(p);
        efficiency_forms.record(std::abs(formal.eta - eta_ratio) / std::max(1.0, std::abs(formal.eta)), r, xi);
        cop_forms.record(std::abs(formal.cop - cop_ratio) / std::max(1.0, std::abs(formal.cop)), r, xi);
        product.record(generalized_relation_residual(p) / std::max(1.0, std::abs(ratio.ratio)), r, xi);
      } catch (const SingularityError&) {
        ++report.singular_points;
      }
    }
  }

  report.checks = {oracle_q_hot, oracle_q_cold,     oracle_w_net, chi_independence, telescoping,
                   transition,   first_law,         efficiency_forms, cop_forms,    product};
  return report;
}

}  // namespace otto
