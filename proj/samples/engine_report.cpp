// Prints efficiency and regime along r for a few adiabaticity values.
#include <cstdio>

#include "otto/otto.hpp"

int main() {
  const otto::CycleParams base;
  const auto limits = otto::otto_limits(base.omega_ratio);
  std::printf("eta_otto = %.6f  cop_otto = %.6f\n", limits.eta_otto, limits.cop_otto);
  for (double xi : {0.0, 0.1, 0.2}) {
    std::printf("\nxi = %.1f\n", xi);
    for (double r = 0.0; r <= 1.5 + 1e-12; r += 0.25) {
      const otto::CycleParams p = base.with_r(r).with_xi(xi);
      const auto regime = otto::classify(p);
      const auto eta = otto::efficiency(p);
      const auto cop = otto::cop(p);
      std::printf("  r = %4.2f  %-12s", r, std::string(otto::label(regime)).c_str());
      if (eta) std::printf("  eta = %.6f", *eta);
      if (cop) std::printf("  cop = %.6f", *cop);
      std::printf("\n");
    }
  }
}
