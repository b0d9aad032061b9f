#pragma once

#include <numbers>

namespace otto {

/// Physical constants in the peV / s unit system used throughout.
struct PhysicalConstants {
  /// Reduced Planck constant, CODATA value expressed in peV·s.
  static constexpr double hbar = 6.582119569e-4;
};

inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace otto
