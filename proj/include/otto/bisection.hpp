#pragma once

#include <cmath>
#include <stdexcept>

namespace otto {

/// Bisects a bracketed sign change of `f` on [lower, upper] until the bracket is no wider
/// than `tolerance` (or one ULP), returning its midpoint. An exact zero ends early.
template <typename Function>
double bisect(Function&& f, double lower, double upper, double tolerance) {
  double f_lower = f(lower);
  const double f_upper = f(upper);
  if (f_lower == 0.0) return lower;
  if (f_upper == 0.0) return upper;
  if (std::signbit(f_lower) == std::signbit(f_upper)) {
    throw std::invalid_argument("bisect: interval does not bracket a sign change");
  }
  while (upper - lower > tolerance) {
    const double middle = lower + 0.5 * (upper - lower);
    if (middle == lower || middle == upper) break;
    const double f_middle = f(middle);
    if (f_middle == 0.0) return middle;
    if (std::signbit(f_middle) == std::signbit(f_lower)) {
      lower = middle;
      f_lower = f_middle;
    } else {
      upper = middle;
    }
  }
  return lower + 0.5 * (upper - lower);
}

}  // namespace otto
