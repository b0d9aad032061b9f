#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "otto/bisection.hpp"
#include "otto/core.hpp"
#include "otto/errors.hpp"
#include "otto/params.hpp"

namespace otto {

enum class Quantity : std::uint8_t { q_cold = 1, q_hot = 2, w_net = 4 };

inline constexpr Quantity all_quantities[] = {Quantity::q_cold, Quantity::q_hot, Quantity::w_net};

inline std::string_view label(Quantity q) {
  switch (q) {
    case Quantity::q_cold: return "q_cold";
    case Quantity::q_hot: return "q_hot";
    case Quantity::w_net: return "w_net";
  }
  return "?";
}

inline double component(const CycleOutcome& o, Quantity q) {
  switch (q) {
    case Quantity::q_cold: return o.q_cold;
    case Quantity::q_hot: return o.q_hot;
    case Quantity::w_net: return o.w_net;
  }
  return 0.0;
}

/// Small set of Quantity flags.
class QuantitySet {
 public:
  constexpr QuantitySet() = default;
  constexpr explicit QuantitySet(Quantity q) : bits_(static_cast<std::uint8_t>(q)) {}

  constexpr void insert(Quantity q) { bits_ |= static_cast<std::uint8_t>(q); }
  constexpr void merge(QuantitySet other) { bits_ |= other.bits_; }
  constexpr bool contains(Quantity q) const { return (bits_ & static_cast<std::uint8_t>(q)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

  std::vector<std::string_view> labels() const {
    std::vector<std::string_view> out;
    for (Quantity q : all_quantities)
      if (contains(q)) out.push_back(label(q));
    return out;
  }

  friend constexpr bool operator==(QuantitySet, QuantitySet) = default;

 private:
  std::uint8_t bits_ = 0;
};

enum class RegimeKind { engine, refrigerator, heater_i, heater_ii, boundary };

/// Machine type of a cycle. For `boundary`, `vanishing` lists the quantities within ε of 0.
struct Regime {
  RegimeKind kind = RegimeKind::boundary;
  QuantitySet vanishing;

  friend bool operator==(const Regime&, const Regime&) = default;
};

inline std::string_view label(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::engine: return "engine";
    case RegimeKind::refrigerator: return "refrigerator";
    case RegimeKind::heater_i: return "heater_i";
    case RegimeKind::heater_ii: return "heater_ii";
    case RegimeKind::boundary: return "boundary";
  }
  return "?";
}

inline std::string_view label(const Regime& regime) { return label(regime.kind); }

inline constexpr double default_classify_epsilon = 1e-12;

/// Sign-table classification:
///   engine        Q_h > 0, Q_c < 0, W < 0
///   refrigerator  Q_c > 0, Q_h < 0, W > 0
///   heater I      Q_h > 0, Q_c < 0, W > 0
///   heater II     Q_h < 0, Q_c < 0, W > 0
/// Any other pattern cannot arise from a closed cycle and raises ConsistencyError.
inline Regime classify(const CycleOutcome& o, double epsilon = default_classify_epsilon) {
  const double scale = std::max({std::abs(o.q_cold), std::abs(o.q_hot), std::abs(o.w_net), 1e-30});
  if (std::abs(o.q_cold + o.q_hot + o.w_net) > 1e-12 * scale) {
    throw ConsistencyError("classify: outcome violates Q_c + Q_h + W_net = 0");
  }

  Regime regime;
  for (Quantity q : all_quantities) {
    if (std::abs(component(o, q)) <= epsilon) regime.vanishing.insert(q);
  }
  if (!regime.vanishing.empty()) return regime;

  const bool cold_in = o.q_cold > 0.0;
  const bool hot_in = o.q_hot > 0.0;
  const bool work_in = o.w_net > 0.0;
  if (!cold_in && hot_in && !work_in) regime.kind = RegimeKind::engine;
  else if (cold_in && !hot_in && work_in) regime.kind = RegimeKind::refrigerator;
  else if (!cold_in && hot_in && work_in) regime.kind = RegimeKind::heater_i;
  else if (!cold_in && !hot_in && work_in) regime.kind = RegimeKind::heater_ii;
  else {
    std::ostringstream msg;
    msg << "classify: unreachable sign pattern Q_c = " << o.q_cold << ", Q_h = " << o.q_hot
        << ", W_net = " << o.w_net;
    throw ConsistencyError(msg.str());
  }
  return regime;
}

inline Regime classify(const CycleParams& p, double epsilon = default_classify_epsilon) {
  return classify(cycle_energetics(p), epsilon);
}

enum class Varied { r, xi };

inline std::string_view label(Varied v) { return v == Varied::r ? "r" : "xi"; }

inline CycleParams with_varied(const CycleParams& base, Varied v, double value) {
  return v == Varied::r ? base.with_r(value) : base.with_xi(value);
}

/// A zero of one or more of Q_c, Q_h, W_net along the varied parameter, with the regimes
/// found at the bracketing samples on either side.
struct BoundaryPoint {
  double value = 0.0;
  QuantitySet vanishing;
  Regime below;
  Regime above;
};

struct ScanOptions {
  double tolerance = 1e-10;
  int samples = 400;
};

/// Brackets sign changes of Q_c, Q_h and W_net on a uniform grid of `samples` points over
/// [from, to] and bisects each one. Roots closer than ten tolerances are reported as a
/// single point. Sorted ascending; empty when nothing changes sign.
inline std::vector<BoundaryPoint> boundary_scan(const CycleParams& base, Varied vary, double from,
                                                double to, ScanOptions options = {}) {
  if (!(from < to)) return {};
  validate(with_varied(base, vary, from));
  validate(with_varied(base, vary, to));
  const int samples = std::max(options.samples, 2);

  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) grid[k] = from + k * ((to - from) / (samples - 1));
  grid.back() = to;

  std::vector<CycleOutcome> outcomes;
  outcomes.reserve(grid.size());
  for (double x : grid) outcomes.push_back(cycle_energetics(with_varied(base, vary, x)));

  struct Root {
    double value;
    Quantity quantity;
    std::size_t left;
    std::size_t right;
  };
  std::vector<Root> roots;
  for (Quantity q : all_quantities) {
    const auto f = [&](double x) { return component(cycle_energetics(with_varied(base, vary, x)), q); };
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double fk = component(outcomes[k], q);
      if (fk == 0.0) {
        roots.push_back({grid[k], q, k == 0 ? 0 : k - 1, std::min(k + 1, grid.size() - 1)});
        continue;
      }
      if (k + 1 == grid.size()) break;
      const double fn = component(outcomes[k + 1], q);
      if (fn != 0.0 && std::signbit(fk) != std::signbit(fn)) {
        roots.push_back({bisect(f, grid[k], grid[k + 1], options.tolerance), q, k, k + 1});
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.value < b.value; });

  std::vector<BoundaryPoint> points;
  std::size_t left = 0;
  std::size_t right = 0;
  const auto finish = [&] {
    points.back().below = classify(outcomes[left]);
    points.back().above = classify(outcomes[right]);
  };
  const double merge_window = 10.0 * options.tolerance;
  for (const Root& root : roots) {
    if (!points.empty() && root.value - points.back().value <= merge_window) {
      points.back().vanishing.insert(root.quantity);
      left = std::min(left, root.left);
      right = std::max(right, root.right);
      continue;
    }
    if (!points.empty()) finish();
    points.push_back({root.value, QuantitySet(root.quantity), {}, {}});
    left = root.left;
    right = root.right;
  }
  if (!points.empty()) finish();
  return points;
}

/// Regimes on the r × ξ product grid; cell (i, j) holds r_values[i], xi_values[j].
struct RegimeMap {
  std::vector<double> r_values;
  std::vector<double> xi_values;
  std::vector<Regime> cells;

  const Regime& at(std::size_t i, std::size_t j) const { return cells[i * xi_values.size() + j]; }
};

inline RegimeMap regime_map(const CycleParams& base, std::span<const double> r_values,
                            std::span<const double> xi_values,
                            double epsilon = default_classify_epsilon) {
  RegimeMap map{{r_values.begin(), r_values.end()}, {xi_values.begin(), xi_values.end()}, {}};
  map.cells.reserve(r_values.size() * xi_values.size());
  for (double r : r_values)
    for (double xi : xi_values) map.cells.push_back(classify(base.with_r(r).with_xi(xi), epsilon));
  return map;
}

}  // namespace otto
