#pragma once

// Command-line front end: eval, classify, sweep, boundaries, figures, verify.
// Exit codes: 0 success, 1 consistency/verification/I-O failure, 2 flag or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "otto/core.hpp"
#include "otto/errors.hpp"
#include "otto/params.hpp"
#include "otto/regimes.hpp"
#include "otto/sweep.hpp"
#include "otto/verify.hpp"

namespace otto::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

namespace detail {

using json = nlohmann::ordered_json;

/// Flag values shared by every subcommand, before conversion to CycleParams.
struct MachineFlags {
  double omega_c_hz = 1.0e3;
  double omega_ratio = 3.5;
  double beta_c_inv_pev = 0.1;
  double beta_ratio = 0.7;
  double r = 0.0;
  double xi = 0.0;

  CycleParams params() const {
    CycleParams p;
    p.omega_c = two_pi * omega_c_hz;
    p.omega_ratio = omega_ratio;
    p.beta_c = beta_c_inv_pev;
    p.beta_ratio = beta_ratio;
    p.r = r;
    p.xi = xi;
    return p;
  }
};

inline void add_machine_flags(CLI::App& app, MachineFlags& f) {
  app.add_option("--omega-c-hz", f.omega_c_hz, "Cold gap as cyclic frequency in Hz (omega_c = 2*pi*value)")
      ->capture_default_str();
  app.add_option("--omega-ratio", f.omega_ratio, "omega_h / omega_c")->capture_default_str();
  app.add_option("--beta-c-inv-pev", f.beta_c_inv_pev, "Cold inverse temperature in 1/peV")
      ->capture_default_str();
  app.add_option("--beta-ratio", f.beta_ratio, "beta_h / beta_c")->capture_default_str();
  app.add_option("--r", f.r, "Squeezing parameter of the hot bath")->capture_default_str();
  app.add_option("--xi", f.xi, "Adiabaticity parameter in [0, 0.5]")->capture_default_str();
}

inline CLI::Option* add_format_flag(CLI::App& app, std::string& format) {
  return app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

inline CLI::Option* add_units_flag(CLI::App& app, std::string& units) {
  return app.add_option("--units", units, "Energy unit")
      ->check(CLI::IsMember({"hw_c", "peV"}))
      ->capture_default_str();
}

inline CLI::Option* add_vary_flag(CLI::App& app, std::string& vary) {
  return app.add_option("--vary", vary, "Parameter to vary")
      ->check(CLI::IsMember({"r", "xi"}))
      ->capture_default_str();
}

inline EnergyUnit parse_units(const std::string& s) { return s == "peV" ? EnergyUnit::pev : EnergyUnit::hbar_omega_c; }
inline Varied parse_vary(const std::string& s) { return s == "xi" ? Varied::xi : Varied::r; }

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

inline json row_json(const SweepRow& row, const std::string& units) {
  return json{{"q_cold", row.q_cold}, {"q_hot", row.q_hot}, {"w_net", row.w_net},
              {"eta", optional_json(row.eta)}, {"cop", optional_json(row.cop)},
              {"regime", row.regime},   {"units", units}};
}

inline void print_row_table(std::ostream& out, const SweepRow& row, const std::string& units) {
  const auto line = [&](const char* key, const std::string& value) {
    out << std::left << std::setw(8) << key << value << '\n';
  };
  const auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string("-"); };
  line("r", format_number(row.r));
  line("xi", format_number(row.xi));
  line("q_cold", format_number(row.q_cold));
  line("q_hot", format_number(row.q_hot));
  line("w_net", format_number(row.w_net));
  line("eta", opt(row.eta));
  line("cop", opt(row.cop));
  line("regime", row.regime);
  line("units", units);
}

inline json labels_json(QuantitySet set) {
  json arr = json::array();
  for (std::string_view s : set.labels()) arr.push_back(std::string(s));
  return arr;
}

}  // namespace detail

/// Parses `args` (program name first) and runs the selected subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::json;

  CLI::App app{"Two-level quantum Otto machine with a squeezed hot bath"};
  app.name(args.empty() ? "otto" : std::filesystem::path(args.front()).filename().string());
  app.require_subcommand(1);

  detail::MachineFlags flags;
  std::string format = "json";
  std::string units = "hw_c";
  std::string vary = "r";
  std::string out_path;
  unsigned threads = 1;

  auto* eval = app.add_subcommand("eval", "Heats, work, efficiency and COP of one cycle");
  detail::add_machine_flags(*eval, flags);
  detail::add_units_flag(*eval, units);
  detail::add_format_flag(*eval, format);

  double epsilon = default_classify_epsilon;
  std::vector<double> r_values;
  std::vector<double> xi_values;
  auto* classify_cmd = app.add_subcommand("classify", "Machine type of one cycle or of an r x xi grid");
  detail::add_machine_flags(*classify_cmd, flags);
  detail::add_units_flag(*classify_cmd, units);
  detail::add_format_flag(*classify_cmd, format);
  classify_cmd->add_option("--epsilon", epsilon, "Energies within epsilon (hw_c) of zero are boundaries")
      ->capture_default_str();
  classify_cmd->add_option("--r-values", r_values, "Comma-separated r grid for a regime map")->delimiter(',');
  classify_cmd->add_option("--xi-values", xi_values, "Comma-separated xi grid for a regime map")->delimiter(',');

  double from = 0.0;
  double to = 1.5;
  std::size_t steps = 301;
  auto* sweep = app.add_subcommand("sweep", "CSV table along r or xi");
  detail::add_machine_flags(*sweep, flags);
  detail::add_units_flag(*sweep, units);
  detail::add_vary_flag(*sweep, vary);
  sweep->add_option("--from", from, "First value")->capture_default_str();
  auto* sweep_to = sweep->add_option("--to", to, "Last value")->capture_default_str();
  sweep->add_option("--steps", steps, "Number of points, endpoints included")->capture_default_str();
  sweep->add_option("--out", out_path, "CSV destination (standard output when omitted)");
  sweep->add_option("--threads", threads, "Worker threads")->capture_default_str();

  double tolerance = 1e-10;
  int samples = 400;
  auto* boundaries = app.add_subcommand("boundaries", "Regime boundaries along r or xi by bisection");
  detail::add_machine_flags(*boundaries, flags);
  detail::add_vary_flag(*boundaries, vary);
  detail::add_format_flag(*boundaries, format);
  auto* bound_from = boundaries->add_option("--from", from, "Interval start")->capture_default_str();
  auto* bound_to = boundaries->add_option("--to", to, "Interval end (default 1.5 for r, 0.5 for xi)");
  boundaries->add_option("--tol", tolerance, "Bisection tolerance in the varied parameter")->capture_default_str();
  boundaries->add_option("--samples", samples, "Bracketing samples")->capture_default_str();

  std::string figure_dir = "figures";
  auto* figures = app.add_subcommand("figures", "Write the figure datasets fig2a/fig2b/fig3/fig4.csv");
  detail::add_machine_flags(*figures, flags);
  figures->add_option("--out", figure_dir, "Output directory")->capture_default_str();
  figures->add_option("--threads", threads, "Worker threads")->capture_default_str();

  VerifyGrid grid;
  double verify_tol = 1e-12;
  auto* verify = app.add_subcommand("verify", "Density-matrix oracle against the closed forms");
  detail::add_machine_flags(*verify, flags);
  verify->add_option("--grid-r", grid.r_points, "Number of r nodes on [0, 1.5]")->capture_default_str();
  verify->add_option("--grid-xi", grid.xi_points, "Number of xi nodes on [0, 0.45]")->capture_default_str();
  verify->add_option("--chi", grid.chis, "Unitary phases")->delimiter(',');
  verify->add_option("--tol", verify_tol, "Maximum allowed residual")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    const CycleParams params = flags.params();
    validate(params);
    const EnergyUnit unit = detail::parse_units(units);

    if (*eval) {
      const SweepRow row = evaluate_row(params, unit);
      if (format == "json") out << detail::row_json(row, units).dump(2) << '\n';
      else detail::print_row_table(out, row, units);
      return exit_ok;
    }

    if (*classify_cmd) {
      if (!(epsilon >= 0.0)) throw DomainError("epsilon", "epsilon must be non-negative");
      if (r_values.empty() && xi_values.empty()) {
        const Regime regime = classify(cycle_energetics(params), epsilon);
        SweepRow row = evaluate_row(params, unit);
        row.regime = std::string(label(regime));
        if (regime.kind != RegimeKind::engine) row.eta.reset();
        if (regime.kind != RegimeKind::refrigerator) row.cop.reset();
        if (format == "json") {
          json j = detail::row_json(row, units);
          j["vanishing"] = detail::labels_json(regime.vanishing);
          out << j.dump(2) << '\n';
        } else {
          detail::print_row_table(out, row, units);
        }
        return exit_ok;
      }
      if (r_values.empty()) r_values = {params.r};
      if (xi_values.empty()) xi_values = {params.xi};
      for (double r : r_values) validate(params.with_r(r));
      for (double xi : xi_values) validate(params.with_xi(xi));
      const RegimeMap map = regime_map(params, r_values, xi_values, epsilon);
      if (format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < map.r_values.size(); ++i) {
          json row = json::array();
          for (std::size_t j = 0; j < map.xi_values.size(); ++j) row.push_back(std::string(label(map.at(i, j))));
          rows.push_back(std::move(row));
        }
        out << json{{"r_values", map.r_values}, {"xi_values", map.xi_values}, {"regimes", rows}}.dump(2) << '\n';
      } else {
        for (std::size_t i = 0; i < map.r_values.size(); ++i)
          for (std::size_t j = 0; j < map.xi_values.size(); ++j)
            out << format_number(map.r_values[i]) << ' ' << format_number(map.xi_values[j]) << ' '
                << label(map.at(i, j)) << '\n';
      }
      return exit_ok;
    }

    if (*sweep) {
      SweepSpec spec;
      spec.vary = detail::parse_vary(vary);
      spec.from = from;
      spec.to = (spec.vary == Varied::xi && sweep_to->count() == 0) ? xi_max : to;
      spec.steps = steps;
      spec.base = params;
      spec.units = unit;
      const std::vector<SweepRow> rows = run_sweep(spec, threads);
      if (out_path.empty()) {
        write_csv(rows, out);
      } else {
        const std::size_t bytes = write_csv(rows, std::filesystem::path(out_path));
        out << out_path << ' ' << rows.size() << ' ' << bytes << '\n';
      }
      return exit_ok;
    }

    if (*boundaries) {
      const Varied v = detail::parse_vary(vary);
      const double lo = bound_from->count() ? from : 0.0;
      const double hi = bound_to->count() ? to : (v == Varied::xi ? xi_max : 1.5);
      if (!(tolerance > 0.0)) throw DomainError("tol", "tol must be positive");
      if (samples < 2) throw DomainError("samples", "samples must be at least 2");
      const auto points = boundary_scan(params, v, lo, hi, {tolerance, samples});
      if (format == "json") {
        json list = json::array();
        for (const BoundaryPoint& b : points) {
          list.push_back(json{{"value", b.value},
                              {"vanishing", detail::labels_json(b.vanishing)},
                              {"below", std::string(label(b.below))},
                              {"above", std::string(label(b.above))}});
        }
        out << json{{"vary", std::string(label(v))}, {"from", lo}, {"to", hi}, {"boundaries", list}}.dump(2)
            << '\n';
      } else {
        for (const BoundaryPoint& b : points) {
          out << label(v) << " = " << std::setprecision(10) << b.value << "  zero of";
          for (std::string_view q : b.vanishing.labels()) out << ' ' << q;
          out << "  " << label(b.below) << " -> " << label(b.above) << '\n';
        }
      }
      return exit_ok;
    }

    if (*figures) {
      for (const ManifestEntry& m : figure_datasets(figure_dir, params, threads)) {
        out << m.filename << ' ' << m.rows << ' ' << m.bytes << '\n';
      }
      return exit_ok;
    }

    if (*verify) {
      if (!(verify_tol > 0.0)) throw DomainError("tol", "tol must be positive");
      if (grid.r_points == 0 || grid.xi_points == 0) throw DomainError("grid", "grid sizes must be positive");
      if (grid.chis.empty()) throw DomainError("chi", "at least one phase is required");
      const VerifyReport report = run_verification(params, grid);
      for (const CheckResult& c : report.checks) {
        const bool ok = c.max_residual < verify_tol;
        out << std::left << std::setw(36) << c.name << std::scientific << std::setprecision(3)
            << c.max_residual << std::defaultfloat << (ok ? "  ok" : "  FAIL");
        if (!ok) out << "  at r = " << c.worst_r << ", xi = " << c.worst_xi;
        out << '\n';
      }
      out << "singular points skipped: " << report.singular_points << '\n';
      const bool passed = report.passed(verify_tol);
      out << (passed ? "verification passed" : "verification FAILED") << '\n';
      return passed ? exit_ok : exit_failure;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return exit_failure;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return exit_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace otto::cli
