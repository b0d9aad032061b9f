#pragma once

#include <charconv>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>
#include <vector>

#include "otto/core.hpp"
#include "otto/errors.hpp"
#include "otto/params.hpp"
#include "otto/regimes.hpp"

namespace otto {

/// Uniform 1-D sweep over r or ξ; `steps` points with both endpoints included.
struct SweepSpec {
  Varied vary = Varied::r;
  double from = 0.0;
  double to = 1.5;
  std::size_t steps = 301;
  CycleParams base;
  EnergyUnit units = EnergyUnit::hbar_omega_c;

  double value_at(std::size_t k) const {
    if (k + 1 == steps) return to;
    return from + static_cast<double>(k) * ((to - from) / static_cast<double>(steps - 1));
  }
};

struct SweepRow {
  double r = 0.0;
  double xi = 0.0;
  double q_cold = 0.0;
  double q_hot = 0.0;
  double w_net = 0.0;
  std::optional<double> eta;
  std::optional<double> cop;
  std::string regime;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// One row for a single parameter point. Classification always happens in ħω_c units;
/// η and COP are kept only where the row is labeled engine / refrigerator.
inline SweepRow evaluate_row(const CycleParams& p, EnergyUnit units) {
  const CycleOutcome base = evaluate(p);
  const Regime regime = classify(base);
  const CycleOutcome o = in_units(base, p, units);
  SweepRow row{p.r, p.xi, o.q_cold, o.q_hot, o.w_net, o.eta, o.cop, std::string(label(regime))};
  if (regime.kind != RegimeKind::engine) row.eta.reset();
  if (regime.kind != RegimeKind::refrigerator) row.cop.reset();
  return row;
}

namespace detail {

inline void validate_spec(const SweepSpec& spec) {
  if (spec.steps < 2) throw DomainError("steps", "steps = " + std::to_string(spec.steps) + " outside [2, inf)");
  if (!(spec.from <= spec.to)) {
    std::ostringstream msg;
    msg << "sweep range from = " << spec.from << " exceeds to = " << spec.to;
    throw DomainError("from", msg.str());
  }
}

}  // namespace detail

/// Rows in grid order. With `threads` > 1 the grid is split into contiguous chunks
/// evaluated concurrently; each row lands in its own slot so output order is fixed.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 1) {
  detail::validate_spec(spec);
  for (std::size_t k : {std::size_t{0}, spec.steps - 1}) {
    const double x = spec.value_at(k);
    try {
      validate(with_varied(spec.base, spec.vary, x));
    } catch (const DomainError& e) {
      std::ostringstream msg;
      msg << "sweep value " << label(spec.vary) << " = " << x << ": " << e.what();
      throw DomainError(e.field(), msg.str());
    }
  }

  std::vector<SweepRow> rows(spec.steps);
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      rows[k] = evaluate_row(with_varied(spec.base, spec.vary, spec.value_at(k)), spec.units);
    }
  };
  const std::size_t n_threads = std::max<std::size_t>(1, std::min<std::size_t>(threads, spec.steps));
  if (n_threads == 1) {
    work(0, spec.steps);
    return rows;
  }
  const std::size_t chunk = (spec.steps + n_threads - 1) / n_threads;
  std::vector<std::exception_ptr> failures(n_threads);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0, begin = 0; begin < spec.steps; ++t, begin += chunk) {
      pool.emplace_back([&, t, begin] {
        try {
          work(begin, std::min(begin + chunk, spec.steps));
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);
  return rows;
}

inline constexpr std::string_view csv_header = "r,xi,q_cold,q_hot,w_net,eta,cop,regime";

/// Shortest decimal that parses back to the same double.
inline std::string format_number(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

inline std::string csv_line(const SweepRow& row) {
  std::string line;
  const auto field = [&](double v) {
    line += format_number(v);
    line += ',';
  };
  field(row.r);
  field(row.xi);
  field(row.q_cold);
  field(row.q_hot);
  field(row.w_net);
  if (row.eta) line += format_number(*row.eta);
  line += ',';
  if (row.cop) line += format_number(*row.cop);
  line += ',';
  line += row.regime;
  return line;
}

/// Writes the header and one LF-terminated line per row; returns bytes written.
inline std::size_t write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  std::size_t bytes = 0;
  const auto emit = [&](std::string_view line) {
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    out.put('\n');
    bytes += line.size() + 1;
  };
  emit(csv_header);
  for (const SweepRow& row : rows) emit(csv_line(row));
  return bytes;
}

inline std::size_t write_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open " + path.string() + " for writing");
  const std::size_t bytes = write_csv(rows, out);
  out.flush();
  if (!out) throw IoError(path.string(), "write failed for " + path.string());
  return bytes;
}

/// Inverse of csv_line. Throws std::invalid_argument on malformed input.
inline SweepRow parse_csv_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 8) throw std::invalid_argument("csv row must have 8 fields");
  const auto number = [](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument("bad numeric csv field '" + std::string(s) + "'");
    }
    return v;
  };
  const auto optional_number = [&](std::string_view s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    return number(s);
  };
  return {number(fields[0]), number(fields[1]), number(fields[2]), number(fields[3]),
          number(fields[4]), optional_number(fields[5]), optional_number(fields[6]),
          std::string(fields[7])};
}

struct ManifestEntry {
  std::string filename;
  std::size_t rows = 0;
  std::size_t bytes = 0;
};

inline constexpr std::size_t figure_steps = 301;
inline constexpr double figure_r_max = 1.5;

/// Writes fig2a.csv (ξ = 0.2), fig2b.csv (ξ = 0), fig3.csv (η, ξ ∈ {0, 0.1, 0.2}) and
/// fig4.csv (COP, same series) over r ∈ [0, 1.5] for `base` (reference machine by default).
inline std::vector<ManifestEntry> figure_datasets(const std::filesystem::path& directory,
                                                  const CycleParams& base = {}, unsigned threads = 1) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw IoError(directory.string(), "cannot create " + directory.string() + ": " + ec.message());

  const auto series = [&](double xi) {
    SweepSpec spec;
    spec.from = 0.0;
    spec.to = figure_r_max;
    spec.steps = figure_steps;
    spec.base = base.with_xi(xi);
    return run_sweep(spec, threads);
  };
  const auto concat = [&](bool keep_eta) {
    std::vector<SweepRow> rows;
    for (double xi : {0.0, 0.1, 0.2}) {
      for (SweepRow row : series(xi)) {
        if (keep_eta) row.cop.reset();
        else row.eta.reset();
        rows.push_back(std::move(row));
      }
    }
    return rows;
  };

  std::vector<ManifestEntry> manifest;
  const auto emit = [&](const std::string& name, const std::vector<SweepRow>& rows) {
    manifest.push_back({name, rows.size(), write_csv(rows, directory / name)});
  };
  emit("fig2a.csv", series(0.2));
  emit("fig2b.csv", series(0.0));
  emit("fig3.csv", concat(true));
  emit("fig4.csv", concat(false));
  return manifest;
}

}  // namespace otto
