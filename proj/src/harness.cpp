#include "imwn/harness.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <exception>
#include <map>
#include <tuple>
#include <ostream>
#include <sstream>

#include <fmt/core.h>

#include "imwn/errors.hpp"

namespace imwn {

namespace {

struct Cell {
  int streams;
  Mode mode;
  int hops;
  int z;
};

std::vector<Cell> enumerate_cells(const ExperimentSpec& spec) {
  std::vector<Cell> cells;
  for (int s : spec.stream_counts)
    for (Mode m : spec.modes)
      for (int h : spec.hop_counts)
        for (int z : spec.z_values) cells.push_back({s, m, h, z});
  return cells;
}

ResultRow run_cell(const ExperimentSpec& spec, const Cell& cell) {
  Scenario scenario;
  scenario.layout = spec.layout;
  scenario.layout.num_streams = cell.streams;
  scenario.radio = spec.radio;
  scenario.mode = cell.mode;
  scenario.hops = cell.hops;
  scenario.period_z = cell.z;
  scenario.phase = spec.phase;
  const auto report = evaluate(scenario);
  const auto& stream = report.streams.front();

  ResultRow row;
  row.streams = cell.streams;
  row.mode = cell.mode;
  row.hops = cell.hops;
  row.z = cell.z;
  row.forward_bottleneck_bps = stream.forward_bottleneck_bps;
  row.reverse_bottleneck_bps = stream.reverse_bottleneck_bps;
  row.capacity_bps = stream.capacity_per_timeslot_bps;

  const int n_o = cell.hops + 1;
  const auto trace = run_sim(cell.mode, n_o, cell.z, default_sim_periods(n_o));
  const auto rate = measured_delivery_rate(trace);
  row.sim_delivery_rate = rate.value();
  row.sim_latency_fwd = measured_latency(trace, Travel::Forward);
  row.sim_latency_rev = measured_latency(trace, Travel::Reverse);
  check_cross_engine(row, rate);
  return row;
}

void mark_optima(std::vector<ResultRow>& rows) {
  std::map<std::tuple<int, int, int>, std::size_t> best;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto key = std::make_tuple(rows[i].streams, static_cast<int>(rows[i].mode), rows[i].hops);
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(key, i);
      continue;
    }
    const auto& cur = rows[it->second];
    const bool better = rows[i].capacity_bps > cur.capacity_bps * (1.0 + 1e-12);
    const bool tie_smaller = !better && rows[i].capacity_bps >= cur.capacity_bps * (1.0 - 1e-12) && rows[i].z < cur.z;
    if (better || tie_smaller) it->second = i;
  }
  for (const auto& [key, idx] : best) rows[idx].optimum = true;
}

std::string describe(const Cell& c) {
  return fmt::format("streams={} mode={} hops={} z={}", c.streams, to_string(c.mode), c.hops, c.z);
}

template <typename Fn>
ResultRow guarded(const Cell& cell, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("{}: {}", describe(cell), e.what()));
  } catch (const ConsistencyError& e) {
    throw ConsistencyError(fmt::format("{}: {}", describe(cell), e.what()));
  }
}

}  // namespace

Rational expected_delivery_rate(Mode mode, int period_z) {
  return mode == Mode::TR ? Rational::reduced(1, period_z) : Rational::reduced(2, period_z);
}

void check_cross_engine(const ResultRow& row, const Rational& measured_rate) {
  const auto expected = expected_delivery_rate(row.mode, row.z);
  if (!(measured_rate == expected)) {
    throw ConsistencyError(fmt::format("packet engine delivers {}/{} packets per slot, expected {}/{}",
                                       measured_rate.num, measured_rate.den, expected.num, expected.den));
  }
  // Capacity carries half the packet rate: one packet per direction.
  const double factor = row.capacity_bps / (row.forward_bottleneck_bps + row.reverse_bottleneck_bps);
  const double want = expected.value() / 2.0;
  if (std::abs(factor - want) > 1e-12 * want) {
    throw ConsistencyError(fmt::format("capacity factor {} disagrees with packet rate factor {}", factor, want));
  }
}

std::vector<ResultRow> run_sweep(const ExperimentSpec& spec) {
  spec.validate();
  const auto cells = enumerate_cells(spec);
  std::vector<ResultRow> rows(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  const auto count = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      rows[k] = guarded(cells[k], [&] { return run_cell(spec, cells[k]); });
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  mark_optima(rows);
  return rows;
}

std::vector<ResultRow> run_sweep_serial(const ExperimentSpec& spec) {
  spec.validate();
  std::vector<ResultRow> rows;
  for (const auto& cell : enumerate_cells(spec)) {
    rows.push_back(guarded(cell, [&] { return run_cell(spec, cell); }));
  }
  mark_optima(rows);
  return rows;
}

std::string csv_header() {
  return "streams,mode,hops,z,forward_bottleneck_bps,reverse_bottleneck_bps,capacity_bps,optimum_flag,"
         "sim_delivery_rate,sim_latency_fwd,sim_latency_rev";
}

void write_csv(std::ostream& out, std::span<const ResultRow> rows) {
  out << csv_header() << '\n';
  for (const auto& r : rows) {
    out << fmt::format("{},{},{},{},{:.17g},{:.17g},{:.17g},{},{:.17g},{},{}\n", r.streams, to_string(r.mode),
                       r.hops, r.z, r.forward_bottleneck_bps, r.reverse_bottleneck_bps, r.capacity_bps,
                       r.optimum ? 1 : 0, r.sim_delivery_rate, r.sim_latency_fwd, r.sim_latency_rev);
  }
}

std::vector<ResultRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != csv_header()) throw ConfigError("CSV header does not match the result schema");
  std::vector<ResultRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string item; std::getline(ss, item, ',');) f.push_back(item);
    if (f.size() != 11) throw ConfigError(fmt::format("CSV line {}: expected 11 fields, got {}", line_no, f.size()));
    try {
      ResultRow r;
      r.streams = std::stoi(f[0]);
      r.mode = parse_mode(f[1]);
      r.hops = std::stoi(f[2]);
      r.z = std::stoi(f[3]);
      r.forward_bottleneck_bps = std::stod(f[4]);
      r.reverse_bottleneck_bps = std::stod(f[5]);
      r.capacity_bps = std::stod(f[6]);
      r.optimum = f[7] == "1";
      r.sim_delivery_rate = std::stod(f[8]);
      r.sim_latency_fwd = std::stol(f[9]);
      r.sim_latency_rev = std::stol(f[10]);
      rows.push_back(r);
    } catch (const std::logic_error& e) {
      throw ConfigError(fmt::format("CSV line {}: {}", line_no, e.what()));
    }
  }
  return rows;
}

void write_plot_csv(std::ostream& out, std::span<const ResultRow> rows) {
  std::vector<int> hops;
  for (const auto& r : rows) {
    if (std::find(hops.begin(), hops.end(), r.hops) == hops.end()) hops.push_back(r.hops);
  }
  std::sort(hops.begin(), hops.end());
  out << "streams,mode,z";
  for (int h : hops) out << ",hops_" << h << "_bps";
  out << '\n';

  std::map<std::tuple<int, int, int>, std::map<int, double>> grid;
  std::vector<std::tuple<int, int, int>> order;
  for (const auto& r : rows) {
    const auto key = std::make_tuple(r.streams, static_cast<int>(r.mode), r.z);
    if (!grid.count(key)) order.push_back(key);
    grid[key][r.hops] = r.capacity_bps;
  }
  for (const auto& key : order) {
    const auto& [s, m, z] = key;
    out << fmt::format("{},{},{}", s, to_string(static_cast<Mode>(m)), z);
    for (int h : hops) {
      const auto& cells = grid[key];
      const auto it = cells.find(h);
      out << ',' << (it == cells.end() ? std::string() : fmt::format("{:.17g}", it->second));
    }
    out << '\n';
  }
}

}  // namespace imwn
