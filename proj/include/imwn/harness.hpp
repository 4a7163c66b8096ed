#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "imwn/config.hpp"
#include "imwn/packetsim.hpp"

namespace imwn {

/// One sweep cell. Capacity fields describe stream 0; with two streams the
/// second row is its mirror image and carries the same values.
struct ResultRow {
  int streams = 1;
  Mode mode = Mode::TR;
  int hops = 2;
  int z = 2;
  double forward_bottleneck_bps = 0.0;
  double reverse_bottleneck_bps = 0.0;
  double capacity_bps = 0.0;
  bool optimum = false;
  double sim_delivery_rate = 0.0;  // packets per slot, both directions
  long sim_latency_fwd = 0;
  long sim_latency_rev = 0;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

// 1/Z for TR, 2/Z for NC.
Rational expected_delivery_rate(Mode mode, int period_z);

// Ties the analytical engine to the packet engine. Throws ConsistencyError.
void check_cross_engine(const ResultRow& row, const Rational& measured_rate);

// Cells ordered by config order of (streams, mode, hops, z); optimum flags per
// (streams, mode, hops). Cells run concurrently under OpenMP.
std::vector<ResultRow> run_sweep(const ExperimentSpec& spec);
// Single-threaded reference; must produce identical rows.
std::vector<ResultRow> run_sweep_serial(const ExperimentSpec& spec);

std::string csv_header();
void write_csv(std::ostream& out, std::span<const ResultRow> rows);
std::vector<ResultRow> read_csv(std::istream& in);

// Capacity-vs-Z grid for plotting: one line per (streams, mode, z), one column per hop count.
void write_plot_csv(std::ostream& out, std::span<const ResultRow> rows);

}  // namespace imwn
