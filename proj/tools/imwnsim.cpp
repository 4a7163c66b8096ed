// imwnsim: capacity and packet-level simulation of multi-hop wireless line networks.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "imwn/capacity.hpp"
#include "imwn/config.hpp"
#include "imwn/errors.hpp"
#include "imwn/harness.hpp"
#include "imwn/packetsim.hpp"
#include "imwn/published.hpp"

namespace {

using namespace imwn;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitConsistency = 2;

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> settings;
  std::optional<int> nodes_per_stream;
  std::optional<double> hop_length_m;
  std::optional<double> row_separation_m;
  std::optional<double> path_loss_exponent;
  std::optional<double> noise_figure;
  std::optional<std::string> noise_figure_unit;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--config", o.config_path, "key = value config file");
  cmd->add_option("--set", o.settings, "override a config key, e.g. --set tx_power_w=0.05")->type_name("KEY=VALUE");
  cmd->add_option("--nodes-per-stream", o.nodes_per_stream, "nodes per row");
  cmd->add_option("--hop-length", o.hop_length_m, "metres between adjacent nodes");
  cmd->add_option("--row-separation", o.row_separation_m, "metres between rows");
  cmd->add_option("--eta", o.path_loss_exponent, "path loss exponent");
  cmd->add_option("--noise-figure", o.noise_figure, "receiver noise figure");
  cmd->add_option("--noise-figure-unit", o.noise_figure_unit, "dB or linear");
}

ExperimentSpec resolve(const CommonOptions& o) {
  ExperimentSpec spec;
  if (!o.config_path.empty()) spec = load_config(o.config_path);
  for (const auto& kv : o.settings) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError(fmt::format("--set expects KEY=VALUE, got '{}'", kv));
    apply_setting(spec, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.nodes_per_stream) spec.layout.nodes_per_stream = *o.nodes_per_stream;
  if (o.hop_length_m) spec.layout.hop_length_m = *o.hop_length_m;
  if (o.row_separation_m) spec.layout.row_separation_m = *o.row_separation_m;
  if (o.path_loss_exponent) spec.radio.path_loss_exponent = *o.path_loss_exponent;
  if (o.noise_figure) spec.radio.noise_figure = *o.noise_figure;
  if (o.noise_figure_unit) apply_setting(spec, "noise_figure_unit", *o.noise_figure_unit);
  spec.layout.validate();
  spec.radio.validate();
  return spec;
}

void print_layout(const ExperimentSpec& spec, int streams) {
  LayoutConfig cfg = spec.layout;
  cfg.num_streams = streams;
  const auto geo = build_layout(cfg);
  fmt::print("# {} stream(s), {} nodes per stream\n", streams, cfg.nodes_per_stream);
  if (geo.outside_validated_range()) fmt::print("# note: node count exceeds the originally studied range\n");
  for (std::size_t i = 0; i < static_cast<std::size_t>(geo.total_nodes()); ++i) {
    const auto id = geo.node_at(i);
    const auto p = geo.position(id);
    fmt::print("s{}n{}  x={:8.1f}  y={:8.1f}\n", id.stream, id.index, p.x, p.y);
  }
  fmt::print("\ndistance matrix (m)\n{:>6}", "");
  for (std::size_t j = 0; j < static_cast<std::size_t>(geo.total_nodes()); ++j) {
    fmt::print("{:>9}", fmt::format("s{}n{}", geo.node_at(j).stream, geo.node_at(j).index));
  }
  fmt::print("\n");
  for (std::size_t i = 0; i < static_cast<std::size_t>(geo.total_nodes()); ++i) {
    fmt::print("{:>6}", fmt::format("s{}n{}", geo.node_at(i).stream, geo.node_at(i).index));
    for (std::size_t j = 0; j < static_cast<std::size_t>(geo.total_nodes()); ++j) fmt::print("{:9.1f}", geo.distance(i, j));
    fmt::print("\n");
  }
}

void print_capacity(const ExperimentSpec& spec, Mode mode, int z, int hops, int streams) {
  Scenario sc;
  sc.layout = spec.layout;
  sc.layout.num_streams = streams;
  sc.radio = spec.radio;
  sc.mode = mode;
  sc.period_z = z;
  sc.hops = hops;
  sc.phase = spec.phase;
  const auto report = evaluate(sc);
  fmt::print("# {} Z={} hops={} streams={}  noise {:.4e} W\n", to_string(mode), z, hops, streams,
             noise_power(spec.radio));
  fmt::print("{:>4} {:>6} {:>6} {:>8} {:>12} {:>12} {:>10} {:>12}\n", "slot", "rx", "tx", "dir", "signal_W",
             "interf_W", "SINR", "rate_bps");
  for (const auto& s : report.streams) {
    for (const auto& e : s.events) {
      fmt::print("{:>4} {:>6} {:>6} {:>8} {:>12.4e} {:>12.4e} {:>10.3f} {:>12.1f}\n", e.event.slot,
                 fmt::format("s{}n{}", e.event.receiver.stream, e.event.receiver.index),
                 fmt::format("s{}n{}", e.event.wanted_tx.stream, e.event.wanted_tx.index),
                 to_string(e.event.direction), e.signal_w, e.interference_w, e.sinr, e.rate_bps);
    }
  }
  for (const auto& s : report.streams) {
    fmt::print("stream {}: forward {:.1f} bps, reverse {:.1f} bps, capacity {:.1f} bps per slot\n", s.stream,
               s.forward_bottleneck_bps, s.reverse_bottleneck_bps, s.capacity_per_timeslot_bps);
  }
  fmt::print("network capacity: {:.1f} bps per slot\n", report.total_bps);
}

int run(int argc, char** argv) {
  CLI::App app{"Capacity and packet-level simulator for multi-hop wireless line networks"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string mode_text = "NC";
  int z = 4;
  int hops = 4;
  int streams = 1;

  auto* layout_cmd = app.add_subcommand("layout", "print node positions and the distance matrix");
  add_common(layout_cmd, common);
  layout_cmd->add_option("--streams", streams, "1 or 2");

  auto* cap_cmd = app.add_subcommand("capacity", "SINR, bottlenecks and capacity for one configuration");
  add_common(cap_cmd, common);
  cap_cmd->add_option("--mode", mode_text, "TR or NC");
  cap_cmd->add_option("--z", z, "schedule period");
  cap_cmd->add_option("--hops", hops, "route length in hops");
  cap_cmd->add_option("--streams", streams, "1 or 2");

  int periods = 0;
  bool show_trace = false;
  std::string trace_csv;
  int route_nodes = 5;
  auto* sim_cmd = app.add_subcommand("simulate", "packet-level XOR/store-and-forward simulation");
  sim_cmd->add_option("--mode", mode_text, "TR or NC");
  sim_cmd->add_option("--z", z, "schedule period");
  sim_cmd->add_option("--nodes", route_nodes, "route length in nodes (N_o)");
  sim_cmd->add_option("--periods", periods, "schedule periods to simulate (default: enough for steady state)");
  sim_cmd->add_flag("--trace", show_trace, "print the slot-by-slot table");
  sim_cmd->add_option("--csv", trace_csv, "write the trace as CSV");

  std::string output;
  std::string plot;
  bool serial = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "full experiment sweep to CSV");
  add_common(sweep_cmd, common);
  sweep_cmd->add_option("--output,-o", output, "CSV path (default: config 'output' or stdout)");
  sweep_cmd->add_option("--plot", plot, "also write capacity-vs-Z plot CSV");
  sweep_cmd->add_flag("--serial", serial, "single-threaded reference path");

  auto* t4_cmd = app.add_subcommand("published", "compare optimum periods and rates with the published table");
  add_common(t4_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*layout_cmd) {
      print_layout(resolve(common), streams);
    } else if (*cap_cmd) {
      print_capacity(resolve(common), parse_mode(mode_text), z, hops, streams);
    } else if (*sim_cmd) {
      const Mode mode = parse_mode(mode_text);
      ScheduleConfig{z, route_nodes, mode}.validate();
      const auto trace = run_sim(mode, route_nodes, z, periods > 0 ? periods : default_sim_periods(route_nodes));
      if (show_trace) fmt::print("{}\n", format_trace_table(trace));
      if (!trace_csv.empty()) {
        std::ofstream out(trace_csv);
        if (!out) throw ConfigError(fmt::format("cannot write '{}'", trace_csv));
        write_trace_csv(out, trace);
      }
      const auto rate = measured_delivery_rate(trace);
      fmt::print("latency forward {} slots, reverse {} slots; delivery rate {}/{} packets per slot\n",
                 measured_latency(trace, Travel::Forward), measured_latency(trace, Travel::Reverse), rate.num,
                 rate.den);
      if (trace.dropped != 0) throw ConsistencyError(fmt::format("{} packets dropped", trace.dropped));
    } else if (*sweep_cmd) {
      const auto spec = resolve(common);
      const auto rows = serial ? run_sweep_serial(spec) : run_sweep(spec);
      const std::string path = output.empty() ? spec.output_path : output;
      if (path.empty()) {
        write_csv(std::cout, rows);
      } else {
        std::ofstream out(path);
        if (!out) throw ConfigError(fmt::format("cannot write '{}'", path));
        write_csv(out, rows);
      }
      if (!plot.empty()) {
        std::ofstream out(plot);
        if (!out) throw ConfigError(fmt::format("cannot write '{}'", plot));
        write_plot_csv(out, rows);
      }
    } else if (*t4_cmd) {
      auto spec = resolve(common);
      spec.modes = {Mode::TR, Mode::NC};
      spec.stream_counts = {1, 2};
      spec.hop_counts = {2, 3, 4, 5};
      spec.z_values = {2, 3, 4, 5};
      fmt::print("{}", format_published(compare_published(run_sweep(spec))));
    }
  } catch (const ConfigError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitConfig;
  } catch (const ConsistencyError& e) {
    fmt::print(stderr, "consistency failure: {}\n", e.what());
    return kExitConsistency;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
