#include "imwn/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "imwn/errors.hpp"

namespace imwn {

namespace {

struct ActiveTx {
  NodeId node;
  int route_index;
  Transmission tx;
};

}  // namespace

std::vector<ReceptionEvent> reception_events(const Schedule& schedule, const NodeGeometry& geometry,
                                             std::span<const Route> routes, StreamPhase phase) {
  const int n_o = schedule.config.nodes_per_stream;
  for (const auto& route : routes) {
    if (route.length() != n_o) {
      throw ConfigError(fmt::format("route on stream {} has {} nodes, schedule expects {}", route.stream,
                                    route.length(), n_o));
    }
    for (int node : route.nodes) {
      if (!geometry.contains({route.stream, node})) {
        throw ConfigError(fmt::format("route node ({}, {}) is outside the layout", route.stream, node));
      }
    }
  }

  std::vector<ReceptionEvent> events;
  const int period = schedule.period();
  for (int slot = 1; slot <= period; ++slot) {
    std::vector<ActiveTx> active;
    for (std::size_t r = 0; r < routes.size(); ++r) {
      const long offset = (phase == StreamPhase::Opposite && routes[r].stream == 1) ? schedule.config.period_z : 0;
      for (const auto& tx : schedule.at(slot + offset).transmitters) {
        active.push_back({routes[r].at(tx.node), static_cast<int>(r), tx});
      }
    }
    for (const auto& a : active) {
      for (int rx : intended_receivers(a.tx, n_o)) {
        ReceptionEvent ev;
        ev.slot = slot;
        ev.receiver = routes[static_cast<std::size_t>(a.route_index)].at(rx);
        ev.wanted_tx = a.node;
        ev.direction = rx > a.tx.node ? Direction::Forward : Direction::Reverse;
        ev.route_index = a.route_index;
        for (const auto& other : active) {
          if (other.node != a.node) ev.interferers.push_back(other.node);
        }
        events.push_back(std::move(ev));
      }
    }
  }
  return events;
}

double interference_power(const ReceptionEvent& event, const NodeGeometry& geometry, const RadioConfig& radio) {
  double total = 0.0;
  for (const auto& node : event.interferers) total += received_power(radio, geometry.distance(node, event.receiver));
  return total;
}

double event_sinr(const ReceptionEvent& event, const NodeGeometry& geometry, const RadioConfig& radio) {
  const double signal = received_power(radio, geometry.distance(event.wanted_tx, event.receiver));
  return sinr(signal, interference_power(event, geometry, radio), noise_power(radio));
}

std::vector<double> received_power_matrix(const NodeGeometry& geometry, const RadioConfig& radio) {
  const auto n = static_cast<std::ptrdiff_t>(geometry.total_nodes());
  std::vector<double> power(static_cast<std::size_t>(n * n), 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t tx = 0; tx < n; ++tx) {
    for (std::ptrdiff_t rx = 0; rx < n; ++rx) {
      if (tx == rx) continue;
      power[static_cast<std::size_t>(tx * n + rx)] =
          received_power(radio, geometry.distance(static_cast<std::size_t>(tx), static_cast<std::size_t>(rx)));
    }
  }
  return power;
}

std::vector<double> received_power_matrix_serial(const NodeGeometry& geometry, const RadioConfig& radio) {
  const std::size_t n = static_cast<std::size_t>(geometry.total_nodes());
  std::vector<double> power(n * n, 0.0);
  for (std::size_t tx = 0; tx < n; ++tx) {
    for (std::size_t rx = 0; rx < n; ++rx) {
      if (tx != rx) power[tx * n + rx] = received_power(radio, geometry.distance(tx, rx));
    }
  }
  return power;
}

std::vector<EventResult> evaluate_events(std::span<const ReceptionEvent> events, const NodeGeometry& geometry,
                                         const RadioConfig& radio) {
  const auto power = received_power_matrix(geometry, radio);
  const std::size_t n = static_cast<std::size_t>(geometry.total_nodes());
  const double noise = noise_power(radio);
  std::vector<EventResult> out(events.size());
  const auto count = static_cast<std::ptrdiff_t>(events.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto& ev = events[static_cast<std::size_t>(k)];
    const std::size_t rx = geometry.flat_index(ev.receiver);
    EventResult res;
    res.event = ev;
    res.signal_w = power[geometry.flat_index(ev.wanted_tx) * n + rx];
    for (const auto& node : ev.interferers) res.interference_w += power[geometry.flat_index(node) * n + rx];
    res.sinr = sinr(res.signal_w, res.interference_w, noise);
    res.rate_bps = shannon_rate(radio, res.sinr);
    out[static_cast<std::size_t>(k)] = std::move(res);
  }
  return out;
}

std::vector<EventResult> evaluate_events_serial(std::span<const ReceptionEvent> events,
                                                const NodeGeometry& geometry, const RadioConfig& radio) {
  std::vector<EventResult> out;
  out.reserve(events.size());
  const double noise = noise_power(radio);
  for (const auto& ev : events) {
    EventResult res;
    res.event = ev;
    res.signal_w = received_power(radio, geometry.distance(ev.wanted_tx, ev.receiver));
    res.interference_w = interference_power(ev, geometry, radio);
    res.sinr = sinr(res.signal_w, res.interference_w, noise);
    res.rate_bps = shannon_rate(radio, res.sinr);
    out.push_back(std::move(res));
  }
  return out;
}

double capacity_per_timeslot(Mode mode, double forward_bps, double reverse_bps, int period_z) {
  const double slots = mode == Mode::TR ? 2.0 * period_z : static_cast<double>(period_z);
  return (forward_bps + reverse_bps) / slots;
}

NetworkCapacityReport stream_capacity(const Schedule& schedule, const NodeGeometry& geometry,
                                      std::span<const Route> routes, const RadioConfig& radio, StreamPhase phase) {
  radio.validate();
  const auto events = reception_events(schedule, geometry, routes, phase);
  auto results = evaluate_events(events, geometry, radio);

  NetworkCapacityReport report;
  for (std::size_t r = 0; r < routes.size(); ++r) {
    StreamCapacityReport s;
    s.stream = routes[r].stream;
    s.mode = schedule.config.mode;
    s.period_z = schedule.config.period_z;
    s.hops = routes[r].hops();
    double fwd = std::numeric_limits<double>::infinity();
    double rev = std::numeric_limits<double>::infinity();
    for (const auto& res : results) {
      if (res.event.route_index != static_cast<int>(r)) continue;
      if (res.event.direction == Direction::Forward) {
        fwd = std::min(fwd, res.rate_bps);
      } else {
        rev = std::min(rev, res.rate_bps);
      }
      s.events.push_back(res);
    }
    if (s.events.empty() || !std::isfinite(fwd) || !std::isfinite(rev)) {
      throw ConsistencyError(fmt::format("stream {} has no reception events in one direction", s.stream));
    }
    s.forward_bottleneck_bps = fwd;
    s.reverse_bottleneck_bps = rev;
    s.capacity_per_timeslot_bps = capacity_per_timeslot(s.mode, fwd, rev, s.period_z);
    report.total_bps += s.capacity_per_timeslot_bps;
    report.streams.push_back(std::move(s));
  }
  return report;
}

NetworkCapacityReport evaluate(const Scenario& scenario) {
  const auto geometry = build_layout(scenario.layout);
  const auto routes = leading_routes(geometry, scenario.hops);
  const auto schedule = make_schedule({scenario.period_z, scenario.hops + 1, scenario.mode});
  return stream_capacity(schedule, geometry, routes, scenario.radio, scenario.phase);
}

OptimumZ optimum_z(const Scenario& base, std::span<const int> z_values) {
  if (z_values.empty()) throw ConfigError("optimum_z needs a non-empty range of periods");
  std::vector<int> zs(z_values.begin(), z_values.end());
  std::sort(zs.begin(), zs.end());
  OptimumZ best;
  for (int z : zs) {
    Scenario s = base;
    s.period_z = z;
    const double cap = evaluate(s).streams.front().capacity_per_timeslot_bps;
    if (best.period_z == 0 || cap > best.capacity_bps * (1.0 + 1e-12)) best = {z, cap};
  }
  return best;
}

}  // namespace imwn
