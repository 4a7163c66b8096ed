#pragma once

#include <span>
#include <vector>

#include "imwn/layout.hpp"
#include "imwn/radio.hpp"
#include "imwn/schedule.hpp"

namespace imwn {

// Relative slot phase of the second stream. Opposite shifts stream 1 by Z
// slots, so in TR it runs its reverse half while stream 0 runs forward.
enum class StreamPhase { Same, Opposite };

struct ReceptionEvent {
  int slot = 1;  // 1-based slot within the network period
  NodeId receiver;
  NodeId wanted_tx;
  std::vector<NodeId> interferers;  // every other transmitter active in the slot, all streams
  Direction direction = Direction::Forward;  // Forward or Reverse relative to the route
  int route_index = 0;
};

/// Every reception implied by one period of `schedule` running on each route.
/// Routes must all have the schedule's N_o and lie inside `geometry`.
std::vector<ReceptionEvent> reception_events(const Schedule& schedule, const NodeGeometry& geometry,
                                             std::span<const Route> routes,
                                             StreamPhase phase = StreamPhase::Same);

struct EventResult {
  ReceptionEvent event;
  double signal_w = 0.0;
  double interference_w = 0.0;
  double sinr = 0.0;
  double rate_bps = 0.0;
};

double interference_power(const ReceptionEvent& event, const NodeGeometry& geometry, const RadioConfig& radio);
double event_sinr(const ReceptionEvent& event, const NodeGeometry& geometry, const RadioConfig& radio);

// Row-major [transmitter][receiver] received power over all layout nodes;
// the diagonal is zero. OpenMP over transmitter rows.
std::vector<double> received_power_matrix(const NodeGeometry& geometry, const RadioConfig& radio);
std::vector<double> received_power_matrix_serial(const NodeGeometry& geometry, const RadioConfig& radio);

// Batch SINR/rate evaluation. The parallel kernel reads the power matrix;
// the serial reference evaluates the path-loss law per pair.
std::vector<EventResult> evaluate_events(std::span<const ReceptionEvent> events, const NodeGeometry& geometry,
                                         const RadioConfig& radio);
std::vector<EventResult> evaluate_events_serial(std::span<const ReceptionEvent> events,
                                                const NodeGeometry& geometry, const RadioConfig& radio);

// (fwd + rev) / Z for NC, (fwd + rev) / 2Z for TR.
double capacity_per_timeslot(Mode mode, double forward_bps, double reverse_bps, int period_z);

struct StreamCapacityReport {
  int stream = 0;
  Mode mode = Mode::TR;
  int period_z = 2;
  int hops = 2;
  std::vector<EventResult> events;
  double forward_bottleneck_bps = 0.0;
  double reverse_bottleneck_bps = 0.0;
  double capacity_per_timeslot_bps = 0.0;
};

struct NetworkCapacityReport {
  std::vector<StreamCapacityReport> streams;
  double total_bps = 0.0;
};

NetworkCapacityReport stream_capacity(const Schedule& schedule, const NodeGeometry& geometry,
                                      std::span<const Route> routes, const RadioConfig& radio,
                                      StreamPhase phase = StreamPhase::Same);

// One fully specified capacity run: routes start at node 1 of every stream.
struct Scenario {
  LayoutConfig layout;
  RadioConfig radio;
  Mode mode = Mode::TR;
  int hops = 2;
  int period_z = 2;
  StreamPhase phase = StreamPhase::Same;
};

NetworkCapacityReport evaluate(const Scenario& scenario);

struct OptimumZ {
  int period_z = 0;
  double capacity_bps = 0.0;  // per stream (stream 0)
};

// Argmax of per-stream capacity over `z_values`; ties go to the smaller Z.
OptimumZ optimum_z(const Scenario& base, std::span<const int> z_values);

}  // namespace imwn
