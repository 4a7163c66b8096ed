#pragma once

#include <string_view>
#include <vector>

namespace imwn {

enum class Mode { TR, NC };
enum class Direction { Forward, Reverse, Broadcast };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);  // "TR" / "NC", case-insensitive
std::string_view to_string(Direction direction);

struct ScheduleConfig {
  int period_z = 2;
  int nodes_per_stream = 3;  // effective route length N_o
  Mode mode = Mode::TR;

  void validate() const;
};

struct Transmission {
  int node = 1;  // route position, 1..N_o
  Direction direction = Direction::Forward;

  friend bool operator==(const Transmission&, const Transmission&) = default;
};

// Forward: node + 1. Reverse: node - 1. Broadcast: whichever neighbours exist.
std::vector<int> intended_receivers(const Transmission& tx, int nodes_per_stream);

struct TransmitSet {
  int slot = 1;  // 1-based position within the schedule period
  std::vector<Transmission> transmitters;

  bool transmits(int node) const;
};

/// One period of a periodic schedule over route positions 1..N_o.
/// TR: slots 1..Z forward, Z+1..2Z reverse. NC: Z broadcast slots.
struct Schedule {
  ScheduleConfig config;
  std::vector<TransmitSet> slots;

  int period() const { return static_cast<int>(slots.size()); }
  // Global slot numbering starts at 1 and wraps every period.
  const TransmitSet& at(long global_slot) const;
};

// Sequential forward schedule: { i + nZ : n = 0 .. floor((N_o - 1 - i) / Z) }.
std::vector<int> forward_set(int nodes_per_stream, int period_z, int slot);

// Sequential reverse schedule: { N_o + 1 - i - nZ : same n bound }.
std::vector<int> reverse_set(int nodes_per_stream, int period_z, int slot);

// NC transmit set: the forward recurrence carried through to the last node,
// { i + nZ <= N_o }. Node N_o therefore injects reverse traffic in slot
// ((N_o - 1) mod Z) + 1, which is slot 1 whenever Z divides N_o - 1.
std::vector<int> broadcast_set(int nodes_per_stream, int period_z, int slot);

Schedule tr_schedule(const ScheduleConfig& config);
Schedule nc_schedule(const ScheduleConfig& config);
Schedule make_schedule(const ScheduleConfig& config);

// No node transmits while it is an intended receiver of another transmission.
bool satisfies_half_duplex(const TransmitSet& set, int nodes_per_stream);

}  // namespace imwn
