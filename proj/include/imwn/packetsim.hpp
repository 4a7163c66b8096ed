#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "imwn/schedule.hpp"

namespace imwn {

// Direction of travel along the route: Forward runs node 1 -> N_o.
enum class Travel { Forward, Reverse };

struct PacketId {
  Travel travel = Travel::Forward;
  long sequence = 0;
  int origin = 1;

  friend auto operator<=>(const PacketId&, const PacketId&) = default;
};

// "F3" / "R0"
std::string packet_name(const PacketId& id);

/// Header of a coded packet: the set of source packets XORed together.
/// XOR is symmetric difference; the empty label is the all-zero packet.
class PacketLabel {
 public:
  PacketLabel() = default;
  explicit PacketLabel(std::vector<PacketId> components);  // duplicate pairs cancel
  static PacketLabel of(const PacketId& id) { return PacketLabel({id}); }

  const std::vector<PacketId>& components() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  bool contains(const PacketId& id) const;

  // The single component not in `known`, if exactly one remains.
  std::optional<PacketId> decode(const std::set<PacketId>& known) const;

  std::string to_string() const;  // "F0^R0", or "0" when empty

  friend PacketLabel operator^(const PacketLabel& a, const PacketLabel& b);
  friend bool operator==(const PacketLabel&, const PacketLabel&) = default;

 private:
  std::vector<PacketId> parts_;  // sorted, unique
};

inline PacketLabel xor_labels(const PacketLabel& a, const PacketLabel& b) { return a ^ b; }

struct TxRecord {
  int node = 0;
  PacketLabel label;  // empty when the node had nothing to send
  std::vector<int> receivers;
};

struct RxRecord {
  int node = 0;
  int from = 0;
  PacketLabel label;
  std::optional<PacketId> decoded;
};

// A relay holding one packet per direction; it will send their XOR.
struct CombineRecord {
  int node = 0;
  PacketLabel label;
};

struct Delivery {
  PacketId packet;
  int node = 0;
  long injection_slot = 0;
  long delivery_slot = 0;

  // Slots occupied from the source's transmission through the final hop, inclusive.
  long latency() const { return delivery_slot - injection_slot + 1; }
};

struct SlotRecord {
  long slot = 0;
  std::vector<TxRecord> transmissions;
  std::vector<RxRecord> receptions;
  std::vector<CombineRecord> combines;
  std::vector<Delivery> deliveries;
  // Counters at the end of the slot.
  long injected_total = 0;
  long delivered_total = 0;
  long buffered = 0;
  long dropped_total = 0;
};

struct SimTrace {
  Mode mode = Mode::TR;
  int nodes_per_stream = 0;
  int period_z = 0;
  int schedule_period = 0;  // 2Z for TR, Z for NC
  std::vector<SlotRecord> slots;
  std::vector<Delivery> deliveries;
  long injected = 0;
  long dropped = 0;  // buffer overwrites plus undecodable receptions
};

// Store-and-forward relaying over the TR schedule with saturated sources.
SimTrace run_tr_sim(int nodes_per_stream, int period_z, int num_periods);

// XOR relaying over the NC schedule. A relay sends stored_forward ^ stored_reverse
// (or whichever exists); a receiver strips known packets and stores the residual
// by its direction of travel.
SimTrace run_nc_sim(int nodes_per_stream, int period_z, int num_periods);

SimTrace run_sim(Mode mode, int nodes_per_stream, int period_z, int num_periods);

// Long enough for measured_latency / measured_delivery_rate on any route.
int default_sim_periods(int nodes_per_stream);

// Periods discarded before steady-state measurement.
inline constexpr int kWarmupPeriods = 3;

// Constant latency of packets injected after warmup. Throws ConsistencyError
// if fewer than 3 qualify or they disagree.
long measured_latency(const SimTrace& trace, Travel travel);

struct Rational {
  long num = 0;
  long den = 1;

  static Rational reduced(long num, long den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Deliveries per slot (both directions) over whole periods after warmup and
// after the first delivery in each direction.
Rational measured_delivery_rate(const SimTrace& trace);

// Slot-by-slot table for eyeballing against hand-drawn schedule diagrams.
std::string format_trace_table(const SimTrace& trace);
void write_trace_csv(std::ostream& out, const SimTrace& trace);

}  // namespace imwn
