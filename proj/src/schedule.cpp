#include "imwn/schedule.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include <fmt/core.h>

#include "imwn/errors.hpp"

namespace imwn {

std::string_view to_string(Mode mode) { return mode == Mode::TR ? "TR" : "NC"; }

Mode parse_mode(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "TR") return Mode::TR;
  if (upper == "NC") return Mode::NC;
  throw ConfigError(fmt::format("unknown transmission mode '{}'", text));
}

std::string_view to_string(Direction direction) {
  switch (direction) {
    case Direction::Forward: return "forward";
    case Direction::Reverse: return "reverse";
    case Direction::Broadcast: return "broadcast";
  }
  return "?";
}

void ScheduleConfig::validate() const {
  if (period_z < 2) throw ConfigError(fmt::format("schedule period must be at least 2, got {}", period_z));
  if (nodes_per_stream < 3) {
    throw ConfigError(fmt::format("route must have at least 3 nodes, got {}", nodes_per_stream));
  }
}

std::vector<int> intended_receivers(const Transmission& tx, int nodes_per_stream) {
  std::vector<int> out;
  if (tx.direction != Direction::Forward && tx.node - 1 >= 1) out.push_back(tx.node - 1);
  if (tx.direction != Direction::Reverse && tx.node + 1 <= nodes_per_stream) out.push_back(tx.node + 1);
  return out;
}

bool TransmitSet::transmits(int node) const {
  return std::any_of(transmitters.begin(), transmitters.end(), [node](const Transmission& t) { return t.node == node; });
}

const TransmitSet& Schedule::at(long global_slot) const {
  const long p = period();
  const long idx = ((global_slot - 1) % p + p) % p;
  return slots[static_cast<std::size_t>(idx)];
}

namespace {

void check_slot(int period_z, int slot) {
  if (period_z < 1 || slot < 1 || slot > period_z) {
    throw ConfigError(fmt::format("slot {} outside schedule period 1..{}", slot, period_z));
  }
}

}  // namespace

std::vector<int> forward_set(int nodes_per_stream, int period_z, int slot) {
  check_slot(period_z, slot);
  std::vector<int> out;
  if (slot > nodes_per_stream - 1) return out;
  const int last_n = (nodes_per_stream - 1 - slot) / period_z;
  for (int n = 0; n <= last_n; ++n) out.push_back(slot + n * period_z);
  return out;
}

std::vector<int> reverse_set(int nodes_per_stream, int period_z, int slot) {
  check_slot(period_z, slot);
  std::vector<int> out;
  if (slot > nodes_per_stream - 1) return out;
  const int last_n = (nodes_per_stream - 1 - slot) / period_z;
  for (int n = 0; n <= last_n; ++n) out.push_back(nodes_per_stream + 1 - slot - n * period_z);
  return out;
}

std::vector<int> broadcast_set(int nodes_per_stream, int period_z, int slot) {
  check_slot(period_z, slot);
  std::vector<int> out;
  for (int node = slot; node <= nodes_per_stream; node += period_z) out.push_back(node);
  return out;
}

Schedule tr_schedule(const ScheduleConfig& config) {
  config.validate();
  if (config.mode != Mode::TR) throw ConfigError("tr_schedule requires mode TR");
  Schedule schedule{config, {}};
  const int z = config.period_z;
  const int n_o = config.nodes_per_stream;
  for (int i = 1; i <= z; ++i) {
    TransmitSet set{i, {}};
    for (int node : forward_set(n_o, z, i)) set.transmitters.push_back({node, Direction::Forward});
    schedule.slots.push_back(std::move(set));
  }
  for (int i = 1; i <= z; ++i) {
    TransmitSet set{z + i, {}};
    for (int node : reverse_set(n_o, z, i)) set.transmitters.push_back({node, Direction::Reverse});
    schedule.slots.push_back(std::move(set));
  }
  return schedule;
}

Schedule nc_schedule(const ScheduleConfig& config) {
  config.validate();
  if (config.mode != Mode::NC) throw ConfigError("nc_schedule requires mode NC");
  Schedule schedule{config, {}};
  for (int i = 1; i <= config.period_z; ++i) {
    TransmitSet set{i, {}};
    for (int node : broadcast_set(config.nodes_per_stream, config.period_z, i)) {
      set.transmitters.push_back({node, Direction::Broadcast});
    }
    schedule.slots.push_back(std::move(set));
  }
  return schedule;
}

Schedule make_schedule(const ScheduleConfig& config) {
  return config.mode == Mode::TR ? tr_schedule(config) : nc_schedule(config);
}

bool satisfies_half_duplex(const TransmitSet& set, int nodes_per_stream) {
  for (const auto& tx : set.transmitters) {
    for (int rx : intended_receivers(tx, nodes_per_stream)) {
      if (set.transmits(rx)) return false;
    }
  }
  return true;
}

}  // namespace imwn
