#include "imwn/packetsim.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

#include <fmt/core.h>

#include "imwn/errors.hpp"

namespace imwn {

std::string packet_name(const PacketId& id) {
  return fmt::format("{}{}", id.travel == Travel::Forward ? 'F' : 'R', id.sequence);
}

PacketLabel::PacketLabel(std::vector<PacketId> components) {
  std::sort(components.begin(), components.end());
  for (std::size_t i = 0; i < components.size();) {
    std::size_t j = i;
    while (j < components.size() && components[j] == components[i]) ++j;
    if ((j - i) % 2 == 1) parts_.push_back(components[i]);
    i = j;
  }
}

bool PacketLabel::contains(const PacketId& id) const { return std::binary_search(parts_.begin(), parts_.end(), id); }

std::optional<PacketId> PacketLabel::decode(const std::set<PacketId>& known) const {
  std::optional<PacketId> unknown;
  for (const auto& id : parts_) {
    if (known.count(id)) continue;
    if (unknown) return std::nullopt;
    unknown = id;
  }
  return unknown;
}

std::string PacketLabel::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& id : parts_) {
    if (!out.empty()) out += '^';
    out += packet_name(id);
  }
  return out;
}

PacketLabel operator^(const PacketLabel& a, const PacketLabel& b) {
  PacketLabel out;
  std::set_symmetric_difference(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                                std::back_inserter(out.parts_));
  return out;
}

Rational Rational::reduced(long num, long den) {
  if (den == 0) throw ConsistencyError("rational with zero denominator");
  const long g = std::gcd(num, den);
  if (den < 0) return {-num / g, -den / g};
  return {num / g, den / g};
}

namespace {

struct NodeState {
  std::optional<PacketId> stored_forward;
  std::optional<PacketId> stored_reverse;
  std::set<PacketId> known;
};

class Engine {
 public:
  Engine(Mode mode, int nodes_per_stream, int period_z)
      : schedule_(make_schedule({period_z, nodes_per_stream, mode})), n_o_(nodes_per_stream),
        nodes_(static_cast<std::size_t>(nodes_per_stream) + 1) {
    trace_.mode = mode;
    trace_.nodes_per_stream = nodes_per_stream;
    trace_.period_z = period_z;
    trace_.schedule_period = schedule_.period();
  }

  SimTrace run(int num_periods) {
    if (num_periods < 1) throw ConfigError(fmt::format("num_periods must be positive, got {}", num_periods));
    const long total = static_cast<long>(num_periods) * schedule_.period();
    for (long t = 1; t <= total; ++t) step(t);
    trace_.injected = injected_;
    trace_.dropped = dropped_;
    return std::move(trace_);
  }

 private:
  NodeState& node(int i) { return nodes_[static_cast<std::size_t>(i)]; }

  PacketId inject(Travel travel, long slot) {
    long& seq = travel == Travel::Forward ? next_forward_ : next_reverse_;
    const PacketId id{travel, seq++, travel == Travel::Forward ? 1 : n_o_};
    injection_slot_[id] = slot;
    node(id.origin).known.insert(id);
    ++injected_;
    return id;
  }

  static PacketLabel take(std::optional<PacketId>& slot) {
    PacketLabel label = slot ? PacketLabel::of(*slot) : PacketLabel{};
    slot.reset();
    return label;
  }

  PacketLabel outgoing(const Transmission& tx, long slot) {
    NodeState& st = node(tx.node);
    switch (tx.direction) {
      case Direction::Forward:
        return tx.node == 1 ? PacketLabel::of(inject(Travel::Forward, slot)) : take(st.stored_forward);
      case Direction::Reverse:
        return tx.node == n_o_ ? PacketLabel::of(inject(Travel::Reverse, slot)) : take(st.stored_reverse);
      case Direction::Broadcast:
        if (tx.node == 1) return PacketLabel::of(inject(Travel::Forward, slot));
        if (tx.node == n_o_) return PacketLabel::of(inject(Travel::Reverse, slot));
        {
          PacketLabel fwd = take(st.stored_forward);
          return fwd ^ take(st.stored_reverse);
        }
    }
    return {};
  }

  bool is_destination(const PacketId& id, int at) const {
    return (id.travel == Travel::Forward && at == n_o_) || (id.travel == Travel::Reverse && at == 1);
  }

  void store(int at, const PacketId& id, std::set<int>& touched) {
    auto& buffer = id.travel == Travel::Forward ? node(at).stored_forward : node(at).stored_reverse;
    if (buffer && *buffer != id) ++dropped_;
    buffer = id;
    touched.insert(at);
  }

  void step(long t) {
    SlotRecord rec;
    rec.slot = t;
    const TransmitSet& set = schedule_.at(t);

    for (const auto& tx : set.transmitters) {
      rec.transmissions.push_back({tx.node, outgoing(tx, t), intended_receivers(tx, n_o_)});
    }

    struct Pending {
      int node;
      int from;
      PacketLabel label;
      bool done = false;
    };
    std::vector<Pending> pending;
    for (const auto& tx : rec.transmissions) {
      if (tx.label.empty()) continue;
      for (int rx : tx.receivers) {
        if (!set.transmits(rx)) pending.push_back({rx, tx.node, tx.label});
      }
    }

    // Simultaneous receptions at one node may unlock each other, so retry
    // until no further label decodes.
    std::set<int> touched;
    for (bool progress = true; progress;) {
      progress = false;
      for (auto& p : pending) {
        if (p.done) continue;
        NodeState& st = node(p.node);
        const auto residual = p.label.decode(st.known);
        const bool nothing_new = std::all_of(p.label.components().begin(), p.label.components().end(),
                                             [&](const PacketId& id) { return st.known.count(id) > 0; });
        if (!residual && !nothing_new) continue;
        p.done = true;
        progress = true;
        rec.receptions.push_back({p.node, p.from, p.label, residual});
        if (!residual) continue;
        st.known.insert(*residual);
        if (is_destination(*residual, p.node)) {
          const long injected_at = injection_slot_.at(*residual);
          Delivery d{*residual, p.node, injected_at, t};
          rec.deliveries.push_back(d);
          trace_.deliveries.push_back(d);
          ++delivered_;
        } else {
          store(p.node, *residual, touched);
        }
      }
    }
    for (const auto& p : pending) {
      if (!p.done) {
        rec.receptions.push_back({p.node, p.from, p.label, std::nullopt});
        ++dropped_;
      }
    }

    if (schedule_.config.mode == Mode::NC) {
      for (int at : touched) {
        const NodeState& st = node(at);
        if (st.stored_forward && st.stored_reverse) {
          rec.combines.push_back({at, PacketLabel::of(*st.stored_forward) ^ PacketLabel::of(*st.stored_reverse)});
        }
      }
    }

    long buffered = 0;
    for (int i = 1; i <= n_o_; ++i) buffered += (node(i).stored_forward ? 1 : 0) + (node(i).stored_reverse ? 1 : 0);
    rec.injected_total = injected_;
    rec.delivered_total = delivered_;
    rec.buffered = buffered;
    rec.dropped_total = dropped_;
    trace_.slots.push_back(std::move(rec));
  }

  Schedule schedule_;
  int n_o_;
  std::vector<NodeState> nodes_;  // index 0 unused
  std::map<PacketId, long> injection_slot_;
  long next_forward_ = 0;
  long next_reverse_ = 0;
  long injected_ = 0;
  long delivered_ = 0;
  long dropped_ = 0;
  SimTrace trace_;
};

}  // namespace

SimTrace run_tr_sim(int nodes_per_stream, int period_z, int num_periods) {
  return Engine(Mode::TR, nodes_per_stream, period_z).run(num_periods);
}

SimTrace run_nc_sim(int nodes_per_stream, int period_z, int num_periods) {
  return Engine(Mode::NC, nodes_per_stream, period_z).run(num_periods);
}

SimTrace run_sim(Mode mode, int nodes_per_stream, int period_z, int num_periods) {
  return mode == Mode::TR ? run_tr_sim(nodes_per_stream, period_z, num_periods)
                          : run_nc_sim(nodes_per_stream, period_z, num_periods);
}

int default_sim_periods(int nodes_per_stream) { return nodes_per_stream + 8; }

long measured_latency(const SimTrace& trace, Travel travel) {
  const long warmup = static_cast<long>(kWarmupPeriods) * trace.schedule_period;
  std::optional<long> latency;
  int samples = 0;
  for (const auto& d : trace.deliveries) {
    if (d.packet.travel != travel || d.injection_slot <= warmup) continue;
    if (latency && *latency != d.latency()) {
      throw ConsistencyError(fmt::format("steady-state latency varies: {} then {} ({} packet {})", *latency,
                                         d.latency(), travel == Travel::Forward ? "forward" : "reverse",
                                         packet_name(d.packet)));
    }
    latency = d.latency();
    ++samples;
  }
  if (samples < 3) {
    throw ConsistencyError(fmt::format("only {} steady-state deliveries; simulate more periods", samples));
  }
  return *latency;
}

Rational measured_delivery_rate(const SimTrace& trace) {
  const long period = trace.schedule_period;
  const long total_slots = static_cast<long>(trace.slots.size());
  long first_forward = -1;
  long first_reverse = -1;
  for (const auto& d : trace.deliveries) {
    long& first = d.packet.travel == Travel::Forward ? first_forward : first_reverse;
    if (first < 0) first = d.delivery_slot;
  }
  if (first_forward < 0 || first_reverse < 0) {
    throw ConsistencyError("no delivery in one direction; simulate more periods");
  }
  const long settled = (std::max(first_forward, first_reverse) + period - 1) / period;
  const long start_period = std::max<long>(kWarmupPeriods, settled);
  const long periods = total_slots / period - start_period;
  if (periods < 1) throw ConsistencyError("no whole steady-state period in trace; simulate more periods");
  const long begin = start_period * period;
  const long end = begin + periods * period;
  const auto count = std::count_if(trace.deliveries.begin(), trace.deliveries.end(), [&](const Delivery& d) {
    return d.delivery_slot > begin && d.delivery_slot <= end;
  });
  return Rational::reduced(static_cast<long>(count), periods * period);
}

std::string format_trace_table(const SimTrace& trace) {
  std::string out = fmt::format("# {} N_o={} Z={} period={}\n", to_string(trace.mode), trace.nodes_per_stream,
                                trace.period_z, trace.schedule_period);
  out += fmt::format("{:>5}  {:<34}  {:<26}  {:<14}  {}\n", "slot", "transmissions", "decoded", "xor", "delivered");
  for (const auto& rec : trace.slots) {
    std::string tx, rx, combine, delivered;
    for (const auto& t : rec.transmissions) {
      std::string to;
      for (int r : t.receivers) to += (to.empty() ? "" : ",") + std::to_string(r);
      tx += fmt::format("{}{}:{}->{}", tx.empty() ? "" : " ", t.node, t.label.to_string(), to);
    }
    for (const auto& r : rec.receptions) {
      if (r.decoded) rx += fmt::format("{}{}@{}", rx.empty() ? "" : " ", packet_name(*r.decoded), r.node);
    }
    for (const auto& c : rec.combines) combine += fmt::format("{}{}@{}", combine.empty() ? "" : " ", c.label.to_string(), c.node);
    for (const auto& d : rec.deliveries) {
      delivered += fmt::format("{}{}@{}(L={})", delivered.empty() ? "" : " ", packet_name(d.packet), d.node, d.latency());
    }
    out += fmt::format("{:>5}  {:<34}  {:<26}  {:<14}  {}\n", rec.slot, tx, rx, combine, delivered);
  }
  return out;
}

void write_trace_csv(std::ostream& out, const SimTrace& trace) {
  out << "slot,event,node,peers,label,latency\n";
  for (const auto& rec : trace.slots) {
    for (const auto& t : rec.transmissions) {
      std::string to;
      for (int r : t.receivers) to += (to.empty() ? "" : ";") + std::to_string(r);
      out << fmt::format("{},tx,{},{},{},\n", rec.slot, t.node, to, t.label.to_string());
    }
    for (const auto& r : rec.receptions) {
      out << fmt::format("{},rx,{},{},{},\n", rec.slot, r.node, r.from,
                         r.decoded ? packet_name(*r.decoded) : std::string("-"));
    }
    for (const auto& c : rec.combines) out << fmt::format("{},xor,{},,{},\n", rec.slot, c.node, c.label.to_string());
    for (const auto& d : rec.deliveries) {
      out << fmt::format("{},deliver,{},,{},{}\n", rec.slot, d.node, packet_name(d.packet), d.latency());
    }
  }
}

}  // namespace imwn
