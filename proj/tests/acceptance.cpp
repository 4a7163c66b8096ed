// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any gating criterion fails; criterion 8 is reported but not gating.

#include <fmt/core.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "imwn/capacity.hpp"
#include "imwn/harness.hpp"
#include "imwn/packetsim.hpp"
#include "imwn/radio.hpp"
#include "imwn/schedule.hpp"
#include "imwn/published.hpp"
#include "oracles.hpp"

using namespace imwn;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}


Outcome schedule_sets() {
  const auto t0 = Clock::now();
  const bool ok = forward_set(5, 3, 1) == std::vector<int>{1, 4} && forward_set(5, 3, 2) == std::vector<int>{2} &&
                  forward_set(5, 3, 3) == std::vector<int>{3} && reverse_set(5, 3, 1) == std::vector<int>{5, 2} &&
                  reverse_set(5, 3, 2) == std::vector<int>{4} && reverse_set(5, 3, 3) == std::vector<int>{3};
  const double ms = ms_since(t0);
  return {ok && ms < 1.0, fmt::format("{:.3f} ms", ms)};
}

Outcome latency_grid() {
  const auto t0 = Clock::now();
  int cells = 0, bad = 0;
  std::string first_bad;
  for (int n = 3; n <= 7; ++n) {
    for (int z = 2; z <= 6; ++z) {
      ++cells;
      const auto tr = run_tr_sim(n, z, default_sim_periods(n));
      const auto nc = run_nc_sim(n, z, default_sim_periods(n));
      const bool ok = measured_latency(tr, Travel::Forward) == oracle::tr_latency(n, z) &&
                      measured_latency(tr, Travel::Reverse) == oracle::tr_latency(n, z) &&
                      measured_latency(nc, Travel::Forward) == oracle::nc_forward_latency(n) &&
                      measured_latency(nc, Travel::Reverse) == oracle::nc_reverse_latency(n, z);
      if (!ok && bad++ == 0) first_bad = fmt::format(", first mismatch N_o={} Z={}", n, z);
    }
  }
  const double ms = ms_since(t0);
  return {bad == 0 && ms < 1000.0, fmt::format("{}/{} cells exact, {:.1f} ms{}", cells - bad, cells, ms, first_bad)};
}

Outcome nc_golden_trace() {
  const auto t = run_nc_sim(5, 4, default_sim_periods(5));
  const PacketId a{Travel::Forward, 0, 1}, b{Travel::Reverse, 0, 5};
  const auto& s = [&](long i) -> const SlotRecord& { return t.slots.at(static_cast<std::size_t>(i - 1)); };

  std::vector<std::string> missing;
  const auto& s3 = s(3).combines;
  if (!(s3.size() == 1 && s3[0].node == 4 && s3[0].label == PacketLabel({a, b})))
    missing.push_back("node 4 forms A^B in slot 3");
  bool decoded = false;
  for (const auto& rx : s(4).receptions) decoded |= rx.node == 5 && rx.decoded == a;
  if (!decoded) missing.push_back("node 5 decodes A in slot 4");
  const auto& d10 = s(10).deliveries;
  if (!(d10.size() == 1 && d10[0].packet == b && d10[0].node == 1)) missing.push_back("B delivered at node 1 in slot 10");
  const auto& d4 = s(4).deliveries;
  if (!(d4.size() == 1 && d4[0].packet == a && d4[0].node == 5)) missing.push_back("A delivered at node 5 in slot 4");
  const auto schedule = nc_schedule({4, 5, Mode::NC});
  for (const auto& rec : t.slots) {
    const auto& want = schedule.at(rec.slot).transmitters;
    bool same = rec.transmissions.size() == want.size();
    for (std::size_t i = 0; same && i < want.size(); ++i) same = rec.transmissions[i].node == want[i].node;
    if (!same) {
      missing.push_back(fmt::format("transmitters in slot {}", rec.slot));
      break;
    }
  }
  if (missing.empty()) return {true, "A^B at node 4 slot 3, A decoded at node 5 slot 4, B at node 1 slot 10"};
  std::string detail = "missing:";
  for (const auto& m : missing) detail += " [" + m + "]";
  return {false, detail};
}

Outcome delivery_rates() {
  int cells = 0, bad = 0;
  for (int n = 3; n <= 7; ++n) {
    for (int z = 2; z <= 6; ++z) {
      cells += 2;
      if (!(measured_delivery_rate(run_tr_sim(n, z, default_sim_periods(n))) == Rational::reduced(1, z))) ++bad;
      if (!(measured_delivery_rate(run_nc_sim(n, z, default_sim_periods(n))) == Rational::reduced(2, z))) ++bad;
    }
  }
  return {bad == 0, fmt::format("{}/{} (mode, N_o, Z) cells exact", cells - bad, cells)};
}

Outcome capacity_identity() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rate(1e3, 1e8);
  std::uniform_int_distribution<int> zdist(2, 8);
  double worst = 0.0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    const double f = rate(rng), r = rate(rng);
    const int z = zdist(rng);
    const double tr = capacity_per_timeslot(Mode::TR, f, r, z);
    const double nc = capacity_per_timeslot(Mode::NC, f, r, z);
    worst = std::max(worst, std::abs(nc - 2 * tr) / (2 * tr));
  }
  return {worst <= 1e-12, fmt::format("{} random pairs, worst relative error {:.2e}", trials, worst)};
}

Outcome interference_monotone() {
  const RadioConfig radio;
  int compared = 0, violations = 0;
  for (Mode mode : {Mode::TR, Mode::NC}) {
    for (int n = 3; n <= 7; ++n) {
      LayoutConfig layout;
      layout.nodes_per_stream = n;
      layout.num_streams = 1;
      const NodeGeometry geo(layout);
      const std::vector<Route> routes{stream_route(geo, 0, 1, n)};
      std::map<std::pair<int, int>, double> previous;
      for (int z = 2; z <= 5; ++z) {
        std::map<std::pair<int, int>, double> current;
        for (const auto& ev : reception_events(make_schedule({z, n, mode}), geo, routes)) {
          if (ev.receiver.index != ev.wanted_tx.index + 1) continue;  // forward hops only
          current[{ev.wanted_tx.index, ev.receiver.index}] = interference_power(ev, geo, radio);
        }
        for (const auto& [key, value] : current) {
          auto it = previous.find(key);
          if (it == previous.end()) continue;
          ++compared;
          if (value > it->second) ++violations;
        }
        previous = std::move(current);
      }
    }
  }
  return {violations == 0 && compared > 0,
          fmt::format("{} forward events compared across Z = 2..5, {} increases", compared, violations)};
}

Outcome qualitative_table(const PublishedComparison& cmp) {
  bool ok = true;
  std::string detail;
  for (const auto& imp : cmp.improvements) {
    const double lo = imp.streams == 1 ? 0.40 : 0.42;
    const double hi = imp.streams == 1 ? 1.10 : 0.98;
    const bool in = imp.computed > 0.0 && imp.computed >= lo && imp.computed <= hi;
    ok &= in;
    detail += fmt::format(" {}s{}h={:.1f}%{}", imp.streams, imp.hops, 100 * imp.computed, in ? "" : "!");
  }
  return {ok, "improvement" + detail};
}

Outcome quantitative_table(const PublishedComparison& cmp) {
  const int matched = cmp.matched_z_groups();
  const double worst = cmp.max_abs_relative_delta();
  std::string detail = fmt::format("optimum Z {}/{} groups, worst |delta| {:.1f}%; deltas:", matched,
                                   cmp.total_z_groups(), 100 * worst);
  for (const auto& c : cmp.cells) {
    detail += fmt::format(" {}s{}h{}={:+.1f}%", c.streams, c.hops, to_string(c.mode), 100 * c.relative_delta);
  }
  return {matched >= 6 && worst <= 0.25, detail};
}

Outcome friis_sanity() {
  RadioConfig radio;
  radio.path_loss_exponent = 2.0;
  double worst = 0.0;
  for (double d : {1.0, 3.5, 10.0, 100.0, 316.2, 1000.0, 12345.0}) {
    for (double f : {9e8, 2e9, 5.8e9}) {
      radio.frequency_hz = f;
      const double ours = received_power(radio, d);
      const double ref = oracle::friis(radio.tx_power_w, radio.tx_gain, radio.rx_gain, f, d);
      worst = std::max(worst, std::abs(ours - ref) / ref);
    }
  }
  return {worst <= 1e-12, fmt::format("worst relative error {:.2e}", worst)};
}

}  // namespace

int main() {
  int gating_failures = 0;
  auto report = [&](int id, const char* name, bool gating, const Outcome& o) {
    fmt::print("[{}] {:>2} {}: {}{}\n", o.pass ? "PASS" : "FAIL", id, name, o.detail,
               gating ? "" : " (informational)");
    if (gating && !o.pass) ++gating_failures;
  };
  auto guarded = [](const std::function<Outcome()>& fn) {
    try {
      return fn();
    } catch (const std::exception& e) {
      return Outcome{false, fmt::format("threw: {}", e.what())};
    }
  };

  report(1, "schedule golden sets", true, guarded(schedule_sets));
  report(2, "latency closed forms", true, guarded(latency_grid));
  report(3, "NC golden trace", true, guarded(nc_golden_trace));
  report(4, "delivery-rate factors", true, guarded(delivery_rates));
  report(5, "NC = 2 x TR capacity identity", true, guarded(capacity_identity));
  report(6, "interference monotone in Z", true, guarded(interference_monotone));

  std::vector<ResultRow> rows;
  double sweep_ms = 0.0;
  Outcome sweep_outcome;
  try {
    const auto t0 = Clock::now();
    rows = run_sweep(ExperimentSpec{});
    sweep_ms = ms_since(t0);
    sweep_outcome = {sweep_ms < 5000.0, fmt::format("{} cells with packet sims in {:.1f} ms", rows.size(), sweep_ms)};
  } catch (const std::exception& e) {
    sweep_outcome = {false, fmt::format("threw: {}", e.what())};
  }

  if (rows.empty()) {
    report(7, "NC vs TR improvement bands", true, {false, "no sweep results"});
    report(8, "published optima and rates", false, {false, "no sweep results"});
  } else {
    const auto cmp = compare_published(rows);
    report(7, "NC vs TR improvement bands", true, guarded([&] { return qualitative_table(cmp); }));
    report(8, "published optima and rates", false, guarded([&] { return quantitative_table(cmp); }));
  }
  report(9, "Friis agreement at eta = 2", true, guarded(friis_sanity));
  report(10, "full sweep runtime", true, sweep_outcome);

  fmt::print("{} gating criteria failed\n", gating_failures);
  return gating_failures == 0 ? 0 : 1;
}
