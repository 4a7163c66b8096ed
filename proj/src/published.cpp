#include "imwn/published.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include <fmt/core.h>

#include "imwn/errors.hpp"

namespace imwn {

namespace {

constexpr std::array<PublishedEntry, 8> kPublished{{
    {2, Mode::TR, 3, 3, 2.064, 1.749},
    {2, Mode::NC, 4, 3, 3.095, 3.234},
    {3, Mode::TR, 3, 3, 2.064, 1.742},
    {3, Mode::NC, 4, 3, 3.095, 2.654},
    {4, Mode::TR, 4, 3, 1.547, 1.390},
    {4, Mode::NC, 4, 3, 2.645, 2.608},
    {5, Mode::TR, 4, 3, 1.322, 1.390},
    {5, Mode::NC, 4, 3, 2.645, 2.598},
}};

// Printed (C_OS - C_TS)/C_TS column, TR then NC per hop count.
constexpr std::array<double, 8> kPrintedStreamDelta{-0.15, 0.04, -0.15, -0.14, -0.10, -0.02, 0.05, -0.02};

const ResultRow& optimum_row(std::span<const ResultRow> rows, int streams, Mode mode, int hops) {
  for (const auto& r : rows) {
    if (r.optimum && r.streams == streams && r.mode == mode && r.hops == hops) return r;
  }
  throw ConfigError(fmt::format("sweep has no optimum for streams={} mode={} hops={}", streams, to_string(mode), hops));
}

const PublishedEntry& entry(int hops, Mode mode) {
  for (const auto& e : kPublished) {
    if (e.hops == hops && e.mode == mode) return e;
  }
  throw ConfigError("no reference entry");
}

}  // namespace

std::span<const PublishedEntry> published_reference() { return kPublished; }

PublishedComparison compare_published(std::span<const ResultRow> rows) {
  PublishedComparison out;
  for (int streams : {1, 2}) {
    for (const auto& e : kPublished) {
      const auto& row = optimum_row(rows, streams, e.mode, e.hops);
      PublishedCell cell;
      cell.streams = streams;
      cell.hops = e.hops;
      cell.mode = e.mode;
      cell.published_z = streams == 1 ? e.os_z : e.ts_z;
      cell.published_mbps = streams == 1 ? e.os_mbps : e.ts_mbps;
      cell.computed_z = row.z;
      cell.computed_mbps = row.capacity_bps / 1e6;
      cell.relative_delta = (cell.computed_mbps - cell.published_mbps) / cell.published_mbps;
      cell.verifiable = !(streams == 2 && e.mode == Mode::TR && e.hops == 2);
      out.cells.push_back(cell);
    }
    for (int hops = 2; hops <= 5; ++hops) {
      const double tr = optimum_row(rows, streams, Mode::TR, hops).capacity_bps;
      const double nc = optimum_row(rows, streams, Mode::NC, hops).capacity_bps;
      const auto& ptr = entry(hops, Mode::TR);
      const auto& pnc = entry(hops, Mode::NC);
      const double published_tr = streams == 1 ? ptr.os_mbps : ptr.ts_mbps;
      const double published_nc = streams == 1 ? pnc.os_mbps : pnc.ts_mbps;
      out.improvements.push_back({streams, hops, (published_nc - published_tr) / published_tr, (nc - tr) / tr});
    }
  }
  for (std::size_t i = 0; i < kPublished.size(); ++i) {
    const auto& e = kPublished[i];
    const double os = optimum_row(rows, 1, e.mode, e.hops).capacity_bps;
    const double ts = optimum_row(rows, 2, e.mode, e.hops).capacity_bps;
    out.stream_deltas.push_back(
        {e.hops, e.mode, kPrintedStreamDelta[i], (e.os_mbps - e.ts_mbps) / e.ts_mbps, (os - ts) / ts});
  }
  return out;
}

int PublishedComparison::total_z_groups() const {
  std::set<std::pair<int, int>> groups;
  for (const auto& c : cells) groups.insert({static_cast<int>(c.mode), c.hops});
  return static_cast<int>(groups.size());
}

int PublishedComparison::matched_z_groups() const {
  std::set<std::pair<int, int>> groups;
  std::set<std::pair<int, int>> failed;
  for (const auto& c : cells) {
    const std::pair<int, int> key{static_cast<int>(c.mode), c.hops};
    groups.insert(key);
    if (c.verifiable && c.published_z != c.computed_z) failed.insert(key);
  }
  return static_cast<int>(groups.size() - failed.size());
}

double PublishedComparison::max_abs_relative_delta() const {
  double worst = 0.0;
  for (const auto& c : cells) worst = std::max(worst, std::abs(c.relative_delta));
  return worst;
}

std::string format_published(const PublishedComparison& cmp) {
  std::string out;
  out += "Optimum period and data rate at optimum (Mbit/s)\n";
  out += fmt::format("{:>7} {:>4} {:>4}  {:>7} {:>7}  {:>9} {:>9} {:>8}\n", "streams", "hops", "mode", "Z published",
                     "Z ours", "C published", "C ours", "delta");
  for (const auto& c : cmp.cells) {
    out += fmt::format("{:>7} {:>4} {:>4}  {:>7} {:>7}  {:>9.3f} {:>9.3f} {:>+7.1f}%{}\n", c.streams, c.hops,
                       to_string(c.mode), c.published_z, c.computed_z, c.published_mbps, c.computed_mbps,
                       100.0 * c.relative_delta, c.verifiable ? "" : "  (unverifiable)");
  }
  out += "\nNC improvement over TR, (C_NC - C_TR) / C_TR\n";
  out += fmt::format("{:>7} {:>4}  {:>8} {:>8}\n", "streams", "hops", "published", "ours");
  for (const auto& i : cmp.improvements) {
    out += fmt::format("{:>7} {:>4}  {:>7.1f}% {:>7.1f}%\n", i.streams, i.hops, 100.0 * i.published, 100.0 * i.computed);
  }
  out += "\nOne stream vs two streams, (C_OS - C_TS) / C_TS\n";
  out += fmt::format("{:>4} {:>4}  {:>8} {:>10} {:>8}\n", "hops", "mode", "printed", "recomputed", "ours");
  for (const auto& d : cmp.stream_deltas) {
    out += fmt::format("{:>4} {:>4}  {:>7.1f}% {:>9.1f}% {:>7.1f}%\n", d.hops, to_string(d.mode),
                       100.0 * d.published_printed, 100.0 * d.published_recomputed, 100.0 * d.computed);
  }
  out += fmt::format("\noptimum Z matches: {}/{} groups; worst |delta| {:.1f}%\n", cmp.matched_z_groups(),
                     cmp.total_z_groups(), 100.0 * cmp.max_abs_relative_delta());
  return out;
}

}  // namespace imwn
