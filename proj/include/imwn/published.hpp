#pragma once

#include <span>
#include <string>
#include <vector>

#include "imwn/harness.hpp"

namespace imwn {

// Published optimum periods and data rates (Mbit/s) for routes of 2..5 hops,
// one stream (OS) and two streams (TS).
struct PublishedEntry {
  int hops;
  Mode mode;
  int os_z;
  int ts_z;
  double os_mbps;
  double ts_mbps;
};

std::span<const PublishedEntry> published_reference();

struct PublishedCell {
  int streams = 1;
  int hops = 2;
  Mode mode = Mode::TR;
  int published_z = 0;
  int computed_z = 0;
  double published_mbps = 0.0;
  double computed_mbps = 0.0;
  double relative_delta = 0.0;  // (computed - published) / published
  // False for the two-stream TR optimum at 2 hops, which is inconsistent
  // with the rest of the source table.
  bool verifiable = true;
};

// (C_NC - C_TR) / C_TR at each side's optimum.
struct PublishedImprovement {
  int streams = 1;
  int hops = 2;
  double published = 0.0;
  double computed = 0.0;
};

// (C_OS - C_TS) / C_TS. The published column matches (C_TS - C_OS) / C_OS
// instead, so both are reported.
struct PublishedStreamDelta {
  int hops = 2;
  Mode mode = Mode::TR;
  double published_printed = 0.0;
  double published_recomputed = 0.0;
  double computed = 0.0;
};

struct PublishedComparison {
  std::vector<PublishedCell> cells;
  std::vector<PublishedImprovement> improvements;
  std::vector<PublishedStreamDelta> stream_deltas;

  // (mode, hops) groups whose optimum Z matches for every verifiable stream count.
  int matched_z_groups() const;
  int total_z_groups() const;
  double max_abs_relative_delta() const;
};

// Rows must cover streams {1,2} x modes {TR,NC} x hops {2..5}.
PublishedComparison compare_published(std::span<const ResultRow> rows);

std::string format_published(const PublishedComparison& comparison);

}  // namespace imwn
