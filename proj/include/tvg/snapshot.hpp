#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "tvg/tvg.hpp"

namespace tvg {

/// Consecutive windows of `step` days from the lifetime start; the last may be short.
/// Cumulative snapshots cover [lifetime.start, window.end).
struct FixedStep {
  std::int64_t step = 365;
  bool cumulative = true;
};

/// Windows between consecutive characteristic dates, each footprinted on its own.
struct CharacteristicDates {};

using SnapshotMode = std::variant<FixedStep, CharacteristicDates>;

struct Snapshot {
  Interval window;  // interval the footprint covers
  StaticGraph graph;
};

inline std::vector<Interval> snapshot_windows(const TimeVaryingGraph& g, const SnapshotMode& mode) {
  const auto& life = g.lifetime();
  std::vector<Interval> windows;
  if (const auto* fixed = std::get_if<FixedStep>(&mode)) {
    if (fixed->step <= 0) throw Error(ErrorKind::invalid_argument, "snapshot step must be positive");
    for (TimeInstant s = life.start; s < life.end; s = s + fixed->step) {
      TimeInstant e = std::min(s + fixed->step, life.end);
      windows.emplace_back(fixed->cumulative ? life.start : s, e);
    }
  } else {
    auto dates = graph_characteristic_dates(g);
    for (std::size_t i = 1; i < dates.size(); ++i) windows.emplace_back(dates[i - 1], dates[i]);
  }
  return windows;
}

inline std::vector<Snapshot> snapshot_sequence(const TimeVaryingGraph& g, const SnapshotMode& mode) {
  std::vector<Snapshot> out;
  for (const auto& w : snapshot_windows(g, mode)) out.push_back({w, underlying_graph(g, w)});
  return out;
}

}  // namespace tvg
