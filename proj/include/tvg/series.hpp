#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "tvg/community.hpp"
#include "tvg/metrics.hpp"
#include "tvg/snapshot.hpp"

namespace tvg {

/// Indicator vector of one snapshot. nullopt marks an undefined value.
struct MetricRow {
  Interval window{0, 1};
  std::int64_t nodes = 0;
  std::int64_t edges = 0;
  std::int64_t components = 0;
  std::optional<double> density;
  std::optional<double> avg_degree;
  std::optional<double> avg_clustering;
  std::optional<double> avg_path_length;
  std::optional<std::int64_t> diameter;
  std::optional<double> power_law_slope;
  std::optional<double> modularity;
  std::optional<double> edge_node_ratio;

  friend bool operator==(const MetricRow&, const MetricRow&) = default;
};

inline MetricRow compute_metric_row(const Snapshot& snap, ModularityOptions opt = {}) {
  const auto& g = snap.graph;
  MetricRow row;
  row.window = snap.window;
  row.nodes = static_cast<std::int64_t>(g.node_count());
  row.edges = static_cast<std::int64_t>(g.edge_count());
  row.components = static_cast<std::int64_t>(connected_components(g).count);
  row.density = density(g);
  row.avg_degree = average_degree(g);
  row.avg_clustering = clustering(g).average;
  auto paths = path_metrics(g);
  row.avg_path_length = paths.average_length;
  row.diameter = paths.diameter;
  row.power_law_slope = power_law_slope(degree_histogram(g));
  if (g.node_count() > 0) row.modularity = louvain(g, opt).score;
  row.edge_node_ratio = edge_node_ratio(g);
  return row;
}

namespace detail {

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

struct SeriesOptions {
  FixedStep snapshots{365, true};
  ModularityOptions modularity;
  unsigned threads = 1;
};

/// Indicators of every fixed-step snapshot, in window order. Windows are
/// evaluated independently, so `threads` does not affect the result.
inline std::vector<MetricRow> metric_series(const TimeVaryingGraph& g, const SeriesOptions& opt = {}) {
  const auto windows = snapshot_windows(g, opt.snapshots);
  std::vector<MetricRow> rows(windows.size());
  detail::parallel_for(windows.size(), opt.threads, [&](std::size_t i) {
    rows[i] = compute_metric_row(Snapshot{windows[i], underlying_graph(g, windows[i])}, opt.modularity);
  });
  return rows;
}

}  // namespace tvg
