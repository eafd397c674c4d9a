#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "tvg/static_graph.hpp"

namespace tvg {

// Functions returning std::optional use nullopt as the "undefined" marker, e.g.
// density of a graph with fewer than two nodes. Undefined is never reported as 0.

inline std::optional<double> density(const StaticGraph& g) {
  const auto v = static_cast<double>(g.node_count());
  if (g.node_count() < 2) return std::nullopt;
  return 2.0 * static_cast<double>(g.edge_count()) / (v * (v - 1.0));
}

inline std::optional<double> average_degree(const StaticGraph& g) {
  if (g.node_count() == 0) return std::nullopt;
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

inline std::optional<double> edge_node_ratio(const StaticGraph& g) {
  if (g.node_count() == 0) return std::nullopt;
  return static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

struct Clustering {
  std::vector<double> per_node;  // by node index
  std::optional<double> average;
};

/// Local clustering; nodes of degree < 2 score 0 and still count in the average.
inline Clustering clustering(const StaticGraph& g) {
  Clustering out;
  out.per_node.assign(g.node_count(), 0.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    auto nb = g.neighbors(i);
    const std::size_t k = nb.size();
    if (k < 2) continue;
    std::size_t links = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (g.has_edge(nb[a], nb[b])) ++links;
    out.per_node[i] = 2.0 * static_cast<double>(links) / static_cast<double>(k * (k - 1));
    sum += out.per_node[i];
  }
  if (g.node_count() > 0) out.average = sum / static_cast<double>(g.node_count());
  return out;
}

/// Hop distances from `source`; -1 for unreachable nodes.
inline std::vector<std::int64_t> bfs_distances(const StaticGraph& g, std::size_t source) {
  std::vector<std::int64_t> dist(g.node_count(), -1);
  std::queue<std::size_t> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto v : g.neighbors(u)) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      q.push(v);
    }
  }
  return dist;
}

struct PathMetrics {
  std::optional<double> average_length;
  std::optional<std::int64_t> diameter;
};

/// Unweighted shortest paths averaged over ordered reachable pairs (u != v).
/// Unreachable pairs are excluded.
inline PathMetrics path_metrics(const StaticGraph& g) {
  std::int64_t total = 0;
  std::int64_t pairs = 0;
  std::int64_t longest = 0;
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    for (auto d : bfs_distances(g, s)) {
      if (d <= 0) continue;
      total += d;
      ++pairs;
      longest = std::max(longest, d);
    }
  }
  if (pairs == 0) return {};
  return {static_cast<double>(total) / static_cast<double>(pairs), longest};
}

using DegreeHistogram = std::map<std::int64_t, std::int64_t>;

/// Degree -> node count, for degrees >= 1.
inline DegreeHistogram degree_histogram(const StaticGraph& g) {
  DegreeHistogram h;
  for (std::size_t i = 0; i < g.node_count(); ++i)
    if (g.degree(i) > 0) ++h[static_cast<std::int64_t>(g.degree(i))];
  return h;
}

/// Least-squares slope of log10(count) against log10(degree).
inline std::optional<double> power_law_slope(const DegreeHistogram& histogram) {
  std::vector<double> xs, ys;
  for (auto [degree, count] : histogram) {
    if (degree < 1 || count < 1)
      throw Error(ErrorKind::invalid_argument, "histogram needs degree >= 1 and count >= 1");
    xs.push_back(std::log10(static_cast<double>(degree)));
    ys.push_back(std::log10(static_cast<double>(count)));
  }
  if (xs.size() < 2) return std::nullopt;
  const auto n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

struct Components {
  std::size_t count = 0;
  std::vector<NodeId> labels;  // by node index: smallest node id in the component
  std::vector<std::size_t> component_of;  // by node index: dense id, ordered by label
};

inline Components connected_components(const StaticGraph& g) {
  Components out;
  out.labels.resize(g.node_count());
  out.component_of.assign(g.node_count(), g.node_count());
  // Index order is id order, so the first unvisited node is its component's minimum.
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    if (out.component_of[s] != g.node_count()) continue;
    const std::size_t c = out.count++;
    std::queue<std::size_t> q;
    out.component_of[s] = c;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      out.labels[u] = g.name(s);
      for (auto v : g.neighbors(u)) {
        if (out.component_of[v] != g.node_count()) continue;
        out.component_of[v] = c;
        q.push(v);
      }
    }
  }
  return out;
}

/// Cyclomatic number and the alpha/beta/gamma connectivity indices.
///   cyclomatic = E - V + P
///   beta       = E / V
///   gamma      = 100 * E / (3 (V - 2))             (percent, planar edge bound)
///   alpha      = cyclomatic / (V (V - 1) / 2 - (V - 1))
/// alpha and gamma need V >= 3.
struct StructuralIndices {
  std::int64_t cyclomatic = 0;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> gamma;

  friend bool operator==(const StructuralIndices&, const StructuralIndices&) = default;
};

inline StructuralIndices structural_indices(std::int64_t vertices, std::int64_t edges,
                                            std::int64_t components) {
  if (vertices < 0 || edges < 0 || components < 0 || components > vertices)
    throw Error(ErrorKind::invalid_argument, "inconsistent graph counts");
  StructuralIndices out;
  out.cyclomatic = edges - vertices + components;
  const auto v = static_cast<double>(vertices);
  const auto e = static_cast<double>(edges);
  if (vertices >= 1) out.beta = e / v;
  if (vertices >= 3) {
    out.gamma = 100.0 * e / (3.0 * (v - 2.0));
    out.alpha = static_cast<double>(out.cyclomatic) / (v * (v - 1.0) / 2.0 - (v - 1.0));
  }
  return out;
}

inline StructuralIndices structural_indices(const StaticGraph& g) {
  return structural_indices(static_cast<std::int64_t>(g.node_count()),
                            static_cast<std::int64_t>(g.edge_count()),
                            static_cast<std::int64_t>(connected_components(g).count));
}

}  // namespace tvg
