#pragma once

#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "tvg/tvg.hpp"

namespace tvg {

/// Earliest arrival instant at every node reachable from `src` by a journey that
/// starts no earlier than `start`. Crossing an edge takes no time and waiting at a
/// node is unbounded, so arrival at a neighbour is the first instant the edge is
/// available after arrival at the current node.
inline std::map<NodeId, TimeInstant> earliest_arrivals(const TimeVaryingGraph& g,
                                                       const NodeId& src, TimeInstant start) {
  if (!g.has_node(src)) throw Error(ErrorKind::not_found, "unknown node " + src);

  std::map<NodeId, std::vector<std::pair<NodeId, const EdgeRecord*>>> incident;
  for (const auto& [pair, rec] : g.edges()) {
    incident[pair.first].emplace_back(pair.second, &rec);
    incident[pair.second].emplace_back(pair.first, &rec);
  }

  std::map<NodeId, TimeInstant> arrival{{src, start}};
  using Item = std::pair<TimeInstant, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
  frontier.emplace(start, src);
  while (!frontier.empty()) {
    auto [t, u] = frontier.top();
    frontier.pop();
    if (arrival.at(u) < t) continue;
    auto it = incident.find(u);
    if (it == incident.end()) continue;
    for (const auto& [v, rec] : it->second) {
      auto cross = rec->availability.earliest_from(t);
      if (!cross) continue;
      auto known = arrival.find(v);
      if (known == arrival.end() || *cross < known->second) {
        arrival[v] = *cross;
        frontier.emplace(*cross, v);
      }
    }
  }
  return arrival;
}

inline bool journey_exists(const TimeVaryingGraph& g, const NodeId& src, const NodeId& dst,
                           TimeInstant start) {
  if (!g.has_node(dst)) throw Error(ErrorKind::not_found, "unknown node " + dst);
  if (src == dst) {
    if (!g.has_node(src)) throw Error(ErrorKind::not_found, "unknown node " + src);
    return true;
  }
  return earliest_arrivals(g, src, start).count(dst) != 0;
}

}  // namespace tvg
