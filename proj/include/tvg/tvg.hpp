#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tvg/error.hpp"
#include "tvg/multi_interval.hpp"
#include "tvg/static_graph.hpp"
#include "tvg/time.hpp"

namespace tvg {

struct WeightEvent {
  TimeInstant time;
  std::int64_t delta;

  friend bool operator==(const WeightEvent&, const WeightEvent&) = default;
};

/// Availability of one edge plus its strength step function. Events at the same
/// instant are stored merged.
struct EdgeRecord {
  MultiInterval availability;
  std::vector<WeightEvent> weight_events;

  /// Cumulative weight including events at `t`.
  std::int64_t weight_at(TimeInstant t) const { return weight_before(t + 1); }

  /// Cumulative weight over events strictly before `t`.
  std::int64_t weight_before(TimeInstant t) const {
    std::int64_t w = 0;
    for (const auto& ev : weight_events) {
      if (!(ev.time < t)) break;
      w += ev.delta;
    }
    return w;
  }

  std::int64_t final_weight() const {
    std::int64_t w = 0;
    for (const auto& ev : weight_events) w += ev.delta;
    return w;
  }

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Unordered node pair, stored with first < second.
struct NodePair {
  NodeId first;
  NodeId second;

  NodePair(NodeId a, NodeId b) {
    if (b < a) std::swap(a, b);
    first = std::move(a);
    second = std::move(b);
  }

  friend auto operator<=>(const NodePair&, const NodePair&) = default;
  friend bool operator==(const NodePair&, const NodePair&) = default;
};

/// Time-varying graph with zero latency: presence of an edge at t is membership of t
/// in the edge's availability. Nodes never disappear once they appear.
class TimeVaryingGraph {
 public:
  explicit TimeVaryingGraph(Interval lifetime) : lifetime_(lifetime) {}

  const Interval& lifetime() const { return lifetime_; }

  void record_node(const NodeId& id, TimeInstant appearance) {
    if (!lifetime_.contains(appearance))
      throw Error(ErrorKind::out_of_lifetime, "node " + id + " appearance " +
                                                  std::to_string(appearance.value) +
                                                  " outside lifetime " + to_string(lifetime_));
    auto [it, inserted] = nodes_.try_emplace(id, appearance);
    if (!inserted) it->second = std::min(it->second, appearance);
  }

  void record_edge_presence(const NodeId& u, const NodeId& v, Interval iv) {
    if (u == v) throw Error(ErrorKind::invalid_argument, "self-loop on " + u);
    auto au = appearance(u);
    auto av = appearance(v);
    if (!au) throw Error(ErrorKind::not_found, "unknown node " + u);
    if (!av) throw Error(ErrorKind::not_found, "unknown node " + v);
    if (!lifetime_.contains(iv))
      throw Error(ErrorKind::out_of_lifetime,
                  "interval " + to_string(iv) + " outside lifetime " + to_string(lifetime_));
    if (iv.start < std::max(*au, *av))
      throw Error(ErrorKind::invalid_argument,
                  "edge " + u + "-" + v + " available before an endpoint appears");
    edges_[NodePair(u, v)].availability.add(iv);
  }

  void add_weight_event(const NodeId& u, const NodeId& v, TimeInstant t, std::int64_t delta) {
    if (delta <= 0) throw Error(ErrorKind::invalid_argument, "weight delta must be positive");
    if (!(t < lifetime_.end) || t.value < 0)
      throw Error(ErrorKind::out_of_lifetime,
                  "weight event at " + std::to_string(t.value) + " past lifetime end");
    auto it = edges_.find(NodePair(u, v));
    if (it == edges_.end()) throw Error(ErrorKind::not_found, "no edge " + u + "-" + v);
    auto& events = it->second.weight_events;
    auto pos = std::lower_bound(events.begin(), events.end(), t,
                                [](const WeightEvent& e, TimeInstant x) { return e.time < x; });
    if (pos != events.end() && pos->time == t)
      pos->delta += delta;
    else
      events.insert(pos, WeightEvent{t, delta});
  }

  bool presence(const NodeId& u, const NodeId& v, TimeInstant t) const {
    const auto* e = find_edge(u, v);
    return e != nullptr && e->availability.contains(t);
  }

  std::optional<TimeInstant> appearance(const NodeId& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) return std::nullopt;
    return it->second;
  }
  bool has_node(const NodeId& id) const { return nodes_.count(id) != 0; }

  const EdgeRecord* find_edge(const NodeId& u, const NodeId& v) const {
    if (u == v) return nullptr;
    auto it = edges_.find(NodePair(u, v));
    return it == edges_.end() ? nullptr : &it->second;
  }

  const std::map<NodeId, TimeInstant>& nodes() const { return nodes_; }
  const std::map<NodePair, EdgeRecord>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  friend bool operator==(const TimeVaryingGraph&, const TimeVaryingGraph&) = default;

 private:
  friend TimeVaryingGraph temporal_subgraph(const TimeVaryingGraph&, const Interval&);

  Interval lifetime_;
  std::map<NodeId, TimeInstant> nodes_;
  std::map<NodePair, EdgeRecord> edges_;
};

struct EdgeDates {
  std::vector<TimeInstant> appearances;
  std::vector<TimeInstant> disappearances;
  std::vector<TimeInstant> characteristic;
};

inline EdgeDates edge_dates(const TimeVaryingGraph& g, const NodeId& u, const NodeId& v) {
  const auto* e = g.find_edge(u, v);
  if (e == nullptr) throw Error(ErrorKind::not_found, "no edge " + u + "-" + v);
  EdgeDates out;
  for (const auto& iv : e->availability.intervals()) {
    out.appearances.push_back(iv.start);
    out.disappearances.push_back(iv.end);
    out.characteristic.push_back(iv.start);
    out.characteristic.push_back(iv.end);
  }
  return out;
}

/// Sorted, deduplicated union of every edge's characteristic dates.
inline std::vector<TimeInstant> graph_characteristic_dates(const TimeVaryingGraph& g) {
  std::set<TimeInstant> dates;
  for (const auto& [pair, rec] : g.edges())
    for (const auto& iv : rec.availability.intervals()) {
      dates.insert(iv.start);
      dates.insert(iv.end);
    }
  return {dates.begin(), dates.end()};
}

/// Footprint over `window`: an edge is kept if it is available at some instant of
/// the window, weighted by its cumulative strength before the window end. Every node
/// that has appeared before the window end is kept, isolated or not.
inline StaticGraph underlying_graph(const TimeVaryingGraph& g, const Interval& window) {
  if (!g.lifetime().contains(window))
    throw Error(ErrorKind::out_of_lifetime,
                "window " + to_string(window) + " outside lifetime " + to_string(g.lifetime()));
  std::vector<NodeId> nodes;
  for (const auto& [id, appear] : g.nodes())
    if (appear < window.end) nodes.push_back(id);
  std::vector<EdgeSpec> edges;
  for (const auto& [pair, rec] : g.edges())
    if (rec.availability.intersects(window))
      edges.push_back({pair.first, pair.second, rec.weight_before(window.end)});
  return StaticGraph(std::move(nodes), edges);
}

inline StaticGraph underlying_graph(const TimeVaryingGraph& g) {
  return underlying_graph(g, g.lifetime());
}

/// Restriction of the lifetime to `window`. Surviving nodes have their appearance
/// clamped to the window start; weight events at or after the window end are dropped.
inline TimeVaryingGraph temporal_subgraph(const TimeVaryingGraph& g, const Interval& window) {
  if (!g.lifetime().contains(window))
    throw Error(ErrorKind::out_of_lifetime,
                "window " + to_string(window) + " outside lifetime " + to_string(g.lifetime()));
  TimeVaryingGraph out(window);
  for (const auto& [id, appear] : g.nodes())
    if (appear < window.end) out.nodes_.emplace(id, std::max(appear, window.start));
  for (const auto& [pair, rec] : g.edges()) {
    auto restricted = rec.availability.restricted_to(window);
    if (restricted.empty()) continue;
    EdgeRecord r;
    r.availability = std::move(restricted);
    for (const auto& ev : rec.weight_events)
      if (ev.time < window.end) r.weight_events.push_back(ev);
    out.edges_.emplace(pair, std::move(r));
  }
  return out;
}

}  // namespace tvg
