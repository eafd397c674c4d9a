#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tvg/error.hpp"

namespace tvg {

using NodeId = std::string;

struct EdgeSpec {
  NodeId u;
  NodeId v;
  std::int64_t weight = 1;
};

/// Undirected edge by node index, u < v.
struct IndexedEdge {
  std::size_t u;
  std::size_t v;
  std::int64_t weight;

  friend bool operator==(const IndexedEdge&, const IndexedEdge&) = default;
};

/// Immutable simple undirected graph. Nodes are indexed in ascending id order,
/// so index order and id order agree everywhere downstream.
class StaticGraph {
 public:
  StaticGraph() = default;

  StaticGraph(std::vector<NodeId> nodes, const std::vector<EdgeSpec>& edges) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    names_ = std::move(nodes);
    adjacency_.assign(names_.size(), {});
    edges_.reserve(edges.size());
    for (const auto& e : edges) {
      auto a = index_of(e.u);
      auto b = index_of(e.v);
      if (!a || !b)
        throw Error(ErrorKind::not_found, "edge endpoint not in node set: " + e.u + "-" + e.v);
      if (*a == *b) throw Error(ErrorKind::invalid_argument, "self-loop on " + e.u);
      if (e.weight < 0) throw Error(ErrorKind::invalid_argument, "negative edge weight");
      edges_.push_back({std::min(*a, *b), std::max(*a, *b), e.weight});
    }
    finish();
  }

  /// Nodes named by zero-padded index, so that name order equals index order.
  static StaticGraph from_indices(std::size_t n,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<IndexedEdge> weighted;
    weighted.reserve(edges.size());
    for (auto [u, v] : edges) weighted.push_back({u, v, 1});
    return from_weighted_indices(n, std::move(weighted));
  }

  static StaticGraph from_weighted_indices(std::size_t n, std::vector<IndexedEdge> edges) {
    StaticGraph g;
    g.names_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) g.names_.push_back(padded_name(i, n));
    g.adjacency_.assign(n, {});
    for (auto& e : edges) {
      if (e.u >= n || e.v >= n) throw Error(ErrorKind::not_found, "edge index out of range");
      if (e.u == e.v) throw Error(ErrorKind::invalid_argument, "self-loop");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    g.edges_ = std::move(edges);
    g.finish();
    return g;
  }

  std::size_t node_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const NodeId& name(std::size_t i) const { return names_[i]; }
  const std::vector<NodeId>& names() const { return names_; }

  std::optional<std::size_t> index_of(const NodeId& id) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), id);
    if (it == names_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  std::span<const std::size_t> neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }

  bool has_edge(std::size_t a, std::size_t b) const {
    const auto& n = adjacency_[a];
    return std::binary_search(n.begin(), n.end(), b);
  }

  /// Sorted by (u, v).
  const std::vector<IndexedEdge>& edges() const { return edges_; }

  std::int64_t total_weight() const {
    std::int64_t sum = 0;
    for (const auto& e : edges_) sum += e.weight;
    return sum;
  }

  /// Subgraph induced by the given node indices (need not be sorted).
  StaticGraph induced(std::span<const std::size_t> keep) const {
    std::vector<char> member(names_.size(), 0);
    for (auto i : keep) member.at(i) = 1;
    std::vector<NodeId> nodes;
    std::vector<EdgeSpec> specs;
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (member[i]) nodes.push_back(names_[i]);
    for (const auto& e : edges_)
      if (member[e.u] && member[e.v]) specs.push_back({names_[e.u], names_[e.v], e.weight});
    return StaticGraph(std::move(nodes), specs);
  }

  friend bool operator==(const StaticGraph& a, const StaticGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  static NodeId padded_name(std::size_t i, std::size_t n) {
    std::size_t width = 1;
    for (std::size_t m = n > 0 ? n - 1 : 0; m >= 10; m /= 10) ++width;
    std::string s = std::to_string(i);
    return std::string(width - s.size(), '0') + s;
  }

  void finish() {
    std::sort(edges_.begin(), edges_.end(), [](const IndexedEdge& a, const IndexedEdge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
        throw Error(ErrorKind::invalid_argument,
                    "duplicate edge " + names_[edges_[i].u] + "-" + names_[edges_[i].v]);
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& n : adjacency_) std::sort(n.begin(), n.end());
  }

  std::vector<NodeId> names_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<IndexedEdge> edges_;
};

}  // namespace tvg
