#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tvg/metrics.hpp"
#include "tvg/snapshot.hpp"
#include "tvg/static_graph.hpp"

namespace tvg {

/// Node -> community assignment. Community ids are dense and ordered by their
/// smallest member, so community c's label is the id of its smallest node.
struct Partition {
  std::vector<std::size_t> membership;  // by node index
  std::optional<double> score;          // modularity of the assignment

  std::size_t community_count() const {
    std::size_t n = 0;
    for (auto c : membership) n = std::max(n, c + 1);
    return n;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Relabels raw community ids so they become dense and ordered by smallest member.
inline std::vector<std::size_t> canonical_membership(const std::vector<std::size_t>& raw) {
  std::map<std::size_t, std::size_t> remap;
  std::vector<std::size_t> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, inserted] = remap.try_emplace(raw[i], remap.size());
    out[i] = it->second;
  }
  return out;
}

/// Id of each community's smallest member, by node index.
inline std::vector<NodeId> community_labels(const StaticGraph& g, const Partition& p) {
  std::vector<std::size_t> first(p.community_count(), g.node_count());
  for (std::size_t i = 0; i < p.membership.size(); ++i)
    first[p.membership[i]] = std::min(first[p.membership[i]], i);
  std::vector<NodeId> labels;
  labels.reserve(g.node_count());
  for (auto c : p.membership) labels.push_back(g.name(first[c]));
  return labels;
}

struct ModularityOptions {
  double resolution = 1.0;
  bool weighted = false;  // false: every edge counts 1 regardless of strength
};

/// Q = (1/2m) sum_ij [A_ij - resolution k_i k_j / 2m] delta(c_i, c_j).
/// Undefined when the graph has no (positive) edge weight.
inline std::optional<double> modularity(const StaticGraph& g,
                                        const std::vector<std::size_t>& membership,
                                        ModularityOptions opt = {}) {
  if (membership.size() != g.node_count())
    throw Error(ErrorKind::invalid_argument, "partition does not cover the graph");
  if (!(opt.resolution > 0)) throw Error(ErrorKind::invalid_argument, "resolution must be > 0");
  std::size_t communities = 0;
  for (auto c : membership) communities = std::max(communities, c + 1);
  std::vector<double> inside(communities, 0.0), degree(communities, 0.0);
  double m = 0.0;
  for (const auto& e : g.edges()) {
    const double w = opt.weighted ? static_cast<double>(e.weight) : 1.0;
    m += w;
    degree[membership[e.u]] += w;
    degree[membership[e.v]] += w;
    if (membership[e.u] == membership[e.v]) inside[membership[e.u]] += w;
  }
  if (m <= 0) return std::nullopt;
  double q = 0.0;
  for (std::size_t c = 0; c < communities; ++c)
    q += inside[c] / m - opt.resolution * (degree[c] / (2 * m)) * (degree[c] / (2 * m));
  return q;
}

inline std::optional<double> modularity(const StaticGraph& g, const Partition& p,
                                        ModularityOptions opt = {}) {
  return modularity(g, p.membership, opt);
}

namespace detail {

inline std::vector<std::size_t> identity_membership(std::size_t n) {
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  return id;
}

/// Weighted graph with self-loops, the working representation of one Louvain level.
struct LevelGraph {
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency;  // sorted, no self
  std::vector<double> self_loops;
  std::vector<double> degree;  // includes twice the self-loop weight
  double total_degree = 0.0;   // 2m

  std::size_t size() const { return adjacency.size(); }
};

/// Collapse the original graph along `membership` (dense ids).
inline LevelGraph aggregate(const StaticGraph& g, const std::vector<std::size_t>& membership,
                            bool weighted) {
  std::size_t n = 0;
  for (auto c : membership) n = std::max(n, c + 1);
  LevelGraph level;
  level.self_loops.assign(n, 0.0);
  level.degree.assign(n, 0.0);
  std::map<std::pair<std::size_t, std::size_t>, double> between;
  for (const auto& e : g.edges()) {
    const double w = weighted ? static_cast<double>(e.weight) : 1.0;
    auto a = membership[e.u];
    auto b = membership[e.v];
    level.degree[a] += w;
    level.degree[b] += w;
    level.total_degree += 2 * w;
    if (a == b)
      level.self_loops[a] += w;
    else
      between[{std::min(a, b), std::max(a, b)}] += w;
  }
  level.adjacency.assign(n, {});
  for (const auto& [key, w] : between) {
    level.adjacency[key.first].emplace_back(key.second, w);
    level.adjacency[key.second].emplace_back(key.first, w);
  }
  for (auto& adj : level.adjacency) std::sort(adj.begin(), adj.end());
  return level;
}

/// One round of local moving until a full sweep moves nothing. Nodes are visited
/// in ascending index order; a node moves only for a strictly better gain, and
/// equally good targets resolve to the smallest community id. Returns whether
/// anything moved.
inline bool local_moving(const LevelGraph& level, std::vector<std::size_t>& community,
                         double resolution) {
  const std::size_t n = level.size();
  if (level.total_degree <= 0) return false;
  std::vector<double> total(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) total[community[i]] += level.degree[i];

  std::vector<double> link(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> touched;
  bool moved_any = false;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t own = community[i];
      const double k = level.degree[i];
      touched.assign(1, own);
      seen[own] = 1;
      for (auto [j, w] : level.adjacency[i]) {
        const auto c = community[j];
        if (!seen[c]) {
          seen[c] = 1;
          touched.push_back(c);
        }
        link[c] += w;
      }
      total[own] -= k;
      auto gain = [&](std::size_t c) {
        return link[c] - resolution * k * total[c] / level.total_degree;
      };
      const double stay = gain(own);
      const double eps = 1e-12 * (1.0 + k);
      std::sort(touched.begin(), touched.end());
      std::size_t best = own;
      double best_gain = stay;
      for (auto c : touched) {
        if (c == own) continue;
        const double g = gain(c);
        // ascending ids: a later candidate must beat the current best outright
        if (g > stay + eps && (best == own || g > best_gain + eps)) {
          best = c;
          best_gain = g;
        }
      }
      total[best] += k;
      if (best != own) {
        community[i] = best;
        moved = true;
        moved_any = true;
      }
      for (auto c : touched) {
        link[c] = 0.0;
        seen[c] = 0;
      }
    }
  }
  return moved_any;
}

/// Plain multi-level Louvain seeded with `membership` as the first aggregation.
inline std::vector<std::size_t> louvain_levels(const StaticGraph& g,
                                               std::vector<std::size_t> membership,
                                               double resolution, bool weighted) {
  for (;;) {
    auto level = aggregate(g, membership, weighted);
    auto community = identity_membership(level.size());
    if (!local_moving(level, community, resolution)) return membership;
    community = canonical_membership(community);
    for (auto& c : membership) c = community[c];
  }
}

}  // namespace detail

/// Deterministic Louvain. After the usual level cycle converges, local moving is
/// re-run on the original nodes; if any node still improves, the refined partition
/// seeds another level cycle. The result therefore admits no improving single-node
/// move on the input graph.
inline Partition louvain(const StaticGraph& g, ModularityOptions opt = {}) {
  if (g.node_count() == 0) throw Error(ErrorKind::invalid_argument, "louvain on empty graph");
  if (!(opt.resolution > 0)) throw Error(ErrorKind::invalid_argument, "resolution must be > 0");
  const auto base = detail::aggregate(g, detail::identity_membership(g.node_count()), opt.weighted);
  auto membership = detail::louvain_levels(g, detail::identity_membership(g.node_count()),
                                           opt.resolution, opt.weighted);
  for (;;) {
    auto refined = membership;
    if (!detail::local_moving(base, refined, opt.resolution)) break;
    membership = detail::louvain_levels(g, canonical_membership(refined), opt.resolution,
                                        opt.weighted);
  }
  Partition p{canonical_membership(membership), std::nullopt};
  p.score = modularity(g, p, opt);
  return p;
}

/// True iff no single node can move to another community with a strictly
/// positive modularity gain.
inline bool is_locally_optimal(const StaticGraph& g, const Partition& p,
                               ModularityOptions opt = {}) {
  auto base = detail::aggregate(g, detail::identity_membership(g.node_count()), opt.weighted);
  auto copy = p.membership;
  return !detail::local_moving(base, copy, opt.resolution);
}

/// Members (node indices, ascending) of the largest community; ties go to the
/// community with the smallest id.
inline std::vector<std::size_t> largest_community(const StaticGraph& g, const Partition& p) {
  if (p.membership.size() != g.node_count())
    throw Error(ErrorKind::invalid_argument, "partition does not cover the graph");
  std::vector<std::size_t> sizes(p.community_count(), 0);
  for (auto c : p.membership) ++sizes[c];
  std::vector<std::size_t> members;
  if (sizes.empty()) return members;
  const auto best = static_cast<std::size_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  for (std::size_t i = 0; i < p.membership.size(); ++i)
    if (p.membership[i] == best) members.push_back(i);
  return members;
}

struct CommunityTrackRow {
  Interval window;
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::optional<std::int64_t> diameter;
  StructuralIndices indices;

  friend bool operator==(const CommunityTrackRow&, const CommunityTrackRow&) = default;
};

enum class TrackingMode {
  redetect,  // follow the maximal-overlap community of each window's partition
  frozen,    // re-measure the anchor community's node set in every window
};

struct TrackOptions {
  FixedStep snapshots{182, true};
  std::size_t anchor = 0;
  ModularityOptions modularity;
  TrackingMode mode = TrackingMode::redetect;
};

inline CommunityTrackRow measure_community(const Interval& window, const StaticGraph& g,
                                           const std::set<NodeId>& members) {
  std::vector<std::size_t> keep;
  for (const auto& id : members)
    if (auto i = g.index_of(id)) keep.push_back(*i);
  auto sub = g.induced(keep);
  CommunityTrackRow row{window, 0, 0, std::nullopt, {}};
  row.vertices = static_cast<std::int64_t>(sub.node_count());
  row.edges = static_cast<std::int64_t>(sub.edge_count());
  row.diameter = path_metrics(sub).diameter;
  row.indices = structural_indices(sub);
  return row;
}

/// Successor of `previous` in partition `p`: maximal node overlap, then larger
/// Jaccard index, then smaller community id. Empty when nothing overlaps.
inline std::set<NodeId> successor_community(const StaticGraph& g, const Partition& p,
                                            const std::set<NodeId>& previous) {
  const std::size_t k = p.community_count();
  std::vector<std::size_t> overlap(k, 0), size(k, 0);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    ++size[p.membership[i]];
    if (previous.count(g.name(i))) ++overlap[p.membership[i]];
  }
  std::optional<std::size_t> best;
  auto jaccard = [&](std::size_t c) {
    return static_cast<double>(overlap[c]) /
           static_cast<double>(size[c] + previous.size() - overlap[c]);
  };
  for (std::size_t c = 0; c < k; ++c) {
    if (overlap[c] == 0) continue;
    if (!best || overlap[c] > overlap[*best] ||
        (overlap[c] == overlap[*best] && jaccard(c) > jaccard(*best)))
      best = c;
  }
  std::set<NodeId> out;
  if (!best) return out;
  for (std::size_t i = 0; i < g.node_count(); ++i)
    if (p.membership[i] == *best) out.insert(g.name(i));
  return out;
}

/// Follows the largest community of the anchor window through every later
/// snapshot and measures its induced subgraph in each.
inline std::vector<CommunityTrackRow> track_largest_community(const TimeVaryingGraph& tvg,
                                                              const TrackOptions& opt = {}) {
  auto snapshots = snapshot_sequence(tvg, opt.snapshots);
  if (opt.anchor >= snapshots.size())
    throw Error(ErrorKind::invalid_argument,
                "anchor window " + std::to_string(opt.anchor) + " out of range (" +
                    std::to_string(snapshots.size()) + " windows)");
  const auto& anchor = snapshots[opt.anchor];
  if (anchor.graph.edge_count() == 0)
    throw Error(ErrorKind::invalid_argument,
                "anchor window " + to_string(anchor.window) + " has no edges to detect communities in");

  std::set<NodeId> tracked;
  {
    auto p = louvain(anchor.graph, opt.modularity);
    for (auto i : largest_community(anchor.graph, p)) tracked.insert(anchor.graph.name(i));
  }
  std::vector<CommunityTrackRow> rows;
  rows.push_back(measure_community(anchor.window, anchor.graph, tracked));
  for (std::size_t w = opt.anchor + 1; w < snapshots.size(); ++w) {
    const auto& snap = snapshots[w];
    if (opt.mode == TrackingMode::redetect && !tracked.empty() && snap.graph.node_count() > 0)
      tracked = successor_community(snap.graph, louvain(snap.graph, opt.modularity), tracked);
    rows.push_back(measure_community(snap.window, snap.graph, tracked));
  }
  return rows;
}

}  // namespace tvg
