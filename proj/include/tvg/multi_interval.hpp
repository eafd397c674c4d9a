#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "tvg/time.hpp"

namespace tvg {

/// Union of half-open intervals, kept sorted, disjoint and non-adjacent.
class MultiInterval {
 public:
  MultiInterval() = default;
  explicit MultiInterval(std::span<const Interval> intervals) {
    for (const auto& iv : intervals) add(iv);
  }

  void add(Interval iv) {
    auto first = std::lower_bound(parts_.begin(), parts_.end(), iv.start,
                                  [](const Interval& p, TimeInstant t) { return p.end < t; });
    auto last = first;
    while (last != parts_.end() && last->start <= iv.end) {
      iv.start = std::min(iv.start, last->start);
      iv.end = std::max(iv.end, last->end);
      ++last;
    }
    auto pos = parts_.erase(first, last);
    parts_.insert(pos, iv);
  }

  bool contains(TimeInstant t) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), t,
                               [](TimeInstant x, const Interval& p) { return x < p.end; });
    return it != parts_.end() && it->start <= t;
  }

  bool intersects(const Interval& window) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), window.start,
                               [](TimeInstant x, const Interval& p) { return x < p.end; });
    return it != parts_.end() && it->start < window.end;
  }

  MultiInterval restricted_to(const Interval& window) const {
    MultiInterval out;
    for (const auto& p : parts_) {
      if (!p.overlaps(window)) continue;
      out.parts_.emplace_back(std::max(p.start, window.start), std::min(p.end, window.end));
    }
    return out;
  }

  /// Earliest available instant that is not before `t`.
  std::optional<TimeInstant> earliest_from(TimeInstant t) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), t,
                               [](TimeInstant x, const Interval& p) { return x < p.end; });
    if (it == parts_.end()) return std::nullopt;
    return std::max(t, it->start);
  }

  std::optional<TimeInstant> first_instant() const {
    if (parts_.empty()) return std::nullopt;
    return parts_.front().start;
  }

  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  const std::vector<Interval>& intervals() const { return parts_; }

  friend bool operator==(const MultiInterval&, const MultiInterval&) = default;

 private:
  std::vector<Interval> parts_;
};

}  // namespace tvg
