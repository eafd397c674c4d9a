#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tvg/error.hpp"
#include "tvg/text.hpp"
#include "tvg/tvg.hpp"

// Serialized TVG, version 1. Tab-separated, one record per line, LF endings:
//
//   TVG      1
//   lifetime <start> <end>
//   node     <id> <appearance>                       (ascending id)
//   edge     <u> <v> <s>-<e>[,<s>-<e>...] [<t>:<d>[,<t>:<d>...]]
//                                                    (ascending (u, v), u < v)
//   end      <node count> <edge count>
//
// Times are day numbers. The weight field is empty when an edge has no events.
// Ids are percent-escaped for '%', TAB, LF and CR. Writing a parsed file
// reproduces it byte for byte.

namespace tvg {

inline constexpr int kTvgFormatVersion = 1;

namespace detail {

inline std::string escape_id(std::string_view id) {
  std::string out;
  out.reserve(id.size());
  for (char c : id) {
    switch (c) {
      case '%': out += "%25"; break;
      case '\t': out += "%09"; break;
      case '\n': out += "%0A"; break;
      case '\r': out += "%0D"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::optional<std::string> unescape_id(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '%') {
      out += text[i];
      continue;
    }
    if (i + 2 >= text.size()) return std::nullopt;
    auto code = text.substr(i + 1, 2);
    if (code == "25") out += '%';
    else if (code == "09") out += '\t';
    else if (code == "0A") out += '\n';
    else if (code == "0D") out += '\r';
    else return std::nullopt;
    i += 2;
  }
  return out;
}

inline bool parse_int(std::string_view text, std::int64_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace detail

inline void write_tvg(std::ostream& out, const TimeVaryingGraph& g) {
  out << "TVG\t" << kTvgFormatVersion << '\n';
  out << "lifetime\t" << g.lifetime().start.value << '\t' << g.lifetime().end.value << '\n';
  for (const auto& [id, appear] : g.nodes())
    out << "node\t" << detail::escape_id(id) << '\t' << appear.value << '\n';
  for (const auto& [pair, rec] : g.edges()) {
    out << "edge\t" << detail::escape_id(pair.first) << '\t' << detail::escape_id(pair.second)
        << '\t';
    const char* sep = "";
    for (const auto& iv : rec.availability.intervals()) {
      out << sep << iv.start.value << '-' << iv.end.value;
      sep = ",";
    }
    out << '\t';
    sep = "";
    for (const auto& ev : rec.weight_events) {
      out << sep << ev.time.value << ':' << ev.delta;
      sep = ",";
    }
    out << '\n';
  }
  out << "end\t" << g.node_count() << '\t' << g.edge_count() << '\n';
}

inline std::string to_tvg_text(const TimeVaryingGraph& g) {
  std::ostringstream out;
  write_tvg(out, g);
  return out.str();
}

/// Strict reader for `write_tvg` output. Any deviation raises ParseError naming
/// the line; graph invariants are re-checked while rebuilding.
inline TimeVaryingGraph read_tvg(std::istream& in, const std::string& source = {}) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&](std::string_view what) {
    if (!std::getline(in, line))
      throw ParseError(source, line_no, "truncated TVG file: expected " + std::string(what));
    ++line_no;
    return detail::split(line, '\t');
  };
  auto fail = [&](const std::string& msg) -> void { throw ParseError(source, line_no, msg); };

  auto header = next("header");
  if (header.size() != 2 || header[0] != "TVG") fail("not a serialized TVG (bad header)");
  std::int64_t version = 0;
  if (!detail::parse_int(header[1], version)) fail("unreadable format version");
  if (version != kTvgFormatVersion)
    fail("unsupported TVG format version " + std::string(header[1]) + " (expected " +
         std::to_string(kTvgFormatVersion) + ")");

  auto lt = next("lifetime");
  std::int64_t ls = 0, le = 0;
  if (lt.size() != 3 || lt[0] != "lifetime" || !detail::parse_int(lt[1], ls) ||
      !detail::parse_int(lt[2], le) || ls < 0 || ls >= le)
    fail("bad lifetime line");
  TimeVaryingGraph g(Interval(ls, le));

  auto wrap = [&](auto&& action) {
    try {
      action();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
  };

  std::optional<NodeId> last_node;
  std::optional<NodePair> last_edge;
  for (;;) {
    auto f = next("end record");
    if (f.empty()) fail("empty line");
    if (f[0] == "node") {
      if (last_edge) fail("node record after edge records");
      std::int64_t t = 0;
      auto id = f.size() == 3 ? detail::unescape_id(f[1]) : std::nullopt;
      if (!id || id->empty() || !detail::parse_int(f[2], t)) fail("bad node record");
      if (last_node && !(*last_node < *id)) fail("node records not in ascending id order");
      wrap([&] { g.record_node(*id, TimeInstant{t}); });
      last_node = *id;
    } else if (f[0] == "edge") {
      if (f.size() != 5) fail("bad edge record");
      auto u = detail::unescape_id(f[1]);
      auto v = detail::unescape_id(f[2]);
      if (!u || !v || !(*u < *v)) fail("bad edge endpoints");
      NodePair key(*u, *v);
      if (last_edge && !(*last_edge < key)) fail("edge records not in ascending order");
      if (f[3].empty()) fail("edge without availability");
      std::optional<TimeInstant> prev_end;
      for (auto part : detail::split(f[3], ',')) {
        auto dash = part.find('-');
        std::int64_t s = 0, e = 0;
        if (dash == std::string_view::npos || !detail::parse_int(part.substr(0, dash), s) ||
            !detail::parse_int(part.substr(dash + 1), e) || s >= e)
          fail("bad interval \"" + std::string(part) + "\"");
        if (prev_end && !(*prev_end < TimeInstant{s})) fail("intervals not normalized");
        wrap([&] { g.record_edge_presence(*u, *v, Interval(s, e)); });
        prev_end = TimeInstant{e};
      }
      if (!f[4].empty()) {
        std::optional<TimeInstant> prev;
        for (auto part : detail::split(f[4], ',')) {
          auto colon = part.find(':');
          std::int64_t t = 0, d = 0;
          if (colon == std::string_view::npos || !detail::parse_int(part.substr(0, colon), t) ||
              !detail::parse_int(part.substr(colon + 1), d))
            fail("bad weight event \"" + std::string(part) + "\"");
          if (prev && !(*prev < TimeInstant{t})) fail("weight events not strictly increasing");
          wrap([&] { g.add_weight_event(*u, *v, TimeInstant{t}, d); });
          prev = TimeInstant{t};
        }
      }
      last_edge = key;
    } else if (f[0] == "end") {
      std::int64_t n = 0, m = 0;
      if (f.size() != 3 || !detail::parse_int(f[1], n) || !detail::parse_int(f[2], m))
        fail("bad end record");
      if (static_cast<std::size_t>(n) != g.node_count() ||
          static_cast<std::size_t>(m) != g.edge_count())
        fail("end record counts do not match content");
      break;
    } else {
      fail("unknown record type \"" + std::string(f[0]) + "\"");
    }
  }
  if (std::getline(in, line)) {
    ++line_no;
    fail("trailing content after end record");
  }
  return g;
}

inline TimeVaryingGraph tvg_from_text(const std::string& text, const std::string& source = {}) {
  std::istringstream in(text);
  return read_tvg(in, source);
}

}  // namespace tvg
