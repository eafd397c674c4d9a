#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tvg/community.hpp"
#include "tvg/error.hpp"
#include "tvg/series.hpp"
#include "tvg/text.hpp"
#include "tvg/time.hpp"

// CSV tables. Comma-separated, LF endings, '.' decimal point regardless of locale.
// Reals use the shortest representation that parses back to the same double.
// Undefined values are empty cells. Windows are ISO-8601 dates; the end date is
// exclusive.
//
// Metric series columns:
//   window_start,window_end,nodes,edges,components,density,avg_degree,
//   avg_clustering,avg_path_length,diameter,power_law_slope,modularity,
//   edge_node_ratio
//
// Community track, tidy layout:
//   window_start,window_end,vertices,edges,diameter,cyclomatic,alpha,beta,gamma
//
// Community track, table layout: one column per window headed by its end date,
// one row per measure:
//   Measures,<end 1>,<end 2>,...
//   Vertices,...  Edges,...  Diameter,...  Cyclomatic,...  Alpha,...  Beta,...  Gamma,...

namespace tvg {

namespace csv {

inline std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

inline std::string cell(const std::optional<double>& v) { return v ? format_real(*v) : ""; }
inline std::string cell(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "";
}
inline std::string cell(std::int64_t v) { return std::to_string(v); }

inline std::optional<double> parse_real_cell(std::string_view text, std::size_t line) {
  if (text.empty()) return std::nullopt;
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("csv", line, "bad real \"" + std::string(text) + "\"");
  return v;
}

inline std::optional<std::int64_t> parse_int_cell(std::string_view text, std::size_t line) {
  if (text.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("csv", line, "bad integer \"" + std::string(text) + "\"");
  return v;
}

inline std::int64_t require_int(std::string_view text, std::size_t line) {
  auto v = parse_int_cell(text, line);
  if (!v) throw ParseError("csv", line, "missing integer");
  return *v;
}

inline TimeInstant parse_date_cell(std::string_view text, std::size_t line) {
  auto t = try_parse_date(text);
  if (!t || text.size() != 10) throw ParseError("csv", line, "bad date \"" + std::string(text) + "\"");
  return *t;
}

inline std::vector<std::vector<std::string_view>> read_rows(const std::string& text) {
  std::vector<std::vector<std::string_view>> rows;
  std::string_view rest(text);
  while (!rest.empty()) {
    auto nl = rest.find('\n');
    auto line = detail::strip_cr(rest.substr(0, nl));
    rows.push_back(detail::split(line, ','));
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  return rows;
}

}  // namespace csv

inline constexpr std::string_view kMetricColumns =
    "window_start,window_end,nodes,edges,components,density,avg_degree,avg_clustering,"
    "avg_path_length,diameter,power_law_slope,modularity,edge_node_ratio";

inline void write_metric_csv(std::ostream& out, const std::vector<MetricRow>& rows) {
  out << kMetricColumns << '\n';
  for (const auto& r : rows) {
    out << to_iso(r.window.start) << ',' << to_iso(r.window.end) << ',' << r.nodes << ','
        << r.edges << ',' << r.components << ',' << csv::cell(r.density) << ','
        << csv::cell(r.avg_degree) << ',' << csv::cell(r.avg_clustering) << ','
        << csv::cell(r.avg_path_length) << ',' << csv::cell(r.diameter) << ','
        << csv::cell(r.power_law_slope) << ',' << csv::cell(r.modularity) << ','
        << csv::cell(r.edge_node_ratio) << '\n';
  }
}

inline std::vector<MetricRow> parse_metric_csv(const std::string& text) {
  auto rows = csv::read_rows(text);
  if (rows.empty()) throw ParseError("csv", 1, "missing header");
  std::string header;
  for (std::size_t i = 0; i < rows[0].size(); ++i) header += (i ? "," : "") + std::string(rows[0][i]);
  if (header != kMetricColumns) throw ParseError("csv", 1, "unexpected metric header");
  std::vector<MetricRow> out;
  for (std::size_t n = 1; n < rows.size(); ++n) {
    const auto& f = rows[n];
    const auto line = n + 1;
    if (f.size() != 13) throw ParseError("csv", line, "expected 13 columns");
    MetricRow r;
    r.window = Interval(csv::parse_date_cell(f[0], line), csv::parse_date_cell(f[1], line));
    r.nodes = csv::require_int(f[2], line);
    r.edges = csv::require_int(f[3], line);
    r.components = csv::require_int(f[4], line);
    r.density = csv::parse_real_cell(f[5], line);
    r.avg_degree = csv::parse_real_cell(f[6], line);
    r.avg_clustering = csv::parse_real_cell(f[7], line);
    r.avg_path_length = csv::parse_real_cell(f[8], line);
    r.diameter = csv::parse_int_cell(f[9], line);
    r.power_law_slope = csv::parse_real_cell(f[10], line);
    r.modularity = csv::parse_real_cell(f[11], line);
    r.edge_node_ratio = csv::parse_real_cell(f[12], line);
    out.push_back(r);
  }
  return out;
}

inline constexpr std::string_view kTrackColumns =
    "window_start,window_end,vertices,edges,diameter,cyclomatic,alpha,beta,gamma";

inline void write_track_tidy_csv(std::ostream& out, const std::vector<CommunityTrackRow>& rows) {
  out << kTrackColumns << '\n';
  for (const auto& r : rows) {
    out << to_iso(r.window.start) << ',' << to_iso(r.window.end) << ',' << r.vertices << ','
        << r.edges << ',' << csv::cell(r.diameter) << ',' << r.indices.cyclomatic << ','
        << csv::cell(r.indices.alpha) << ',' << csv::cell(r.indices.beta) << ','
        << csv::cell(r.indices.gamma) << '\n';
  }
}

inline std::vector<CommunityTrackRow> parse_track_tidy_csv(const std::string& text) {
  auto rows = csv::read_rows(text);
  if (rows.empty()) throw ParseError("csv", 1, "missing header");
  std::string header;
  for (std::size_t i = 0; i < rows[0].size(); ++i) header += (i ? "," : "") + std::string(rows[0][i]);
  if (header != kTrackColumns) throw ParseError("csv", 1, "unexpected track header");
  std::vector<CommunityTrackRow> out;
  for (std::size_t n = 1; n < rows.size(); ++n) {
    const auto& f = rows[n];
    const auto line = n + 1;
    if (f.size() != 9) throw ParseError("csv", line, "expected 9 columns");
    CommunityTrackRow r{Interval(csv::parse_date_cell(f[0], line), csv::parse_date_cell(f[1], line)), 0, 0,
                        std::nullopt, {}};
    r.vertices = csv::require_int(f[2], line);
    r.edges = csv::require_int(f[3], line);
    r.diameter = csv::parse_int_cell(f[4], line);
    r.indices.cyclomatic = csv::require_int(f[5], line);
    r.indices.alpha = csv::parse_real_cell(f[6], line);
    r.indices.beta = csv::parse_real_cell(f[7], line);
    r.indices.gamma = csv::parse_real_cell(f[8], line);
    out.push_back(r);
  }
  return out;
}

inline void write_track_table_csv(std::ostream& out, const std::vector<CommunityTrackRow>& rows) {
  out << "Measures";
  for (const auto& r : rows) out << ',' << to_iso(r.window.end);
  out << '\n';
  auto line = [&](const char* name, auto&& value) {
    out << name;
    for (const auto& r : rows) out << ',' << value(r);
    out << '\n';
  };
  line("Vertices", [](const CommunityTrackRow& r) { return csv::cell(r.vertices); });
  line("Edges", [](const CommunityTrackRow& r) { return csv::cell(r.edges); });
  line("Diameter", [](const CommunityTrackRow& r) { return csv::cell(r.diameter); });
  line("Cyclomatic", [](const CommunityTrackRow& r) { return csv::cell(r.indices.cyclomatic); });
  line("Alpha", [](const CommunityTrackRow& r) { return csv::cell(r.indices.alpha); });
  line("Beta", [](const CommunityTrackRow& r) { return csv::cell(r.indices.beta); });
  line("Gamma", [](const CommunityTrackRow& r) { return csv::cell(r.indices.gamma); });
}

/// The table layout carries window end dates only; `windows` supplies the full
/// intervals and must agree with the column dates.
inline std::vector<CommunityTrackRow> parse_track_table_csv(const std::string& text,
                                                            const std::vector<Interval>& windows) {
  auto rows = csv::read_rows(text);
  static constexpr const char* kNames[] = {"Measures", "Vertices", "Edges", "Diameter",
                                           "Cyclomatic", "Alpha", "Beta", "Gamma"};
  if (rows.size() != 8) throw ParseError("csv", 0, "table layout needs 8 rows");
  const std::size_t cols = rows[0].size() - 1;
  if (windows.size() != cols) throw ParseError("csv", 1, "window count mismatch");
  for (std::size_t i = 0; i < 8; ++i) {
    if (rows[i].empty() || rows[i][0] != kNames[i])
      throw ParseError("csv", i + 1, std::string("expected row ") + kNames[i]);
    if (rows[i].size() != cols + 1) throw ParseError("csv", i + 1, "ragged row");
  }
  std::vector<CommunityTrackRow> out;
  for (std::size_t c = 1; c <= cols; ++c) {
    if (csv::parse_date_cell(rows[0][c], 1) != windows[c - 1].end)
      throw ParseError("csv", 1, "column date does not match window end");
    CommunityTrackRow r{windows[c - 1], 0, 0, std::nullopt, {}};
    r.vertices = csv::require_int(rows[1][c], 2);
    r.edges = csv::require_int(rows[2][c], 3);
    r.diameter = csv::parse_int_cell(rows[3][c], 4);
    r.indices.cyclomatic = csv::require_int(rows[4][c], 5);
    r.indices.alpha = csv::parse_real_cell(rows[5][c], 6);
    r.indices.beta = csv::parse_real_cell(rows[6][c], 7);
    r.indices.gamma = csv::parse_real_cell(rows[7][c], 8);
    out.push_back(r);
  }
  return out;
}

}  // namespace tvg
