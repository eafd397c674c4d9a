#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tvg/community.hpp"
#include "tvg/csv.hpp"
#include "tvg/gexf.hpp"
#include "tvg/ingest.hpp"
#include "tvg/serialize.hpp"
#include "tvg/series.hpp"
#include "tvg/snapshot.hpp"

namespace tvg {

enum class InputFormat { canonical, snap };

struct RunConfig {
  // canonical: one corpus file; snap: citations file then metadata file;
  // metrics/communities/export-gexf: one serialized TVG
  std::vector<std::filesystem::path> inputs;
  InputFormat format = InputFormat::canonical;
  BuildPolicy policy;
  std::int64_t threshold = 0;  // 0 disables the strength filter
  std::int64_t step = 365;
  bool cumulative = true;
  double resolution = 1.0;
  bool weighted = false;
  std::size_t anchor = 0;
  bool frozen = false;
  std::optional<std::size_t> window;  // export-gexf: one window, or all when unset
  std::filesystem::path out_dir = ".";
  unsigned threads = 1;
};

namespace detail {

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open input file " + path.string());
  return in;
}

inline std::filesystem::path output_file(const RunConfig& cfg, const std::string& name) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create output directory " + cfg.out_dir.string());
  return cfg.out_dir / name;
}

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& write) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  write(out);
  out.flush();
  if (!out) throw Error(ErrorKind::io, "write failed for " + path.string());
}

inline void require_inputs(const RunConfig& cfg, std::size_t n, const char* what) {
  if (cfg.inputs.size() != n)
    throw Error(ErrorKind::invalid_argument,
                std::string("expected ") + std::to_string(n) + " input path(s): " + what);
}

}  // namespace detail

inline Corpus load_corpus(const RunConfig& cfg) {
  if (cfg.format == InputFormat::canonical) {
    detail::require_inputs(cfg, 1, "corpus file");
    auto in = detail::open_input(cfg.inputs[0]);
    return parse_corpus_records(in, cfg.inputs[0].string());
  }
  detail::require_inputs(cfg, 2, "citations file and metadata file");
  auto cites = detail::open_input(cfg.inputs[0]);
  auto meta = detail::open_input(cfg.inputs[1]);
  return parse_snap_pair(cites, meta, cfg.inputs[0].string(), cfg.inputs[1].string());
}

inline nlohmann::ordered_json stats_json(const Corpus& c) {
  const auto s = corpus_stats(c);
  nlohmann::ordered_json j;
  j["papers"] = s.papers;
  j["authors"] = s.authors;
  j["citations_total"] = s.citations_total;
  j["citations_resolved"] = s.citations_resolved;
  j["dangling"] = s.dangling;
  j["unlinked"] = s.unlinked;
  j["warnings"] = {{"duplicate_ids", c.warnings.duplicate_ids},
                   {"empty_author_records", c.warnings.empty_author_records},
                   {"self_references", c.warnings.self_references},
                   {"duplicate_references", c.warnings.duplicate_references},
                   {"missing_metadata", c.warnings.missing_metadata}};
  return j;
}

/// Loads the serialized network named by the config and applies the strength
/// filter at the lifetime end when the threshold is positive.
inline TimeVaryingGraph load_network(const RunConfig& cfg) {
  detail::require_inputs(cfg, 1, "serialized TVG");
  auto in = detail::open_input(cfg.inputs[0]);
  auto g = read_tvg(in, cfg.inputs[0].string());
  if (cfg.threshold > 0) g = filter_by_strength(g, cfg.threshold, g.lifetime().end);
  return g;
}

/// Writes network.tvg and stats.json.
inline CorpusStats cmd_ingest(const RunConfig& cfg) {
  const auto corpus = load_corpus(cfg);
  const auto g = build_interaction_network(corpus, cfg.policy);
  detail::write_file(detail::output_file(cfg, "network.tvg"),
                     [&](std::ostream& out) { write_tvg(out, g); });
  detail::write_file(detail::output_file(cfg, "stats.json"),
                     [&](std::ostream& out) { out << stats_json(corpus).dump(2) << '\n'; });
  return corpus_stats(corpus);
}

/// Writes stats.json only.
inline CorpusStats cmd_stats(const RunConfig& cfg) {
  const auto corpus = load_corpus(cfg);
  detail::write_file(detail::output_file(cfg, "stats.json"),
                     [&](std::ostream& out) { out << stats_json(corpus).dump(2) << '\n'; });
  return corpus_stats(corpus);
}

/// Writes metrics.csv.
inline std::vector<MetricRow> cmd_metrics(const RunConfig& cfg) {
  const auto g = load_network(cfg);
  SeriesOptions opt{FixedStep{cfg.step, cfg.cumulative}, {cfg.resolution, cfg.weighted},
                    cfg.threads};
  auto rows = metric_series(g, opt);
  detail::write_file(detail::output_file(cfg, "metrics.csv"),
                     [&](std::ostream& out) { write_metric_csv(out, rows); });
  return rows;
}

/// Writes communities_table.csv and communities_tidy.csv.
inline std::vector<CommunityTrackRow> cmd_communities(const RunConfig& cfg) {
  const auto g = load_network(cfg);
  TrackOptions opt;
  opt.snapshots = FixedStep{cfg.step, cfg.cumulative};
  opt.anchor = cfg.anchor;
  opt.modularity = {cfg.resolution, cfg.weighted};
  opt.mode = cfg.frozen ? TrackingMode::frozen : TrackingMode::redetect;
  auto rows = track_largest_community(g, opt);
  detail::write_file(detail::output_file(cfg, "communities_table.csv"),
                     [&](std::ostream& out) { write_track_table_csv(out, rows); });
  detail::write_file(detail::output_file(cfg, "communities_tidy.csv"),
                     [&](std::ostream& out) { write_track_tidy_csv(out, rows); });
  return rows;
}

/// Writes snapshot_<k>.gexf for the selected window, or for every window.
inline std::vector<std::filesystem::path> cmd_export_gexf(const RunConfig& cfg) {
  const auto g = load_network(cfg);
  const auto windows = snapshot_windows(g, FixedStep{cfg.step, cfg.cumulative});
  if (cfg.window && *cfg.window >= windows.size())
    throw Error(ErrorKind::invalid_argument,
                "window " + std::to_string(*cfg.window) + " out of range (" +
                    std::to_string(windows.size()) + " windows)");
  std::vector<std::filesystem::path> written;
  for (std::size_t k = 0; k < windows.size(); ++k) {
    if (cfg.window && *cfg.window != k) continue;
    auto graph = underlying_graph(g, windows[k]);
    auto path = detail::output_file(cfg, "snapshot_" + std::to_string(k) + ".gexf");
    detail::write_file(path, [&](std::ostream& out) { write_gexf(out, graph); });
    written.push_back(path);
  }
  return written;
}

}  // namespace tvg
