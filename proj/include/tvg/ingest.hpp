#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tvg/error.hpp"
#include "tvg/text.hpp"
#include "tvg/time.hpp"
#include "tvg/tvg.hpp"

namespace tvg {

struct PaperRecord {
  std::string id;
  TimeInstant date;
  std::vector<NodeId> authors;          // normalized, deduplicated, in input order
  std::vector<std::string> references;  // deduplicated, never the paper itself

  friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

/// Non-fatal irregularities met while parsing.
struct CorpusWarnings {
  std::size_t duplicate_ids = 0;         // earlier record replaced
  std::size_t empty_author_records = 0;  // record rejected
  std::size_t self_references = 0;       // reference dropped
  std::size_t duplicate_references = 0;  // reference dropped
  std::size_t missing_metadata = 0;      // citing paper without metadata, dropped

  friend bool operator==(const CorpusWarnings&, const CorpusWarnings&) = default;
};

struct Corpus {
  std::map<std::string, PaperRecord> papers;
  std::size_t unlinked_citations = 0;  // citations whose citing paper was dropped
  CorpusWarnings warnings;

  /// [earliest date, latest date + 1); [0, 1) for an empty corpus.
  Interval span() const {
    if (papers.empty()) return Interval(0, 1);
    TimeInstant lo = papers.begin()->second.date, hi = lo;
    for (const auto& [id, p] : papers) {
      lo = std::min(lo, p.date);
      hi = std::max(hi, p.date);
    }
    return Interval(lo, hi + 1);
  }
};

/// Trim plus ASCII case fold. No further disambiguation.
inline NodeId normalize_author(std::string_view raw) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!raw.empty() && is_space(static_cast<unsigned char>(raw.front()))) raw.remove_prefix(1);
  while (!raw.empty() && is_space(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
  NodeId out(raw);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

namespace detail {

/// Normalizes and deduplicates authors and references, then stores the record.
/// Returns false when the record has no usable author.
inline bool admit_record(Corpus& corpus, std::string id, TimeInstant date,
                         const std::vector<std::string>& raw_authors,
                         const std::vector<std::string>& raw_refs) {
  PaperRecord rec{std::move(id), date, {}, {}};
  std::set<NodeId> seen_authors;
  for (const auto& a : raw_authors) {
    auto norm = normalize_author(a);
    if (norm.empty() || !seen_authors.insert(norm).second) continue;
    rec.authors.push_back(std::move(norm));
  }
  if (rec.authors.empty()) {
    ++corpus.warnings.empty_author_records;
    return false;
  }
  std::set<std::string> seen_refs;
  for (const auto& r : raw_refs) {
    if (r == rec.id) {
      ++corpus.warnings.self_references;
      continue;
    }
    if (!seen_refs.insert(r).second) {
      ++corpus.warnings.duplicate_references;
      continue;
    }
    rec.references.push_back(r);
  }
  auto key = rec.id;
  auto [it, inserted] = corpus.papers.insert_or_assign(std::move(key), std::move(rec));
  if (!inserted) ++corpus.warnings.duplicate_ids;
  return true;
}

}  // namespace detail

/// Canonical corpus: one JSON object per line,
///   {"id": "...", "date": "YYYY-MM-DD" | "YYYY-MM", "authors": [...], "refs": [...]}
/// "refs" may be omitted. Blank lines are skipped. A duplicate id replaces the
/// earlier record.
inline Corpus parse_corpus_records(std::istream& in, const std::string& source = {}) {
  using nlohmann::json;
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = detail::strip_cr(line);
    if (detail::blank(text)) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(source, line_no, std::string("malformed JSON: ") + e.what());
    }
    auto fail = [&](const std::string& msg) { throw ParseError(source, line_no, msg); };
    if (!obj.is_object()) fail("record is not a JSON object");
    if (!obj.contains("id") || !obj["id"].is_string()) fail("missing string field \"id\"");
    if (!obj.contains("date") || !obj["date"].is_string()) fail("missing string field \"date\"");
    if (!obj.contains("authors") || !obj["authors"].is_array())
      fail("missing array field \"authors\"");
    auto id = obj["id"].get<std::string>();
    if (id.empty()) fail("empty paper id");
    auto date_text = obj["date"].get<std::string>();
    auto date = try_parse_date(date_text);
    if (!date) fail("invalid date \"" + date_text + "\"");
    std::vector<std::string> authors, refs;
    for (const auto& a : obj["authors"]) {
      if (!a.is_string()) fail("author entries must be strings");
      authors.push_back(a.get<std::string>());
    }
    if (obj.contains("refs")) {
      if (!obj["refs"].is_array()) fail("\"refs\" must be an array");
      for (const auto& r : obj["refs"]) {
        if (!r.is_string()) fail("reference entries must be strings");
        refs.push_back(r.get<std::string>());
      }
    }
    detail::admit_record(corpus, std::move(id), *date, authors, refs);
  }
  return corpus;
}

/// SNAP-style pair of streams:
///   citations: "citing<TAB>cited" per line
///   metadata:  "paper_id<TAB>YYYY-MM-DD<TAB>author1;author2;..." per line
/// Lines starting with '#' and blank lines are skipped in both. Citing papers that
/// have no metadata are dropped; their citations are counted as unlinked.
inline Corpus parse_snap_pair(std::istream& citations, std::istream& metadata,
                              const std::string& citations_source = {},
                              const std::string& metadata_source = {}) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;

  struct Meta {
    TimeInstant date;
    std::vector<std::string> authors;
  };
  std::map<std::string, Meta> meta;
  std::map<std::string, std::size_t> meta_line;
  while (std::getline(metadata, line)) {
    ++line_no;
    auto text = detail::strip_cr(line);
    if (detail::blank(text) || text.front() == '#') continue;
    auto fields = detail::split(text, '\t');
    if (fields.size() != 3)
      throw ParseError(metadata_source, line_no, "expected 3 tab-separated fields");
    std::string id(fields[0]);
    if (id.empty()) throw ParseError(metadata_source, line_no, "empty paper id");
    auto date = try_parse_date(fields[1]);
    if (!date)
      throw ParseError(metadata_source, line_no, "invalid date \"" + std::string(fields[1]) + "\"");
    Meta m{*date, {}};
    for (auto a : detail::split(fields[2], ';')) m.authors.emplace_back(a);
    if (meta.count(id)) ++corpus.warnings.duplicate_ids;
    meta.insert_or_assign(id, std::move(m));
    meta_line[id] = line_no;
  }

  std::map<std::string, std::vector<std::string>> refs;
  std::set<std::string> missing;
  line_no = 0;
  while (std::getline(citations, line)) {
    ++line_no;
    auto text = detail::strip_cr(line);
    if (detail::blank(text) || text.front() == '#') continue;
    std::istringstream fields{std::string(text)};
    std::string citing, cited, extra;
    if (!(fields >> citing >> cited) || (fields >> extra))
      throw ParseError(citations_source, line_no, "expected \"citing<TAB>cited\"");
    if (!meta.count(citing)) {
      missing.insert(citing);
      ++corpus.unlinked_citations;
      continue;
    }
    refs[citing].push_back(cited);
  }
  corpus.warnings.missing_metadata = missing.size();

  static const std::vector<std::string> kNone;
  for (auto& [id, m] : meta) {
    auto r = refs.find(id);
    detail::admit_record(corpus, id, m.date, m.authors, r == refs.end() ? kNone : r->second);
  }
  return corpus;
}

struct BuildPolicy {
  enum class EventTime { citing_date, cited_date };

  bool count_self_citations = true;
  EventTime weight_event_time = EventTime::citing_date;
};

namespace detail {

inline std::vector<const PaperRecord*> papers_by_date(const Corpus& c) {
  std::vector<const PaperRecord*> order;
  order.reserve(c.papers.size());
  for (const auto& [id, p] : c.papers) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(),
                   [](const PaperRecord* a, const PaperRecord* b) { return a->date < b->date; });
  return order;
}

}  // namespace detail

/// Cited co-authorship network. Authors appear with their first paper; every
/// co-author pair of a paper is linked from that paper's date to the end of the
/// corpus span; each in-corpus citation of a paper adds +1 strength to every
/// co-author pair of the cited paper.
inline TimeVaryingGraph build_interaction_network(const Corpus& corpus,
                                                  const BuildPolicy& policy = {}) {
  const Interval life = corpus.span();
  TimeVaryingGraph g(life);
  const auto order = detail::papers_by_date(corpus);
  for (const auto* p : order) {
    for (const auto& a : p->authors) g.record_node(a, p->date);
  }
  for (const auto* p : order) {
    const auto& au = p->authors;
    for (std::size_t i = 0; i < au.size(); ++i)
      for (std::size_t j = i + 1; j < au.size(); ++j)
        g.record_edge_presence(au[i], au[j], Interval(p->date, life.end));
  }
  for (const auto* citing : order) {
    std::vector<std::string> refs = citing->references;
    std::sort(refs.begin(), refs.end());
    for (const auto& ref : refs) {
      auto it = corpus.papers.find(ref);
      if (it == corpus.papers.end()) continue;
      const auto& cited = it->second;
      if (cited.authors.size() < 2) continue;
      if (!policy.count_self_citations) {
        bool shared = std::any_of(cited.authors.begin(), cited.authors.end(), [&](const NodeId& a) {
          return std::find(citing->authors.begin(), citing->authors.end(), a) !=
                 citing->authors.end();
        });
        if (shared) continue;
      }
      const auto when = policy.weight_event_time == BuildPolicy::EventTime::citing_date
                            ? citing->date
                            : cited.date;
      const auto& au = cited.authors;
      for (std::size_t i = 0; i < au.size(); ++i)
        for (std::size_t j = i + 1; j < au.size(); ++j) g.add_weight_event(au[i], au[j], when, 1);
    }
  }
  return g;
}

/// Keeps edges whose cumulative strength at `at` (inclusive) is strictly greater
/// than `threshold`, and only the nodes incident to them. `at` may equal the
/// lifetime end, meaning all events.
inline TimeVaryingGraph filter_by_strength(const TimeVaryingGraph& g, std::int64_t threshold,
                                           TimeInstant at) {
  if (threshold < 0) throw Error(ErrorKind::invalid_argument, "threshold must be >= 0");
  if (at < g.lifetime().start || g.lifetime().end < at)
    throw Error(ErrorKind::out_of_lifetime, "filter instant outside lifetime");
  TimeVaryingGraph out(g.lifetime());
  std::vector<const std::pair<const NodePair, EdgeRecord>*> keep;
  for (const auto& entry : g.edges())
    if (entry.second.weight_at(at) > threshold) keep.push_back(&entry);
  for (const auto* entry : keep) {
    out.record_node(entry->first.first, *g.appearance(entry->first.first));
    out.record_node(entry->first.second, *g.appearance(entry->first.second));
  }
  for (const auto* entry : keep) {
    const auto& [pair, rec] = *entry;
    for (const auto& iv : rec.availability.intervals())
      out.record_edge_presence(pair.first, pair.second, iv);
    for (const auto& ev : rec.weight_events)
      out.add_weight_event(pair.first, pair.second, ev.time, ev.delta);
  }
  return out;
}

struct CorpusStats {
  std::size_t papers = 0;
  std::size_t authors = 0;
  std::size_t citations_total = 0;     // every citation read, including unlinked ones
  std::size_t citations_resolved = 0;  // both ends in the corpus
  std::size_t dangling = 0;            // cited paper outside the corpus
  std::size_t unlinked = 0;            // citing paper outside the corpus

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

inline CorpusStats corpus_stats(const Corpus& c) {
  CorpusStats s;
  s.papers = c.papers.size();
  std::set<NodeId> authors;
  for (const auto& [id, p] : c.papers) {
    authors.insert(p.authors.begin(), p.authors.end());
    for (const auto& r : p.references) {
      if (c.papers.count(r))
        ++s.citations_resolved;
      else
        ++s.dangling;
    }
  }
  s.authors = authors.size();
  s.unlinked = c.unlinked_citations;
  s.citations_total = s.citations_resolved + s.dangling + s.unlinked;
  return s;
}

}  // namespace tvg
