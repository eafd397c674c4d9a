#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "tvg/ingest.hpp"
#include "tvg/serialize.hpp"

namespace tvg {
namespace {

std::string fixture(const std::string& name) { return std::string(TVG_FIXTURE_DIR) + "/" + name; }

Corpus parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus_records(in, "mem");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

TEST(NormalizeAuthor, TrimAndFold) {
  EXPECT_EQ(normalize_author("  Alice NG\t"), "alice ng");
  EXPECT_EQ(normalize_author("bob"), "bob");
  EXPECT_EQ(normalize_author("   "), "");
}

TEST(ParseCorpus, ThreeValidLines) {
  auto c = parse_text(
      R"({"id":"p1","date":"1999-02-03","authors":["A"],"refs":[]})"
      "\n"
      R"({"id":"p2","date":"1999-04","authors":["b","B "],"refs":["p1"]})"
      "\n\n"
      R"({"id":"p3","date":"2000-01-01","authors":["c"]})"
      "\n");
  ASSERT_EQ(c.papers.size(), 3u);
  EXPECT_EQ(c.papers.at("p2").date, from_calendar(1999, 4, 1));
  EXPECT_EQ(c.papers.at("p2").authors, (std::vector<NodeId>{"b"}));
  EXPECT_EQ(c.papers.at("p1").authors, (std::vector<NodeId>{"a"}));
  EXPECT_TRUE(c.papers.at("p3").references.empty());
  EXPECT_EQ(c.span(), Interval(from_calendar(1999, 2, 3), from_calendar(2000, 1, 1) + 1));
}

TEST(ParseCorpus, ErrorsNameTheLine) {
  auto expect_line = [](const std::string& text, const std::string& needle) {
    try {
      parse_text(text);
      FAIL() << "no error for " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::parse);
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  };
  const std::string ok = R"({"id":"p1","date":"1999-02-03","authors":["a"]})";
  expect_line(ok + "\n" + R"({"id":"p2","date":"1999-13-01","authors":["a"]})", "mem:2:");
  expect_line(ok + "\n\n" + "{not json", "mem:3:");
  expect_line(R"({"date":"1999-01-01","authors":["a"]})", "mem:1:");
  expect_line(R"({"id":"p","date":"1999-01-01","authors":"a"})", "mem:1:");
  expect_line(R"({"id":"p","date":"1991-12-31","authors":["a"]})", "mem:1:");
  expect_line(R"({"id":"p","date":"1999-02-30","authors":["a"]})", "mem:1:");
  expect_line(R"([1,2])", "mem:1:");
}

TEST(ParseCorpus, WarningsAndPolicies) {
  auto c = parse_text(
      R"({"id":"p1","date":"1999-01-01","authors":["a"],"refs":["X","p1","X"]})"
      "\n"
      R"({"id":"p2","date":"1999-01-01","authors":[" ",""]})"
      "\n"
      R"({"id":"p3","date":"1999-01-01","authors":["x"]})"
      "\n"
      R"({"id":"p3","date":"1999-05-01","authors":["y"]})"
      "\n");
  EXPECT_EQ(c.papers.size(), 2u);
  EXPECT_EQ(c.papers.at("p1").references, (std::vector<std::string>{"X"}));
  EXPECT_EQ(c.papers.at("p3").authors, (std::vector<NodeId>{"y"}));
  EXPECT_EQ(c.warnings.self_references, 1u);
  EXPECT_EQ(c.warnings.duplicate_references, 1u);
  EXPECT_EQ(c.warnings.empty_author_records, 1u);
  EXPECT_EQ(c.warnings.duplicate_ids, 1u);
  auto s = corpus_stats(c);
  EXPECT_EQ(s.dangling, 1u);
  EXPECT_EQ(s.citations_resolved, 0u);
  EXPECT_EQ(s.authors, 2u);
}

TEST(CorpusStats, EmptyAndSharedAuthors) {
  EXPECT_EQ(corpus_stats(Corpus{}), CorpusStats{});
  auto c = parse_text(
      R"({"id":"p1","date":"1999-01-01","authors":["a","b"]})"
      "\n"
      R"({"id":"p2","date":"1999-01-01","authors":["A"],"refs":["p1"]})"
      "\n");
  auto s = corpus_stats(c);
  EXPECT_EQ(s.papers, 2u);
  EXPECT_EQ(s.authors, 2u);
  EXPECT_EQ(s.citations_total, 1u);
  EXPECT_EQ(s.citations_resolved, 1u);
}

TEST(ParseSnap, PairsCommentsAndMissingMetadata) {
  std::istringstream cites("# comment\nq1\tq2\nq3\tq1\nq9\tq1\n");
  std::istringstream meta("# id date authors\nq1\t2001-01-01\ta;b\nq2\t2000-06-01\tc\nq3\t2002-01-01\td\n");
  auto c = parse_snap_pair(cites, meta, "c.txt", "m.txt");
  EXPECT_EQ(c.papers.size(), 3u);
  EXPECT_EQ(c.warnings.missing_metadata, 1u);
  EXPECT_EQ(c.unlinked_citations, 1u);
  auto s = corpus_stats(c);
  EXPECT_EQ(s.citations_resolved, 2u);
  EXPECT_EQ(s.citations_total, 3u);

  std::istringstream bad_cites("q1\tq2\nonly-one-field\n");
  std::istringstream meta2("q1\t2001-01-01\ta\n");
  try {
    parse_snap_pair(bad_cites, meta2, "c.txt", "m.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("c.txt:2:"), std::string::npos) << e.what();
  }
  std::istringstream cites3("");
  std::istringstream bad_meta("q1\t2001-01-01\n");
  EXPECT_THROW(parse_snap_pair(cites3, bad_meta), Error);
}

TEST(ParseSnap, DanglingCitationIgnoredByBuilder) {
  std::istringstream cites("q1\tq2\nq1\tq7\n");
  std::istringstream meta("q1\t2001-01-01\ta\nq2\t2000-06-01\tb;c\n");
  auto c = parse_snap_pair(cites, meta);
  EXPECT_EQ(corpus_stats(c).dangling, 1u);
  auto g = build_interaction_network(c);
  EXPECT_EQ(g.find_edge("b", "c")->final_weight(), 1);
}

TEST(Build, HandTraceExample) {
  auto c = parse_text(
      R"({"id":"P1","date":"1992-01-01","authors":["a","b"]})"
      "\n"
      R"({"id":"P2","date":"1992-01-11","authors":["c"],"refs":["P1"]})"
      "\n");
  auto g = build_interaction_network(c);
  EXPECT_EQ(g.lifetime(), Interval(0, 11));
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 1u);
  const auto* ab = g.find_edge("a", "b");
  ASSERT_NE(ab, nullptr);
  EXPECT_EQ(ab->availability.intervals(), (std::vector<Interval>{Interval(0, 11)}));
  ASSERT_EQ(ab->weight_events.size(), 1u);
  EXPECT_EQ(ab->weight_events[0].time, TimeInstant{10});
  EXPECT_EQ(ab->weight_events[0].delta, 1);
  EXPECT_EQ(g.appearance("c"), TimeInstant{10});
  EXPECT_TRUE(underlying_graph(g).neighbors(*underlying_graph(g).index_of("c")).empty());
}

TEST(Build, ThreeAuthorsCitedTwice) {
  auto c = parse_text(
      R"({"id":"P","date":"1992-01-01","authors":["a","b","c"]})"
      "\n"
      R"({"id":"Q","date":"1992-02-01","authors":["x"],"refs":["P"]})"
      "\n"
      R"({"id":"R","date":"1992-03-01","authors":["y"],"refs":["P"]})"
      "\n");
  auto g = build_interaction_network(c);
  EXPECT_EQ(g.edge_count(), 3u);
  std::int64_t total = 0;
  for (const auto& [pair, rec] : g.edges()) {
    EXPECT_EQ(rec.final_weight(), 2);
    total += rec.final_weight();
  }
  EXPECT_EQ(total, 6);
}

TEST(Build, SingleAuthorPapersOnly) {
  auto c = parse_text(
      R"({"id":"P","date":"1992-01-01","authors":["a"]})"
      "\n"
      R"({"id":"Q","date":"1992-02-01","authors":["b"],"refs":["P"]})"
      "\n");
  auto g = build_interaction_network(c);
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Build, PolicyFlags) {
  auto c = parse_text(
      R"({"id":"P","date":"1992-01-01","authors":["a","b"]})"
      "\n"
      R"({"id":"Q","date":"1992-02-01","authors":["a"],"refs":["P"]})"
      "\n"
      R"({"id":"R","date":"1992-03-01","authors":["z"],"refs":["P"]})"
      "\n");
  EXPECT_EQ(build_interaction_network(c).find_edge("a", "b")->final_weight(), 2);
  BuildPolicy no_self;
  no_self.count_self_citations = false;
  EXPECT_EQ(build_interaction_network(c, no_self).find_edge("a", "b")->final_weight(), 1);
  BuildPolicy cited;
  cited.weight_event_time = BuildPolicy::EventTime::cited_date;
  auto g = build_interaction_network(c, cited);
  const auto* ab = g.find_edge("a", "b");
  ASSERT_EQ(ab->weight_events.size(), 1u);
  EXPECT_EQ(ab->weight_events[0].time, TimeInstant{0});
  EXPECT_EQ(ab->weight_events[0].delta, 2);
}

Corpus random_corpus(std::mt19937& rng) {
  Corpus c;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 50)(rng);
  std::uniform_int_distribution<int> day(0, 400), author(0, 14), k(1, 4), refs(0, 5);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> authors, r;
    const int count = k(rng);
    for (int j = 0; j < count; ++j) authors.push_back("au" + std::to_string(author(rng)));
    const int rc = refs(rng);
    for (int j = 0; j < rc; ++j) {
      if (std::bernoulli_distribution(0.1)(rng))
        r.push_back("ext" + std::to_string(j));
      else
        r.push_back(ids[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)]);
    }
    detail::admit_record(c, ids[i], TimeInstant{day(rng)}, authors, r);
  }
  return c;
}

TEST(Build, ConservationAgainstRecount) {
  std::mt19937 rng(2024);
  for (int round = 0; round < 400; ++round) {
    auto c = random_corpus(rng);
    auto g = build_interaction_network(c);
    std::int64_t expected = 0;
    for (const auto& [id, citing] : c.papers)
      for (const auto& ref : citing.references) {
        auto it = c.papers.find(ref);
        if (it == c.papers.end()) continue;
        const auto k = static_cast<std::int64_t>(it->second.authors.size());
        expected += k * (k - 1) / 2;
      }
    std::int64_t total = 0;
    for (const auto& [pair, rec] : g.edges()) {
      total += rec.final_weight();
      // appearance never later than availability
      auto first = *rec.availability.first_instant();
      ASSERT_LE(*g.appearance(pair.first), first);
      ASSERT_LE(*g.appearance(pair.second), first);
    }
    ASSERT_EQ(total, expected);
    for (const auto& [id, when] : g.nodes()) {
      TimeInstant lo{std::numeric_limits<std::int64_t>::max()};
      for (const auto& [pid, p] : c.papers)
        if (std::find(p.authors.begin(), p.authors.end(), id) != p.authors.end())
          lo = std::min(lo, p.date);
      ASSERT_EQ(when, lo);
    }
    ASSERT_EQ(to_tvg_text(g), to_tvg_text(build_interaction_network(c)));
  }
}

TimeVaryingGraph weighted_pair(std::int64_t w1, std::int64_t w2) {
  TimeVaryingGraph g(Interval(0, 10));
  for (auto id : {"a", "b", "c", "d"}) g.record_node(id, TimeInstant{0});
  g.record_edge_presence("a", "b", Interval(0, 10));
  g.record_edge_presence("c", "d", Interval(0, 10));
  g.add_weight_event("a", "b", TimeInstant{2}, w1);
  g.add_weight_event("c", "d", TimeInstant{3}, w2);
  return g;
}

TEST(Filter, StrictThreshold) {
  auto g = weighted_pair(150, 151);
  auto f = filter_by_strength(g, 150, TimeInstant{10});
  EXPECT_EQ(f.edge_count(), 1u);
  EXPECT_NE(f.find_edge("c", "d"), nullptr);
  EXPECT_FALSE(f.has_node("a"));
  EXPECT_EQ(f.node_count(), 2u);
  // at day 2 the c-d event has not happened
  EXPECT_EQ(filter_by_strength(g, 0, TimeInstant{2}).edge_count(), 1u);
  EXPECT_EQ(filter_by_strength(g, 0, TimeInstant{3}).edge_count(), 2u);
}

TEST(Filter, ZeroDropsUnweightedAndIsolated) {
  TimeVaryingGraph g(Interval(0, 10));
  for (auto id : {"a", "b", "c", "d", "e"}) g.record_node(id, TimeInstant{0});
  g.record_edge_presence("a", "b", Interval(0, 10));
  g.record_edge_presence("c", "d", Interval(0, 10));
  g.add_weight_event("a", "b", TimeInstant{1}, 1);
  auto f = filter_by_strength(g, 0, g.lifetime().end);
  EXPECT_EQ(f.edge_count(), 1u);
  EXPECT_EQ(f.node_count(), 2u);
  EXPECT_THROW(filter_by_strength(g, -1, TimeInstant{0}), Error);
  EXPECT_THROW(filter_by_strength(g, 0, TimeInstant{11}), Error);
}

TEST(Filter, MonotoneInThreshold) {
  std::mt19937 rng(77);
  for (int round = 0; round < 100; ++round) {
    auto g = build_interaction_network(random_corpus(rng));
    std::size_t prev_n = g.node_count() + 1, prev_e = g.edge_count() + 1;
    for (std::int64_t t = 0; t < 8; ++t) {
      auto f = filter_by_strength(g, t, g.lifetime().end);
      ASSERT_LE(f.node_count(), prev_n);
      ASSERT_LE(f.edge_count(), prev_e);
      for (const auto& [pair, rec] : f.edges()) ASSERT_NE(g.find_edge(pair.first, pair.second), nullptr);
      prev_n = f.node_count();
      prev_e = f.edge_count();
    }
  }
}

TEST(Fixtures, SnapTwinBuildsSameNetwork) {
  std::ifstream canon(fixture("twin.jsonl"));
  std::ifstream cites(fixture("twin_citations.txt")), meta(fixture("twin_metadata.txt"));
  auto a = parse_corpus_records(canon, "twin.jsonl");
  auto b = parse_snap_pair(cites, meta, "twin_citations.txt", "twin_metadata.txt");
  EXPECT_EQ(b.warnings.missing_metadata, 1u);
  EXPECT_EQ(a.papers.size(), b.papers.size());
  auto ga = build_interaction_network(a), gb = build_interaction_network(b);
  EXPECT_EQ(ga, gb);
  EXPECT_EQ(to_tvg_text(ga), to_tvg_text(gb));
  EXPECT_TRUE(ga.has_node("alice ng"));
  EXPECT_EQ(ga.find_edge("alice ng", "dee")->final_weight(), 1);
  EXPECT_EQ(ga.find_edge("bo li", "dee")->final_weight(), 1);
  EXPECT_EQ(ga.find_edge("alice ng", "bo li")->final_weight(), 2);
}

TEST(Fixtures, Corpus12MatchesHandDerivedNetwork) {
  std::ifstream in(fixture("corpus12.jsonl"));
  auto c = parse_corpus_records(in, "corpus12.jsonl");
  auto s = corpus_stats(c);
  EXPECT_EQ(s.papers, 12u);
  EXPECT_EQ(s.authors, 7u);
  EXPECT_EQ(s.citations_total, 16u);
  EXPECT_EQ(s.citations_resolved, 15u);
  EXPECT_EQ(s.dangling, 1u);
  EXPECT_EQ(to_tvg_text(build_interaction_network(c)), slurp(fixture("corpus12.expected.tvg")));
}

}  // namespace
}  // namespace tvg
