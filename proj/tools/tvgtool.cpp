// tvgtool: ingest corpora into time-varying co-authorship networks and compute
// indicator series, community tracks and GEXF snapshots.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tvg/pipeline.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kInternal = 3 };

// key=value lines, '#' comments. Keys are long flag names without dashes.
std::vector<std::string> config_arguments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tvg::Error(tvg::ErrorKind::io, "cannot open config file " + path);
  std::vector<std::string> args;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto text = tvg::detail::strip_cr(line);
    if (tvg::detail::blank(text) || text.front() == '#') continue;
    auto eq = text.find('=');
    if (eq == std::string_view::npos) throw tvg::ParseError(path, n, "expected key=value");
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return std::string(s);
    };
    auto key = trim(text.substr(0, eq));
    auto value = trim(text.substr(eq + 1));
    if (key.empty()) throw tvg::ParseError(path, n, "empty key");
    args.push_back("--" + key + "=" + value);
  }
  return args;
}

// Config-file values are spliced in right after the subcommand so that explicit
// flags, which come later, take precedence.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      continue;
    }
    auto extra = config_arguments(path);
    const std::size_t at = args.empty() ? 0 : 1;
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), extra.begin(), extra.end());
    break;
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  return args;
}

int exit_code_for(const tvg::Error& e) {
  switch (e.kind()) {
    case tvg::ErrorKind::parse:
    case tvg::ErrorKind::io:
      return kInput;
    case tvg::ErrorKind::invariant:
      return kInternal;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-varying co-authorship network analytics"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.name("tvgtool");
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  app.footer("Any subcommand also takes --config FILE with key=value lines (e.g. step=182);\n"
             "flags given on the command line override the file.");

  tvg::RunConfig cfg;
  std::string format = "canonical";
  std::string event_time = "citing";
  std::string cumulative = "true";
  bool no_self_citations = false;
  std::size_t window = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
  };
  auto add_input = [&](CLI::App* sub, const char* help) {
    sub->add_option("--input", cfg.inputs, help)
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  };
  auto add_corpus = [&](CLI::App* sub) {
    add_input(sub, "Corpus file (canonical) or citations then metadata file (snap)");
    sub->add_option("--format", format, "Corpus format")
        ->check(CLI::IsMember({"canonical", "snap"}))
        ->capture_default_str();
  };
  auto add_network = [&](CLI::App* sub) {
    add_input(sub, "Serialized TVG produced by ingest");
    sub->add_option("--threshold", cfg.threshold, "Keep edges with strength > N (0: no filter)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--step", cfg.step, "Snapshot step in days")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--cumulative", cumulative, "Cumulative snapshot windows")
        ->check(CLI::IsMember({"true", "false"}))
        ->capture_default_str();
    sub->add_option("--resolution", cfg.resolution, "Modularity resolution")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_flag("--weighted", cfg.weighted, "Use edge strengths in modularity");
    sub->add_option("--threads", cfg.threads, "Worker threads for window evaluation")
        ->capture_default_str();
  };

  auto* ingest = app.add_subcommand("ingest", "Build the interaction network from a corpus");
  add_corpus(ingest);
  ingest->add_option("--event-time", event_time, "Citation event date")
      ->check(CLI::IsMember({"citing", "cited"}))
      ->capture_default_str();
  ingest->add_flag("--no-self-citations", no_self_citations,
                   "Ignore citations between papers sharing an author");
  add_common(ingest);

  auto* stats = app.add_subcommand("stats", "Report corpus counts");
  add_corpus(stats);
  add_common(stats);

  auto* metrics = app.add_subcommand("metrics", "Indicator series over snapshots");
  add_network(metrics);
  add_common(metrics);

  auto* communities = app.add_subcommand("communities", "Track the largest community");
  add_network(communities);
  communities->add_option("--anchor", cfg.anchor, "Window where tracking starts")
      ->capture_default_str();
  communities->add_flag("--frozen", cfg.frozen, "Re-measure the anchor node set only");
  add_common(communities);
  communities->get_option("--step")->default_val(182);

  auto* gexf = app.add_subcommand("export-gexf", "Write GEXF snapshots");
  add_network(gexf);
  auto* window_opt = gexf->add_option("--window", window, "Snapshot index (default: all)");
  add_common(gexf);

  try {
    auto args = expand_config(argc, argv);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const tvg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }

  cfg.format = format == "snap" ? tvg::InputFormat::snap : tvg::InputFormat::canonical;
  cfg.cumulative = cumulative == "true";
  cfg.policy.count_self_citations = !no_self_citations;
  cfg.policy.weight_event_time = event_time == "cited"
                                     ? tvg::BuildPolicy::EventTime::cited_date
                                     : tvg::BuildPolicy::EventTime::citing_date;
  if (window_opt->count() > 0) cfg.window = window;

  try {
    if (*ingest || *stats) {
      auto s = *ingest ? tvg::cmd_ingest(cfg) : tvg::cmd_stats(cfg);
      std::cout << "papers=" << s.papers << " authors=" << s.authors
                << " citations=" << s.citations_total << " resolved=" << s.citations_resolved
                << " dangling=" << s.dangling << " unlinked=" << s.unlinked << '\n';
    } else if (*metrics) {
      auto rows = tvg::cmd_metrics(cfg);
      std::cout << rows.size() << " windows written to " << (cfg.out_dir / "metrics.csv").string()
                << '\n';
    } else if (*communities) {
      auto rows = tvg::cmd_communities(cfg);
      std::cout << rows.size() << " tracked windows written to " << cfg.out_dir.string() << '\n';
    } else if (*gexf) {
      auto files = tvg::cmd_export_gexf(cfg);
      for (const auto& f : files) std::cout << f.string() << '\n';
    }
  } catch (const tvg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
