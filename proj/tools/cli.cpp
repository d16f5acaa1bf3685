#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dyncc/closeness.hpp"
#include "dyncc/engine.hpp"
#include "dyncc/errors.hpp"
#include "dyncc/experiment.hpp"
#include "dyncc/generators.hpp"
#include "dyncc/io.hpp"
#include "dyncc/level_filter.hpp"
#include "dyncc/oracle.hpp"
#include "dyncc/stats.hpp"

namespace dyncc::cli {
namespace {

using Clock = std::chrono::steady_clock;

// Raised when --verify finds a mismatch.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string path;
  std::string relabel;  // mapping sidecar, empty when ids are dense
};

struct Loaded {
  DynamicGraph graph;
  std::optional<IdMapper> mapper;
};

Loaded load_graph(const GraphInput& in, std::ostream& err) {
  Loaded loaded;
  IdMapper* mapper = nullptr;
  if (!in.relabel.empty()) mapper = &loaded.mapper.emplace();
  auto parsed = [&] {
    try {
      return read_edge_list_file(in.path, mapper);
    } catch (const ParseError& e) {
      throw std::runtime_error(in.path + ": " + e.what());
    }
  }();
  if (parsed.duplicate_lines > 0) {
    err << "warning: " << in.path << ": ignored " << parsed.duplicate_lines
        << " duplicate edge line(s)\n";
  }
  if (parsed.self_loop_lines > 0) {
    err << "warning: " << in.path << ": ignored " << parsed.self_loop_lines
        << " self-loop line(s)\n";
  }
  loaded.graph = std::move(parsed.graph);
  return loaded;
}

void write_mapping(const Loaded& loaded, const std::string& path) {
  if (!loaded.mapper) return;
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  loaded.mapper->write(out);
}

// Writes to `path`, or to `fallback` when the path is empty or "-".
template <class Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  fn(out);
  if (!out) throw IoError("failed writing '" + path + "'");
}

double millis(Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); }

double percentile(std::vector<double> sorted_values, double q) {
  if (sorted_values.empty()) return 0.0;
  std::sort(sorted_values.begin(), sorted_values.end());
  const auto idx = static_cast<std::size_t>(q * static_cast<double>(sorted_values.size() - 1) + 0.5);
  return sorted_values[std::min(idx, sorted_values.size() - 1)];
}

std::uint64_t far_sum(const CentralityState& state) {
  return std::accumulate(state.far.begin(), state.far.end(), std::uint64_t{0});
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
  GraphInput input;
  bool hybrid = false;
  double alpha = 1.0;
  unsigned threads = 1;
  std::string out;
};

int do_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load_graph(a.input, err);
  write_mapping(loaded, a.input.relabel);
  const SsspOptions options{a.hybrid ? SsspMode::Hybrid : SsspMode::TopDown, a.alpha};
  const auto state = closeness_all(loaded.graph, options, a.threads);
  emit(a.out, out, [&](std::ostream& o) { write_centrality_csv(state, o); });
  return kSuccess;
}

// ---------------------------------------------------------------- stream

struct StreamArgs {
  GraphInput input;
  std::string events;
  std::string config = "blih";
  double alpha = 1.0;
  unsigned threads = 1;
  std::string report;
  std::string out;
  bool verify = false;
};

void write_report_header(std::ostream& o) {
  o << "event,op,u,v,timestamp,scope,skipped_level,skipped_identical,sssp,fix,rebuilt,"
       "filter_ms,update_ms\n";
}

void write_report_row(std::ostream& o, std::size_t index, const EdgeEvent& ev,
                      const UpdateReport& r) {
  o << index << ',' << (ev.op == EventOp::Insert ? '+' : '-') << ',' << ev.u << ',' << ev.v
    << ',';
  if (ev.timestamp) o << *ev.timestamp;
  o << ',' << r.sources_total << ',' << r.sources_skipped_level << ','
    << r.sources_skipped_identical << ',' << r.sssp_count << ',' << r.fix_count << ','
    << (r.partition_rebuilt ? 1 : 0) << ',' << r.filter_seconds * 1e3 << ','
    << r.update_seconds * 1e3 << '\n';
}

int do_stream(const StreamArgs& a, std::ostream& out, std::ostream& err) {
  Loaded loaded = load_graph(a.input, err);
  IdMapper* mapper = loaded.mapper ? &*loaded.mapper : nullptr;
  const auto events = [&] {
    try {
      return read_event_file(a.events, mapper);
    } catch (const ParseError& e) {
      throw std::runtime_error(a.events + ": " + e.what());
    }
  }();
  write_mapping(loaded, a.input.relabel);

  EngineConfig config = EngineConfig::named(a.config);
  config.alpha = a.alpha;
  config.threads = a.threads;
  Engine engine(std::move(loaded.graph), config);

  std::ostringstream report;
  write_report_header(report);
  report << std::setprecision(6);
  engine.process_stream(events, [&](std::size_t i, const UpdateReport& r) {
    write_report_row(report, i, events[i], r);
    if (a.verify && engine.centrality() != oracle::oracle_closeness(engine.graph())) {
      throw VerificationFailure("farness differs from recomputation after event " +
                                std::to_string(i));
    }
  });
  if (!a.report.empty()) emit(a.report, out, [&](std::ostream& o) { o << report.str(); });
  emit(a.out, out, [&](std::ostream& o) { write_centrality_csv(engine.centrality(), o); });
  if (a.verify) err << "verified " << events.size() << " event(s)\n";
  return kSuccess;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  GraphInput input;
  std::size_t k = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> configs{"b", "bl", "bli", "blih"};
  double alpha = 1.0;
  unsigned threads = 1;
  std::string out;
};

int do_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load_graph(a.input, err);
  write_mapping(loaded, a.input.relabel);
  const auto exp = prepare_random_experiment(loaded.graph, a.k, a.seed);
  const std::size_t n = loaded.graph.vertex_count();

  std::ostringstream csv;
  csv << "config,n,m,events,mean_ms,p50_ms,p90_ms,p99_ms,max_ms,filter_ms,sssp_mean,sssp_total,"
         "skipped_level,skipped_identical,fix_total,rebuilds,speedup,final_far_sum\n";
  csv << std::fixed << std::setprecision(4);

  // Baseline: one from-scratch pass on the final graph stands for each update.
  const auto t0 = Clock::now();
  const auto scratch = closeness_all(loaded.graph, {}, a.threads);
  const double baseline_ms = millis(Clock::now() - t0);
  csv << "cc," << n << ',' << loaded.graph.edge_count() << ',' << exp.insertions.size() << ','
      << baseline_ms << ',' << baseline_ms << ',' << baseline_ms << ',' << baseline_ms << ','
      << baseline_ms << ",0," << static_cast<double>(n) << ',' << n * exp.insertions.size()
      << ",0,0,0,0," << 1.0 << ',' << far_sum(scratch) << '\n';

  for (const std::string& name : a.configs) {
    EngineConfig config = EngineConfig::named(name);
    config.alpha = a.alpha;
    config.threads = a.threads;
    Engine engine(exp.base, config);
    std::vector<double> times;
    double filter_ms = 0.0;
    std::size_t sssp = 0, skipped_level = 0, skipped_identical = 0, fixes = 0, rebuilds = 0;
    for (const EdgeEvent& ev : exp.insertions) {
      const auto start = Clock::now();
      const UpdateReport r = engine.apply(ev);
      times.push_back(millis(Clock::now() - start));
      filter_ms += r.filter_seconds * 1e3;
      sssp += r.sssp_count;
      skipped_level += r.sources_skipped_level;
      skipped_identical += r.sources_skipped_identical;
      fixes += r.fix_count;
      rebuilds += r.partition_rebuilt ? 1 : 0;
    }
    const double events = static_cast<double>(std::max<std::size_t>(1, times.size()));
    const double mean = std::accumulate(times.begin(), times.end(), 0.0) / events;
    csv << name << ',' << n << ',' << loaded.graph.edge_count() << ',' << times.size() << ','
        << mean << ',' << percentile(times, 0.5) << ',' << percentile(times, 0.9) << ','
        << percentile(times, 0.99) << ',' << percentile(times, 1.0) << ',' << filter_ms / events
        << ',' << static_cast<double>(sssp) / events << ',' << sssp << ',' << skipped_level << ','
        << skipped_identical << ',' << fixes << ',' << rebuilds << ','
        << (mean > 0 ? baseline_ms / mean : 0.0) << ',' << far_sum(engine.centrality()) << '\n';
  }
  emit(a.out, out, [&](std::ostream& o) { o << csv.str(); });
  return kSuccess;
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
  std::string kind;
  GraphInput input;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> edge;
  std::size_t k = 100;
  std::string out;
};

int do_stats(const StatsArgs& a, std::ostream& out, std::ostream& err) {
  Loaded loaded = load_graph(a.input, err);
  write_mapping(loaded, a.input.relabel);
  StatsBundle bundle;
  if (a.kind == "dist") {
    bundle.distance_distribution = distance_distribution(loaded.graph, a.samples, a.seed);
  } else if (!a.edge.empty()) {
    VertexId u = 0;
    VertexId v = 0;
    if (loaded.mapper) {
      const auto mu = loaded.mapper->find(a.edge[0]);
      const auto mv = loaded.mapper->find(a.edge[1]);
      if (!mu || !mv) throw VertexRangeError(kNoVertex, loaded.graph.vertex_count());
      u = *mu;
      v = *mv;
    } else {
      u = static_cast<VertexId>(a.edge[0]);
      v = static_cast<VertexId>(a.edge[1]);
    }
    DynamicGraph& g = loaded.graph;
    if (u >= g.vertex_count() || v >= g.vertex_count()) {
      throw VertexRangeError(std::max(u, v), g.vertex_count());
    }
    // Distances are measured on the graph without uv, whichever way it goes.
    if (g.has_edge(u, v)) g.remove_edge(u, v);
    bundle.case_distribution = case_distribution(g, u, v);
  } else {
    // Cases over the random insertion protocol, each on the graph before it.
    auto exp = prepare_random_experiment(loaded.graph, a.k, a.seed);
    LevelCaseCounts total{};
    for (const EdgeEvent& ev : exp.insertions) {
      const auto counts = case_distribution(exp.base, ev.u, ev.v);
      for (std::size_t c = 0; c < kLevelCaseCount; ++c) total[c] += counts[c];
      exp.base.add_edge(ev.u, ev.v);
    }
    bundle.case_distribution = total;
  }
  emit(a.out, out, [&](std::ostream& o) { write_stats(bundle, o); });
  return kSuccess;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string model = "ba";
  std::size_t n = 1000;
  std::size_t m = 0;
  std::size_t k = 3;
  double triad = 0.5;
  std::uint64_t seed = 1;
  std::string out;
};

int do_generate(const GenerateArgs& a, std::ostream& out) {
  std::mt19937_64 rng(a.seed);
  DynamicGraph g;
  if (a.model == "ba") {
    g = gen::preferential_attachment(a.n, a.k, rng);
  } else if (a.model == "hk") {
    g = gen::clustered_preferential_attachment(a.n, a.k, a.triad, rng);
  } else if (a.model == "gnm") {
    g = gen::gnm(a.n, a.m, rng);
  } else {
    g = gen::connected_gnm(a.n, a.m, rng);
  }
  emit(a.out, out, [&](std::ostream& o) { write_edge_list(g, o); });
  return kSuccess;
}

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("graph", in.path, "Edge list, one 'u v' pair per line")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--relabel", in.relabel,
                  "Map sparse ids to dense ones and write the mapping to this file");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact closeness centrality for graphs under edge insertions and deletions",
               "dyncc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Closeness of every vertex from scratch");
  add_graph_input(c, compute.input);
  c->add_flag("--hybrid", compute.hybrid, "Direction-optimizing traversals");
  c->add_option("--alpha", compute.alpha, "Hybrid switching ratio")->check(CLI::PositiveNumber);
  c->add_option("--threads", compute.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  c->add_option("--out", compute.out, "Output CSV (default: stdout)");

  StreamArgs stream;
  auto* s = app.add_subcommand("stream", "Replay an event file, keeping closeness exact");
  add_graph_input(s, stream.input);
  s->add_option("events", stream.events, "Events: '+ u v [t]' or '- u v [t]' per line")
      ->required()
      ->check(CLI::ExistingFile);
  s->add_option("--config", stream.config, "Filters to enable")
      ->check(CLI::IsMember({"cc", "l", "b", "bl", "bli", "blih"}))
      ->capture_default_str();
  s->add_option("--alpha", stream.alpha, "Hybrid switching ratio")->check(CLI::PositiveNumber);
  s->add_option("--threads", stream.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  s->add_option("--report", stream.report, "Per-event report CSV");
  s->add_option("--out", stream.out, "Final closeness CSV (default: stdout)");
  s->add_flag("--verify", stream.verify, "Recompute from scratch after every event and compare");

  BenchArgs bench;
  auto* b = app.add_subcommand(
      "bench", "Remove random non-bridge edges, re-insert them, and time each configuration");
  add_graph_input(b, bench.input);
  b->add_option("--random-k", bench.k, "Number of edges to remove and re-insert")
      ->capture_default_str();
  b->add_option("--seed", bench.seed, "Sampling seed")->capture_default_str();
  b->add_option("--configs", bench.configs, "Configurations to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"cc", "l", "b", "bl", "bli", "blih"}));
  b->add_option("--alpha", bench.alpha, "Hybrid switching ratio")->check(CLI::PositiveNumber);
  b->add_option("--threads", bench.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  b->add_option("--out", bench.out, "Output CSV (default: stdout)");

  StatsArgs stats;
  auto* st = app.add_subcommand("stats", "Distance or level-difference histograms");
  st->add_option("kind", stats.kind, "dist or cases")
      ->required()
      ->check(CLI::IsMember({"dist", "cases"}));
  add_graph_input(st, stats.input);
  st->add_option("--samples", stats.samples, "Sources sampled for dist")->capture_default_str();
  st->add_option("--seed", stats.seed, "Sampling seed")->capture_default_str();
  st->add_option("--edge", stats.edge, "Edge to classify for cases")->expected(2);
  st->add_option("--random-k", stats.k, "Random insertions for cases when no --edge is given")
      ->capture_default_str();
  st->add_option("--out", stats.out, "Output CSV (default: stdout)");

  GenerateArgs generate;
  auto* gcmd = app.add_subcommand("generate", "Write a synthetic graph");
  gcmd->add_option("model", generate.model, "ba, hk (clustered ba), gnm or connected")
      ->check(CLI::IsMember({"ba", "hk", "gnm", "connected"}));
  gcmd->add_option("--n", generate.n, "Vertices")->capture_default_str();
  gcmd->add_option("--m", generate.m, "Edges (gnm, connected)");
  gcmd->add_option("--k", generate.k, "Edges per new vertex (ba, hk)")->capture_default_str();
  gcmd->add_option("--triad", generate.triad, "Triangle-closing probability (hk)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gcmd->add_option("--seed", generate.seed, "Seed")->capture_default_str();
  gcmd->add_option("--out", generate.out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << "0.1.0\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands()[0]) {
      err << sub->help();
    }
    return kInputError;
  }

  try {
    if (c->parsed()) return do_compute(compute, out, err);
    if (s->parsed()) return do_stream(stream, out, err);
    if (b->parsed()) return do_bench(bench, out, err);
    if (st->parsed()) return do_stats(stats, out, err);
    return do_generate(generate, out);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace dyncc::cli
