#include "dyncc/engine.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "dyncc/errors.hpp"
#include "dyncc/sssp.hpp"

namespace dyncc {

EngineConfig EngineConfig::named(std::string_view name) {
  EngineConfig c;
  c.use_bcd = c.use_levels = c.use_identical = c.use_hybrid = false;
  if (name == "cc") return c;
  if (name == "l") {
    c.use_levels = true;
    return c;
  }
  if (name == "b" || name == "bl" || name == "bli" || name == "blih") {
    c.use_bcd = true;
    c.use_levels = name.size() >= 2;
    c.use_identical = name.size() >= 3;
    c.use_hybrid = name.size() >= 4;
    return c;
  }
  throw std::invalid_argument("unknown configuration '" + std::string(name) + "'");
}

std::string EngineConfig::name() const {
  if (!use_bcd) return use_levels ? "l" : "cc";
  std::string s = "b";
  if (use_levels) s += 'l';
  if (use_identical) s += 'i';
  if (use_hybrid) s += 'h';
  return s;
}

Engine::Engine(DynamicGraph graph, EngineConfig config)
    : graph_(std::move(graph)), config_(config) {
  state_ = closeness_all(graph_, config_.sssp(), config_.threads);
  if (config_.use_bcd) partition_ = decompose(graph_);
  if (config_.use_identical) {
    type1_ = build_classes(graph_, IdentityKind::TypeI);
    type2_ = build_classes(graph_, IdentityKind::TypeII);
  }
}

UpdateReport Engine::insert_edge(VertexId u, VertexId v) { return update(EventOp::Insert, u, v); }

UpdateReport Engine::delete_edge(VertexId u, VertexId v) { return update(EventOp::Delete, u, v); }

UpdateReport Engine::apply(const EdgeEvent& event) { return update(event.op, event.u, event.v); }

std::vector<UpdateReport> Engine::process_stream(std::span<const EdgeEvent> events,
                                                 const Observer& observer) {
  std::vector<UpdateReport> reports;
  reports.reserve(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    try {
      reports.push_back(apply(events[i]));
    } catch (const GraphError& e) {
      throw StreamError(i, e.what());
    }
    if (observer) observer(i, reports.back());
  }
  return reports;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// Weighted farness of one source on the scope subgraph: every reached w
// stands for R[w] vertices at distance d plus RF[w] beyond it. The source
// adds its own represented farness.
std::uint64_t scoped_farness(const CsrGraph& g, VertexId source, const SsspOptions& options,
                             std::span<const std::uint64_t> count,
                             std::span<const std::uint64_t> farness, BfsWorkspace& ws) {
  std::uint64_t far = farness[source];
  breadth_first(g, source, options, ws, [&](VertexId w, Distance d) {
    far += static_cast<std::uint64_t>(d) * count[w] + farness[w];
  });
  return far;
}

}  // namespace

UpdateReport Engine::update(EventOp op, VertexId u, VertexId v) {
  const bool inserting = op == EventOp::Insert;
  if (inserting) {
    graph_.check_insertable(u, v);
  } else if (!graph_.has_edge(u, v)) {
    throw MissingEdgeError(u, v);
  }

  const auto start = Clock::now();
  UpdateReport report;
  report.op = op;
  report.u = u;
  report.v = v;

  // Scope: the biconnected component holding uv after an insertion, or the
  // one that held it before a deletion.
  ComponentScope scope;
  if (inserting) {
    graph_.add_edge(u, v);
    state_.far.resize(graph_.vertex_count(), 0);
    if (config_.use_bcd) {
      const InsertOutcome outcome = maintain_on_insert(graph_, partition_, u, v);
      report.partition_rebuilt = outcome.rebuilt;
      scope = scope_of(partition_, outcome.cid);
    }
  } else {
    if (config_.use_bcd) scope = deletion_scope(partition_, u, v);
    graph_.remove_edge(u, v);
    if (config_.use_bcd) {
      maintain_on_delete(graph_, partition_, u, v);
      report.partition_rebuilt = true;
    }
  }
  if (config_.use_identical) {
    maintain_on_edge_change(type1_, graph_, u, v);
    maintain_on_edge_change(type2_, graph_, u, v);
  }

  const std::size_t n = graph_.vertex_count();
  RepInfo reps;
  if (config_.use_bcd) {
    reps = build_representatives(graph_, scope);
  } else {
    scope.vertices.resize(n);
    std::iota(scope.vertices.begin(), scope.vertices.end(), VertexId{0});
    scope.edges = graph_.edges();
  }

  // Local numbering of the scope.
  const std::size_t k = scope.vertices.size();
  local_of_.resize(n, kNoVertex);
  for (std::size_t i = 0; i < k; ++i) local_of_[scope.vertices[i]] = static_cast<VertexId>(i);
  std::vector<std::uint64_t> count(k, 1);
  std::vector<std::uint64_t> farness(k, 0);
  if (config_.use_bcd) {
    for (std::size_t i = 0; i < k; ++i) {
      count[i] = reps.represented_count[scope.vertices[i]];
      farness[i] = reps.represented_farness[scope.vertices[i]];
    }
  }
  const Edge changed = Edge{u, v}.normalized();
  std::vector<Edge> local_edges;
  local_edges.reserve(scope.edges.size() + 1);
  for (const Edge& e : scope.edges) {
    if (e == changed) continue;
    local_edges.push_back({local_of_[e.u], local_of_[e.v]});
  }
  const VertexId lu = local_of_[u];
  const VertexId lv = local_of_[v];
  const CsrGraph without = CsrGraph::from_edges(k, local_edges);
  const SsspOptions sssp = config_.sssp();

  // Level filter on the scope graph without uv: before an insertion, after a
  // deletion. The same pass tells whether uv joins or splits connectivity.
  const bool need_levels = config_.use_levels || config_.use_bcd;
  DistanceArray du;
  DistanceArray dv;
  std::vector<VertexId> survivors;
  if (need_levels) {
    BfsWorkspace ws;
    breadth_first(without, lu, sssp, ws);
    du = ws.take_distances();
    breadth_first(without, lv, sssp, ws);
    dv = ws.take_distances();
  }
  for (VertexId i = 0; i < k; ++i) {
    if (need_levels) {
      const LevelCase c = classify_source(du[i], dv[i]);
      ++report.level_cases[static_cast<std::size_t>(c)];
      if (config_.use_levels && !requires_update(c)) continue;
    }
    survivors.push_back(i);
  }
  report.sources_total = k;
  report.sources_skipped_level = k - survivors.size();

  // One traversal per identical class among the survivors: closed
  // neighborhoods first, then open ones. alias[j] points at the local source
  // whose farness survivor j copies.
  std::vector<VertexId> sources;
  std::vector<std::pair<VertexId, VertexId>> aliases;  // (copy, from)
  if (config_.use_identical && survivors.size() > 1) {
    std::vector<VertexId> stage = survivors;
    for (const IdenticalClasses* classes : {&type2_, &type1_}) {
      std::map<ClassId, VertexId> first;  // class -> smallest global member
      for (VertexId i : stage) {
        const VertexId g = scope.vertices[i];
        auto [it, inserted] = first.emplace(classes->class_of(g), g);
        if (!inserted && g < it->second) it->second = g;
      }
      std::vector<VertexId> next;
      for (VertexId i : stage) {
        const VertexId rep = first.at(classes->class_of(scope.vertices[i]));
        if (rep == scope.vertices[i]) {
          next.push_back(i);
        } else {
          aliases.emplace_back(i, local_of_[rep]);
        }
      }
      stage = std::move(next);
    }
    sources = std::move(stage);
  } else {
    sources = survivors;
  }
  report.sources_skipped_identical = survivors.size() - sources.size();
  report.sssp_count = sources.size();
  report.filter_seconds = seconds_since(start);
  const auto update_start = Clock::now();

  // Update phase on the scope graph as it is after the event.
  std::vector<std::uint64_t> old_far(k);
  for (std::size_t i = 0; i < k; ++i) old_far[i] = state_.far[scope.vertices[i]];
  if (!sources.empty()) {
    CsrGraph with_edge;
    if (inserting) {
      local_edges.push_back({lu, lv});
      with_edge = CsrGraph::from_edges(k, local_edges);
    }
    const CsrGraph& after = inserting ? with_edge : without;
    std::vector<std::uint64_t> result(sources.size());
    const unsigned threads = static_cast<unsigned>(
        std::max<std::size_t>(1, std::min<std::size_t>(config_.threads, sources.size())));
    auto work = [&](unsigned worker) {
      BfsWorkspace ws;
      for (std::size_t j = worker; j < sources.size(); j += threads) {
        result[j] = scoped_farness(after, sources[j], sssp, count, farness, ws);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    for (std::size_t j = 0; j < sources.size(); ++j) {
      state_.far[scope.vertices[sources[j]]] = result[j];
    }
    // Aliases were recorded in dependency order (type II before type I), so
    // replay them backwards to resolve chains.
    for (auto it = aliases.rbegin(); it != aliases.rend(); ++it) {
      state_.far[scope.vertices[it->first]] = state_.far[scope.vertices[it->second]];
    }
  }

  // Fix phase: a vertex x hanging off r changes by r's change, plus d(x, r)
  // per vertex that r gained or lost reachability to. The second term is
  // non-zero only when uv joins or splits connected components.
  if (config_.use_bcd) {
    std::uint64_t total = 0;
    std::uint64_t side_u = 0;
    std::uint64_t side_v = 0;
    for (std::size_t i = 0; i < k; ++i) {
      total += count[i];
      if (du[i] != kUnreachable) side_u += count[i];
      if (dv[i] != kUnreachable) side_v += count[i];
    }
    std::vector<std::int64_t> reach_delta(k, 0);
    for (VertexId a : scope.articulation) {
      const VertexId i = local_of_[a];
      const std::uint64_t split = du[i] != kUnreachable ? side_u : side_v;
      const auto diff = static_cast<std::int64_t>(total) - static_cast<std::int64_t>(split);
      reach_delta[i] = inserting ? diff : -diff;
    }
    for (VertexId x = 0; x < n; ++x) {
      const VertexId r = reps.rep[x];
      if (r == kNoVertex || r == x) continue;
      const VertexId i = local_of_[r];
      const auto far_change = static_cast<std::int64_t>(state_.far[r]) -
                              static_cast<std::int64_t>(old_far[i]);
      if (far_change == 0 && reach_delta[i] == 0) continue;
      const std::int64_t fixed = static_cast<std::int64_t>(state_.far[x]) + far_change +
                                 static_cast<std::int64_t>(reps.rep_distance[x]) * reach_delta[i];
      state_.far[x] = static_cast<std::uint64_t>(fixed);
      ++report.fix_count;
    }
  }

  for (VertexId x : scope.vertices) local_of_[x] = kNoVertex;
  report.update_seconds = seconds_since(update_start);
  return report;
}

}  // namespace dyncc
