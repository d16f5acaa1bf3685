#include "dyncc/closeness.hpp"

#include <algorithm>
#include <thread>

#include "dyncc/errors.hpp"

namespace dyncc {

std::vector<double> CentralityState::closeness_values() const {
  std::vector<double> out(far.size());
  std::transform(far.begin(), far.end(), out.begin(), closeness_from_farness);
  return out;
}

std::uint64_t farness_from_distances(std::span<const Distance> dist) {
  std::uint64_t sum = 0;
  for (Distance d : dist) {
    if (d != kUnreachable) sum += d;
  }
  return sum;
}

namespace {

template <AdjacencyGraph G>
std::uint64_t farness_from(const G& g, VertexId s, const SsspOptions& options, BfsWorkspace& ws) {
  std::uint64_t far = 0;
  breadth_first(g, s, options, ws, [&far](VertexId, Distance d) { far += d; });
  return far;
}

}  // namespace

CentralityState closeness_all(const DynamicGraph& g, const SsspOptions& options,
                              unsigned threads) {
  const std::size_t n = g.vertex_count();
  CentralityState state;
  state.far.assign(n, 0);
  const CsrGraph csr = CsrGraph::from_graph(g);
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));

  auto work = [&](unsigned worker) {
    BfsWorkspace ws;
    for (std::size_t s = worker; s < n; s += threads) {
      state.far[s] = farness_from(csr, static_cast<VertexId>(s), options, ws);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  return state;
}

VertexCentrality closeness_single(const DynamicGraph& g, VertexId s, const SsspOptions& options) {
  if (s >= g.vertex_count()) throw VertexRangeError(s, g.vertex_count());
  BfsWorkspace ws;
  const std::uint64_t far = farness_from(g, s, options, ws);
  return {far, closeness_from_farness(far)};
}

}  // namespace dyncc
