#include "dyncc/experiment.hpp"

#include <random>

#include "dyncc/bcd.hpp"
#include "dyncc/errors.hpp"

namespace dyncc {

RandomExperiment prepare_random_experiment(const DynamicGraph& g, std::size_t k,
                                           std::uint64_t seed) {
  RandomExperiment exp{g, {}};
  exp.insertions.reserve(k);
  std::mt19937_64 rng(seed);
  const std::size_t n = g.vertex_count();

  while (exp.insertions.size() < k) {
    const BcdPartition pi = decompose(exp.base);
    bool any = false;
    for (ComponentId c = 0; c < pi.component_count() && !any; ++c) {
      any = pi.component_edges(c).size() > 1;
    }
    if (!any) throw InsufficientNonBridgeEdgesError(k, exp.insertions.size());

    while (true) {
      const auto u = static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
      const auto nb = exp.base.neighbors(u);
      if (nb.empty()) continue;
      const VertexId v = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
      if (pi.component_edges(pi.component_of(u, v)).size() == 1) continue;  // bridge
      exp.base.remove_edge(u, v);
      exp.insertions.push_back({EventOp::Insert, u, v, std::nullopt});
      break;
    }
  }
  return exp;
}

}  // namespace dyncc
