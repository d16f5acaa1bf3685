#include "dyncc/sssp.hpp"

#include "dyncc/errors.hpp"

namespace dyncc {

DistanceArray sssp_distances(const DynamicGraph& g, VertexId s, SsspMode mode, double alpha) {
  if (s >= g.vertex_count()) throw VertexRangeError(s, g.vertex_count());
  BfsWorkspace ws;
  breadth_first(g, s, SsspOptions{mode, alpha}, ws);
  return ws.take_distances();
}

}  // namespace dyncc
