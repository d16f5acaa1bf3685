#include "dyncc/stats.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>

#include "dyncc/errors.hpp"
#include "dyncc/sssp.hpp"

namespace dyncc {

std::map<Distance, std::uint64_t> distance_distribution(const DynamicGraph& g,
                                                        std::size_t samples, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> sources(n);
  std::iota(sources.begin(), sources.end(), VertexId{0});
  if (samples < n) {
    std::mt19937_64 rng(seed);
    std::shuffle(sources.begin(), sources.end(), rng);
    sources.resize(samples);
    std::sort(sources.begin(), sources.end());
  }
  std::map<Distance, std::uint64_t> histogram;
  BfsWorkspace ws;
  for (VertexId s : sources) {
    breadth_first(g, s, SsspOptions{}, ws, [&](VertexId, Distance d) { ++histogram[d]; });
  }
  return histogram;
}

void write_stats(const StatsBundle& bundle, std::ostream& out) {
  out << "section,key,value\n";
  for (const auto& [d, count] : bundle.distance_distribution) {
    out << "distance," << d << ',' << count << '\n';
  }
  if (bundle.case_distribution) {
    for (std::size_t c = 0; c < kLevelCaseCount; ++c) {
      out << "case," << to_string(static_cast<LevelCase>(c)) << ',' << (*bundle.case_distribution)[c]
          << '\n';
    }
  }
  const auto precision = out.precision();
  out << std::setprecision(9);
  for (std::size_t i = 0; i < bundle.update_times.size(); ++i) {
    out << "update_seconds," << i << ',' << bundle.update_times[i] << '\n';
  }
  out.precision(precision);
}

void write_stats(const StatsBundle& bundle, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_stats(bundle, out);
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace dyncc
