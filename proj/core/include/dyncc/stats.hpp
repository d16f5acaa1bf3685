#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "dyncc/graph.hpp"
#include "dyncc/level_filter.hpp"

namespace dyncc {

struct StatsBundle {
  /// Ordered (source, target) pairs at each finite distance >= 1.
  std::map<Distance, std::uint64_t> distance_distribution;
  std::optional<LevelCaseCounts> case_distribution;
  /// Seconds per processed event, in event order.
  std::vector<double> update_times;
};

/// Distances from `samples` distinct sources drawn with `seed`; all sources
/// when samples >= n.
std::map<Distance, std::uint64_t> distance_distribution(const DynamicGraph& g,
                                                        std::size_t samples, std::uint64_t seed);

/// Labeled CSV: "section,key,value" rows for each non-empty histogram.
void write_stats(const StatsBundle& bundle, std::ostream& out);
void write_stats(const StatsBundle& bundle, const std::filesystem::path& path);

}  // namespace dyncc
