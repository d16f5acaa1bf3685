#include "dyncc/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "dyncc/errors.hpp"

namespace dyncc {

VertexId IdMapper::map(std::uint64_t external) {
  const auto [it, inserted] = dense_.emplace(external, static_cast<VertexId>(originals_.size()));
  if (inserted) originals_.push_back(external);
  return it->second;
}

std::optional<VertexId> IdMapper::find(std::uint64_t external) const {
  const auto it = dense_.find(external);
  if (it == dense_.end()) return std::nullopt;
  return it->second;
}

void IdMapper::write(std::ostream& out) const {
  out << "dense,original\n";
  for (std::size_t i = 0; i < originals_.size(); ++i) out << i << ',' << originals_[i] << '\n';
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t begin = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > begin) out.push_back(line.substr(begin, i - begin));
  }
  return out;
}

template <class T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<VertexId> parse_vertex(std::string_view text, IdMapper* mapper) {
  const auto raw = parse_number<std::uint64_t>(text);
  if (!raw) return std::nullopt;
  if (mapper) return mapper->map(*raw);
  if (*raw >= kNoVertex) return std::nullopt;
  return static_cast<VertexId>(*raw);
}

bool skippable(const std::vector<std::string_view>& fields) {
  return fields.empty() || fields.front().starts_with('#') || fields.front().starts_with('%');
}

}  // namespace

EdgeListParse parse_edge_list(std::istream& in, IdMapper* mapper) {
  EdgeListParse result;
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto fields = split_fields(line);
    if (skippable(fields)) continue;
    if (fields.size() < 2) throw MalformedLineError(line_no, line);
    const auto a = parse_vertex(fields[0], mapper);
    const auto b = parse_vertex(fields[1], mapper);
    if (!a || !b) throw MalformedLineError(line_no, line);
    n = std::max<std::size_t>(n, std::max(*a, *b) + std::size_t{1});
    if (*a == *b) {
      ++result.self_loop_lines;
      continue;
    }
    edges.push_back(Edge{*a, *b}.normalized());
  }
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  result.duplicate_lines = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());
  if (mapper) n = std::max(n, mapper->originals().size());
  result.graph = DynamicGraph::from_edges(n, edges);
  return result;
}

std::vector<EdgeEvent> parse_event_stream(std::istream& in, IdMapper* mapper) {
  std::vector<EdgeEvent> events;
  std::optional<std::int64_t> last_time;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto fields = split_fields(line);
    if (skippable(fields)) continue;
    if (fields.size() < 3 || fields.size() > 4) throw MalformedLineError(line_no, line);
    EdgeEvent event;
    if (fields[0] == "+") {
      event.op = EventOp::Insert;
    } else if (fields[0] == "-") {
      event.op = EventOp::Delete;
    } else {
      throw MalformedLineError(line_no, line);
    }
    const auto a = parse_vertex(fields[1], mapper);
    const auto b = parse_vertex(fields[2], mapper);
    if (!a || !b || *a == *b) throw MalformedLineError(line_no, line);
    event.u = *a;
    event.v = *b;
    if (fields.size() == 4) {
      const auto t = parse_number<std::int64_t>(fields[3]);
      if (!t) throw MalformedLineError(line_no, line);
      if (last_time && *t < *last_time) throw DecreasingTimestampError(line_no, *last_time, *t);
      last_time = *t;
      event.timestamp = *t;
    }
    events.push_back(event);
  }
  return events;
}

void write_edge_list(const DynamicGraph& g, std::ostream& out) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_event_stream(std::span<const EdgeEvent> events, std::ostream& out) {
  for (const EdgeEvent& e : events) {
    out << (e.op == EventOp::Insert ? '+' : '-') << ' ' << e.u << ' ' << e.v;
    if (e.timestamp) out << ' ' << *e.timestamp;
    out << '\n';
  }
}

void write_centrality_csv(const CentralityState& state, std::ostream& out) {
  out << "vertex,far,closeness\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(12);
  for (std::size_t v = 0; v < state.size(); ++v) {
    out << v << ',' << state.far[v] << ',' << state.closeness(static_cast<VertexId>(v)) << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

void write_centrality_csv(const CentralityState& state, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_centrality_csv(state, out);
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

EdgeListParse read_edge_list_file(const std::filesystem::path& path, IdMapper* mapper) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return parse_edge_list(in, mapper);
}

std::vector<EdgeEvent> read_event_file(const std::filesystem::path& path, IdMapper* mapper) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return parse_event_stream(in, mapper);
}

}  // namespace dyncc
