#include "dyncc/identical.hpp"

#include <algorithm>
#include <numeric>

namespace dyncc {

std::uint64_t IdenticalClasses::hash_of(const DynamicGraph& g, VertexId x) const {
  std::uint64_t h = kind_ == IdentityKind::TypeII ? x : 0;
  for (VertexId w : g.neighbors(x)) h += w;
  return h;
}

bool IdenticalClasses::same_neighborhood(const DynamicGraph& g, VertexId a, VertexId b) const {
  if (a == b) return true;
  const auto na = g.neighbors(a);
  const auto nb = g.neighbors(b);
  if (na.size() != nb.size()) return false;
  if (kind_ == IdentityKind::TypeI) return std::equal(na.begin(), na.end(), nb.begin());

  // Closed neighborhoods: b must be adjacent to a, and N(a) - b == N(b) - a.
  if (!std::binary_search(na.begin(), na.end(), b)) return false;
  auto ia = na.begin();
  auto ib = nb.begin();
  while (true) {
    if (ia != na.end() && *ia == b) ++ia;
    if (ib != nb.end() && *ib == a) ++ib;
    if (ia == na.end() || ib == nb.end()) return ia == na.end() && ib == nb.end();
    if (*ia != *ib) return false;
    ++ia;
    ++ib;
  }
}

ClassId IdenticalClasses::open_class(std::uint64_t hash) {
  ClassId c;
  if (!free_.empty()) {
    c = free_.back();
    free_.pop_back();
    class_hash_[c] = hash;
  } else {
    c = static_cast<ClassId>(members_.size());
    members_.emplace_back();
    class_hash_.push_back(hash);
  }
  buckets_[hash].push_back(c);
  return c;
}

void IdenticalClasses::join(VertexId x, ClassId c) {
  class_of_[x] = c;
  position_[x] = static_cast<std::uint32_t>(members_[c].size());
  members_[c].push_back(x);
}

void IdenticalClasses::detach(VertexId x) {
  const ClassId c = class_of_[x];
  if (c == kDetached) return;
  auto& list = members_[c];
  const VertexId last = list.back();
  list[position_[x]] = last;
  position_[last] = position_[x];
  list.pop_back();
  class_of_[x] = kDetached;
  if (!list.empty()) return;

  auto bucket = buckets_.find(class_hash_[c]);
  std::erase(bucket->second, c);
  if (bucket->second.empty()) buckets_.erase(bucket);
  free_.push_back(c);
}

void IdenticalClasses::place(const DynamicGraph& g, VertexId x) {
  const std::uint64_t h = hash_of(g, x);
  if (const auto bucket = buckets_.find(h); bucket != buckets_.end()) {
    for (ClassId c : bucket->second) {
      if (same_neighborhood(g, members_[c].front(), x)) {
        join(x, c);
        return;
      }
    }
  }
  join(x, open_class(h));
}

std::vector<std::vector<VertexId>> IdenticalClasses::canonical() const {
  std::vector<std::vector<VertexId>> out;
  for (const auto& m : members_) {
    if (m.empty()) continue;
    out.push_back(m);
    std::sort(out.back().begin(), out.back().end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

IdenticalClasses build_classes(const DynamicGraph& g, IdentityKind kind) {
  IdenticalClasses classes;
  classes.kind_ = kind;
  const std::size_t n = g.vertex_count();
  classes.class_of_.assign(n, IdenticalClasses::kDetached);
  classes.position_.assign(n, 0);

  std::vector<std::uint64_t> hash(n);
  for (VertexId x = 0; x < n; ++x) hash[x] = classes.hash_of(g, x);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return hash[a] != hash[b] ? hash[a] < hash[b] : a < b;
  });

  // Each equal-hash run is split into exact classes; collisions are rare.
  for (std::size_t begin = 0; begin < n;) {
    std::size_t end = begin;
    while (end < n && hash[order[end]] == hash[order[begin]]) ++end;
    const std::size_t first_class = classes.members_.size();
    for (std::size_t i = begin; i < end; ++i) {
      const VertexId x = order[i];
      bool placed = false;
      for (std::size_t c = first_class; c < classes.members_.size(); ++c) {
        if (classes.same_neighborhood(g, classes.members_[c].front(), x)) {
          classes.join(x, static_cast<ClassId>(c));
          placed = true;
          break;
        }
      }
      if (!placed) classes.join(x, classes.open_class(hash[x]));
    }
    begin = end;
  }
  return classes;
}

void maintain_on_edge_change(IdenticalClasses& classes, const DynamicGraph& g_after, VertexId u,
                             VertexId v) {
  const std::size_t n = g_after.vertex_count();
  if (classes.class_of_.size() < n) {
    const std::size_t old = classes.class_of_.size();
    classes.class_of_.resize(n, IdenticalClasses::kDetached);
    classes.position_.resize(n, 0);
    // Fresh vertices other than u and v are isolated; place them now.
    for (std::size_t x = old; x < n; ++x) {
      if (x != u && x != v) classes.place(g_after, static_cast<VertexId>(x));
    }
  }
  classes.detach(u);
  classes.detach(v);
  classes.place(g_after, u);
  classes.place(g_after, v);
}

std::map<ClassId, VertexId> class_representatives(const IdenticalClasses& classes,
                                                  std::span<const VertexId> scope) {
  std::map<ClassId, VertexId> reps;
  for (VertexId x : scope) {
    const ClassId c = classes.class_of(x);
    auto [it, inserted] = reps.emplace(c, x);
    if (!inserted && x < it->second) it->second = x;
  }
  return reps;
}

}  // namespace dyncc
