// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#include "simis/clutter.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "clutter_internal.hpp"
#include "simis/error.hpp"

namespace simis {

std::string to_string(const VertexId& v) {
  std::string out = std::to_string(v.base);
  if (v.copy != 1) out += "^" + std::to_string(v.copy);
  return out;
}

std::vector<std::size_t> members(VertexSet set) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(cardinality(set)));
  while (set != 0) {
    out.push_back(static_cast<std::size_t>(__builtin_ctzll(set)));
    set &= set - 1;
  }
  return out;
}

bool subset_order(VertexSet lhs, VertexSet rhs) {
  while (lhs != 0 && rhs != 0) {
    const int l = __builtin_ctzll(lhs);
    const int r = __builtin_ctzll(rhs);
    if (l != r) return l < r;
    lhs &= lhs - 1;
    rhs &= rhs - 1;
  }
  return lhs == 0 && rhs != 0;
}

void canonicalize(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), subset_order);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    const int ca = cardinality(a), cb = cardinality(b);
    return ca != cb ? ca < cb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [s](VertexSet k) { return (k & ~s) == 0; });
    if (!covered) kept.push_back(s);
  }
  canonicalize(kept);
  return kept;
}

namespace detail {

std::vector<VertexSet> transversals(const std::vector<VertexSet>& edges) {
  if (edges.empty()) return {};
  std::vector<VertexSet> order = edges;
  std::sort(order.begin(), order.end(),
            [](VertexSet a, VertexSet b) { return cardinality(a) < cardinality(b); });
  std::vector<VertexSet> current{0};
  std::vector<VertexSet> next;
  for (VertexSet e : order) {
    next.clear();
    for (VertexSet t : current) {
      if ((t & e) != 0) {
        next.push_back(t);
        continue;
      }
      for (VertexSet rest = e; rest != 0; rest &= rest - 1) {
        next.push_back(t | (rest & -rest));
      }
    }
    current = minimal_sets(std::move(next));
    next = {};
  }
  return current;
}

std::size_t covering_number(const std::vector<VertexSet>& edges) {
  const auto covers = transversals(edges);
  std::size_t best = covers.empty() ? 0 : kMaxVertices + 1;
  for (VertexSet c : covers) best = std::min<std::size_t>(best, cardinality(c));
  return best;
}

std::vector<VertexSet> edges_within(const std::vector<VertexSet>& edges, VertexSet s) {
  std::vector<VertexSet> out;
  for (VertexSet e : edges) {
    if ((e & ~s) == 0) out.push_back(e);
  }
  return out;
}

}  // namespace detail

namespace {

bool is_antichain(const std::vector<VertexSet>& edges, VertexSet* inner, VertexSet* outer) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i != j && (edges[i] & ~edges[j]) == 0) {
        *inner = edges[i];
        *outer = edges[j];
        return false;
      }
    }
  }
  return true;
}

std::string describe(const std::vector<VertexId>& vertices, VertexSet set) {
  std::string out = "{";
  bool first = true;
  for (std::size_t p : members(set)) {
    if (!first) out += ",";
    first = false;
    out += to_string(vertices[p]);
  }
  return out + "}";
}

// Maps the bits of `set` (positions in the parent) to positions within `kept`.
VertexSet compress(VertexSet set, VertexSet kept) {
  VertexSet out = 0;
  std::size_t next = 0;
  for (VertexSet rest = kept; rest != 0; rest &= rest - 1) {
    if (set & (rest & -rest)) out |= singleton(next);
    ++next;
  }
  return out;
}

}  // namespace

Clutter Clutter::from_masks(std::vector<VertexId> sorted_vertices, std::vector<VertexSet> edges) {
  if (sorted_vertices.empty()) {
    throw Error(ErrorKind::InvalidArgument, "a clutter needs at least one vertex");
  }
  if (sorted_vertices.size() > kMaxVertices) {
    throw Error(ErrorKind::InstanceTooLarge,
                "clutters are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  for (std::size_t i = 1; i < sorted_vertices.size(); ++i) {
    if (!(sorted_vertices[i - 1] < sorted_vertices[i])) {
      throw Error(ErrorKind::InvalidArgument,
                  "vertex list must be strictly increasing at " + to_string(sorted_vertices[i]));
    }
  }
  const VertexSet all = full_set(sorted_vertices.size());
  for (VertexSet e : edges) {
    if (e == 0) throw Error(ErrorKind::EmptyEdge, "edges must be nonempty");
    if ((e & ~all) != 0) throw Error(ErrorKind::UnknownVertex, "edge references a missing vertex");
  }
  canonicalize(edges);
  VertexSet inner = 0, outer = 0;
  if (!is_antichain(edges, &inner, &outer)) {
    throw Error(ErrorKind::AntichainViolation, "edge " + describe(sorted_vertices, inner) +
                                                   " is contained in edge " +
                                                   describe(sorted_vertices, outer));
  }
  Clutter c;
  c.vertices_ = std::move(sorted_vertices);
  c.edges_ = std::move(edges);
  return c;
}

Clutter::Clutter(std::vector<VertexId> vertices, std::vector<std::vector<VertexId>> edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw Error(ErrorKind::InvalidArgument, "duplicate vertex");
  }
  std::vector<VertexSet> masks;
  masks.reserve(edges.size());
  for (const auto& edge : edges) {
    VertexSet m = 0;
    for (const VertexId& v : edge) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
      if (it == vertices.end() || *it != v) {
        throw Error(ErrorKind::UnknownVertex, "edge references vertex " + to_string(v));
      }
      if (vertices.size() <= kMaxVertices) m |= singleton(static_cast<std::size_t>(it - vertices.begin()));
    }
    masks.push_back(m);
  }
  *this = from_masks(std::move(vertices), std::move(masks));
}

Clutter Clutter::make(std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& edges) {
  std::vector<VertexId> vertices;
  for (std::size_t i = 1; i <= vertex_count; ++i) vertices.push_back({static_cast<std::uint32_t>(i), 1});
  std::vector<std::vector<VertexId>> named;
  for (const auto& e : edges) {
    std::vector<VertexId> ids;
    for (std::size_t v : e) {
      if (v < 1 || v > vertex_count) {
        throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " out of range");
      }
      ids.push_back({static_cast<std::uint32_t>(v), 1});
    }
    named.push_back(std::move(ids));
  }
  return Clutter(std::move(vertices), std::move(named));
}

std::optional<std::size_t> Clutter::position(const VertexId& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Clutter::require_position(const VertexId& v) const {
  auto p = position(v);
  if (!p) throw Error(ErrorKind::UnknownVertex, "no vertex " + to_string(v));
  return *p;
}

VertexSet Clutter::mask_of(std::span<const VertexId> vs) const {
  VertexSet m = 0;
  for (const VertexId& v : vs) m |= singleton(require_position(v));
  return m;
}

bool Clutter::is_original() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const VertexId& v) { return v.copy == 1; });
}

std::vector<std::vector<std::size_t>> minimalize_edges(
    const std::vector<std::vector<std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> sorted;
  for (auto e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    sorted.push_back(std::move(e));
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::vector<std::size_t>> out;
  for (const auto& e : sorted) {
    const bool has_proper_subset = std::any_of(sorted.begin(), sorted.end(), [&](const auto& f) {
      return f.size() < e.size() && std::includes(e.begin(), e.end(), f.begin(), f.end());
    });
    if (!has_proper_subset) out.push_back(e);
  }
  return out;
}

Clutter induced_subclutter(const Clutter& c, VertexSet s) {
  if ((s & ~c.all()) != 0) throw Error(ErrorKind::UnknownVertex, "subset exceeds the vertex set");
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "induced subclutter on the empty set");
  std::vector<VertexId> vertices;
  for (std::size_t p : members(s)) vertices.push_back(c.vertices()[p]);
  std::vector<VertexSet> edges;
  for (VertexSet e : detail::edges_within(c.edges(), s)) edges.push_back(compress(e, s));
  return Clutter::from_masks(std::move(vertices), std::move(edges));
}

Clutter induced_subclutter(const Clutter& c, std::span<const VertexId> s) {
  return induced_subclutter(c, c.mask_of(s));
}

Clutter delete_vertex(const Clutter& c, const VertexId& v) {
  const std::size_t p = c.require_position(v);
  return induced_subclutter(c, c.all() & ~singleton(p));
}

Clutter delete_edge(const Clutter& c, VertexSet e) {
  std::vector<VertexSet> edges;
  for (VertexSet f : c.edges()) {
    if (f != e) edges.push_back(f);
  }
  if (edges.size() == c.edge_count()) throw Error(ErrorKind::InvalidArgument, "no such edge");
  return Clutter::from_masks(c.vertices(), std::move(edges));
}

Clutter duplicate_vertex(const Clutter& c, const VertexId& v) {
  const std::size_t p = c.require_position(v);
  std::uint32_t next_copy = 1;
  for (const VertexId& w : c.vertices()) {
    if (w.base == v.base) next_copy = std::max(next_copy, w.copy + 1);
  }
  const VertexId fresh{v.base, next_copy};
  std::vector<VertexId> vertices = c.vertices();
  vertices.push_back(fresh);
  std::vector<std::vector<VertexId>> edges;
  for (VertexSet e : c.edges()) {
    std::vector<VertexId> named;
    for (std::size_t q : members(e)) named.push_back(c.vertices()[q]);
    edges.push_back(named);
    if (e & singleton(p)) {
      std::replace(named.begin(), named.end(), v, fresh);
      edges.push_back(std::move(named));
    }
  }
  try {
    return Clutter(std::move(vertices), std::move(edges));
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::AntichainViolation) {
      throw Error(ErrorKind::InternalConsistency, std::string("duplication broke the antichain: ") + err.what());
    }
    throw;
  }
}

Clutter parallelization(const Clutter& c, const ParallelizationVector& a) {
  if (a.entries.size() != c.vertex_count()) {
    throw Error(ErrorKind::DimensionMismatch,
                "parallelization vector has length " + std::to_string(a.entries.size()) +
                    ", clutter has " + std::to_string(c.vertex_count()) + " vertices");
  }
  if (!c.is_original()) {
    throw Error(ErrorKind::InvalidArgument, "parallelization expects a clutter without duplicates");
  }
  std::int64_t total = 0;
  for (std::int64_t x : a.entries) {
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "negative parallelization entry");
    total += x;
  }
  if (total == 0) throw Error(ErrorKind::InvalidArgument, "the zero vector deletes every vertex");
  if (total > static_cast<std::int64_t>(kMaxVertices)) {
    throw Error(ErrorKind::InstanceTooLarge, "parallelization has more than 64 vertices");
  }

  // Vertex (base_i, j) lands at position offset[i] + j - 1 since the result
  // is sorted by (base, copy) and the source is sorted by base.
  std::vector<VertexId> vertices;
  std::vector<std::size_t> offset(c.vertex_count(), 0);
  for (std::size_t i = 0; i < c.vertex_count(); ++i) {
    offset[i] = vertices.size();
    for (std::int64_t j = 1; j <= a.entries[i]; ++j) {
      vertices.push_back({c.vertices()[i].base, static_cast<std::uint32_t>(j)});
    }
  }
  std::vector<VertexSet> edges;
  for (VertexSet e : c.edges()) {
    const auto pos = members(e);
    if (std::any_of(pos.begin(), pos.end(), [&](std::size_t p) { return a.entries[p] == 0; })) {
      continue;
    }
    // Odometer over the copy choice for each vertex of the edge.
    std::vector<std::int64_t> choice(pos.size(), 0);
    while (true) {
      VertexSet m = 0;
      for (std::size_t k = 0; k < pos.size(); ++k) {
        m |= singleton(offset[pos[k]] + static_cast<std::size_t>(choice[k]));
      }
      edges.push_back(m);
      std::size_t k = 0;
      while (k < pos.size() && ++choice[k] == a.entries[pos[k]]) choice[k++] = 0;
      if (k == pos.size()) break;
    }
  }
  return Clutter::from_masks(std::move(vertices), std::move(edges));
}

std::vector<VertexSet> minimal_vertex_covers(const Clutter& c) {
  return detail::transversals(c.edges());
}

Clutter blocker(const Clutter& c) {
  return Clutter::from_masks(c.vertices(), minimal_vertex_covers(c));
}

std::size_t covering_number(const Clutter& c) { return detail::covering_number(c.edges()); }

std::size_t stability_number(const Clutter& c) { return c.vertex_count() - covering_number(c); }

namespace {

class MatchingSearch {
 public:
  explicit MatchingSearch(const std::vector<VertexSet>& edges) : edges_(edges) {}

  int best(VertexSet blocked) {
    auto it = memo_.find(blocked);
    if (it != memo_.end()) return it->second;
    // Lowest vertex that some still-available edge touches.
    VertexSet reachable = 0;
    for (VertexSet e : edges_) {
      if ((e & blocked) == 0) reachable |= e;
    }
    int result = 0;
    if (reachable != 0) {
      const VertexSet v = reachable & -reachable;
      result = best(blocked | v);
      for (VertexSet e : edges_) {
        if ((e & v) != 0 && (e & blocked) == 0) result = std::max(result, 1 + best(blocked | e));
      }
    }
    memo_.emplace(blocked, result);
    return result;
  }

 private:
  const std::vector<VertexSet>& edges_;
  std::unordered_map<VertexSet, int> memo_;
};

}  // namespace

std::size_t matching_number(const Clutter& c) {
  MatchingSearch search(c.edges());
  return static_cast<std::size_t>(search.best(0));
}

bool has_konig(const Clutter& c) { return matching_number(c) == covering_number(c); }

bool is_connected(const Clutter& c) {
  const std::size_t n = c.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (VertexSet e : c.edges()) {
    const auto pos = members(e);
    for (std::size_t k = 1; k < pos.size(); ++k) {
      const std::size_t a = find(pos[0]), b = find(pos[k]);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components == 1;
}

bool is_vertex_critical(const Clutter& c) {
  const std::size_t alpha = covering_number(c);
  for (std::size_t p = 0; p < c.vertex_count(); ++p) {
    const auto rest = detail::edges_within(c.edges(), c.all() & ~singleton(p));
    if (detail::covering_number(rest) >= alpha) return false;
  }
  return true;
}

bool is_edge_critical(const Clutter& c) {
  const std::size_t alpha = covering_number(c);
  for (std::size_t i = 0; i < c.edge_count(); ++i) {
    std::vector<VertexSet> rest = c.edges();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (detail::covering_number(rest) >= alpha) return false;
  }
  return true;
}

std::vector<std::uint8_t> induced_covering_numbers(const Clutter& c) {
  const std::size_t n = c.vertex_count();
  if (n > kMaxDecomposableSearch) {
    throw Error(ErrorKind::InstanceTooLarge,
                "exhaustive subset search is limited to " +
                    std::to_string(kMaxDecomposableSearch) + " vertices");
  }
  const std::size_t size = std::size_t{1} << n;
  // contains_edge[S]: some edge lies inside S (superset closure of the edges).
  std::vector<std::uint8_t> contains_edge(size, 0);
  for (VertexSet e : c.edges()) contains_edge[e] = 1;
  for (std::size_t bit = 0; bit < n; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t s = 0; s < size; ++s) {
      if ((s & b) && contains_edge[s ^ b]) contains_edge[s] = 1;
    }
  }
  // stable[S]: the largest stable subset of S.
  std::vector<std::uint8_t> stable(size, 0);
  for (std::size_t s = 1; s < size; ++s) {
    if (!contains_edge[s]) {
      stable[s] = static_cast<std::uint8_t>(__builtin_popcountll(s));
      continue;
    }
    std::uint8_t best = 0;
    for (std::size_t rest = s; rest != 0; rest &= rest - 1) {
      best = std::max(best, stable[s & ~(rest & (~rest + 1))]);
    }
    stable[s] = best;
  }
  for (std::size_t s = 0; s < size; ++s) {
    stable[s] = static_cast<std::uint8_t>(__builtin_popcountll(s) - stable[s]);
  }
  return stable;
}

std::optional<Partition> is_decomposable(const Clutter& c) {
  const std::size_t n = c.vertex_count();
  if (n > kMaxDecomposableSearch) {
    throw Error(ErrorKind::InstanceTooLarge,
                "exhaustive partition search is limited to " +
                    std::to_string(kMaxDecomposableSearch) + " vertices");
  }
  if (n < 2) return std::nullopt;
  const auto alpha = induced_covering_numbers(c);
  const VertexSet all = c.all();
  for (VertexSet s = 1; s < all; s += 2) {
    if (alpha[s] + alpha[all ^ s] == alpha[all]) return Partition{s, all ^ s};
  }
  return std::nullopt;
}

Clutter cone_vertex_extension(const Clutter& c, const VertexId& fresh,
                              const std::vector<std::vector<VertexId>>& new_edges) {
  if (c.position(fresh)) {
    throw Error(ErrorKind::InvalidArgument, "vertex " + to_string(fresh) + " already exists");
  }
  std::vector<VertexId> vertices = c.vertices();
  vertices.push_back(fresh);
  std::vector<std::vector<VertexId>> edges;
  for (VertexSet e : c.edges()) {
    std::vector<VertexId> named;
    for (std::size_t p : members(e)) named.push_back(c.vertices()[p]);
    edges.push_back(std::move(named));
  }
  for (const auto& e : new_edges) {
    if (std::find(e.begin(), e.end(), fresh) == e.end()) {
      throw Error(ErrorKind::InvalidArgument, "every new edge must contain the new vertex");
    }
    edges.push_back(e);
  }
  return Clutter(std::move(vertices), std::move(edges));
}

}  // namespace simis
