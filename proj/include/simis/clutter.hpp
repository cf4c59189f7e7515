// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

// Clutters (antichain hypergraphs) and their exact combinatorics.
//
// Vertex sets are bitmasks over vertex *positions*; a clutter holds at most
// 64 vertices. Positions follow the sorted order of VertexId, so two clutters
// with the same vertices and edges compare equal regardless of how they were
// built.

#ifndef SIMIS_CLUTTER_HPP
#define SIMIS_CLUTTER_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace simis {

/// A vertex x_base^copy. Original vertices have copy == 1; duplicates made by
/// parallelization are numbered 2, 3, ... in creation order.
struct VertexId {
  std::uint32_t base = 0;
  std::uint32_t copy = 1;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string to_string(const VertexId& v);

using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

/// Positions in ascending order.
std::vector<std::size_t> members(VertexSet set);
inline int cardinality(VertexSet set) { return __builtin_popcountll(set); }
inline constexpr VertexSet singleton(std::size_t pos) { return VertexSet{1} << pos; }
inline constexpr VertexSet full_set(std::size_t n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Lexicographic comparison of the sorted member lists; the canonical order
/// for edges, covers and subsets throughout the library.
bool subset_order(VertexSet lhs, VertexSet rhs);

/// Sorts canonically and drops duplicates.
void canonicalize(std::vector<VertexSet>& sets);

/// Keeps only the inclusion-minimal sets, canonically ordered.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets);

class Clutter {
 public:
  /// Vertices 1..vertex_count, edges given as 1-based vertex lists.
  static Clutter make(std::size_t vertex_count,
                      const std::vector<std::vector<std::size_t>>& edges);

  /// Validating constructor: vertices must be unique, edges nonempty,
  /// in range and form an antichain. Duplicate edges are merged.
  Clutter(std::vector<VertexId> vertices, std::vector<std::vector<VertexId>> edges);

  /// Same, with edges as position masks over the (sorted) vertex list.
  static Clutter from_masks(std::vector<VertexId> sorted_vertices,
                            std::vector<VertexSet> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  VertexSet all() const { return full_set(vertices_.size()); }

  std::optional<std::size_t> position(const VertexId& v) const;
  std::size_t require_position(const VertexId& v) const;
  VertexSet mask_of(std::span<const VertexId> vs) const;

  bool is_discrete() const { return edges_.empty(); }
  /// True when every vertex has copy index 1.
  bool is_original() const;

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  Clutter() = default;
  std::vector<VertexId> vertices_;
  std::vector<VertexSet> edges_;
};

/// Drops non-minimal edges. Never applied implicitly by the constructors.
std::vector<std::vector<std::size_t>> minimalize_edges(
    const std::vector<std::vector<std::size_t>>& edges);

/// Entry i is the multiplicity of vertex position i of the source clutter.
struct ParallelizationVector {
  std::vector<std::int64_t> entries;
  friend bool operator==(const ParallelizationVector&, const ParallelizationVector&) = default;
};

Clutter induced_subclutter(const Clutter& c, VertexSet s);
Clutter induced_subclutter(const Clutter& c, std::span<const VertexId> s);

Clutter delete_vertex(const Clutter& c, const VertexId& v);

/// C \ {e}: removes one edge and keeps every vertex.
Clutter delete_edge(const Clutter& c, VertexSet e);

Clutter duplicate_vertex(const Clutter& c, const VertexId& v);

/// C^a with vertices (base, 1..a_i). Requires an original clutter.
Clutter parallelization(const Clutter& c, const ParallelizationVector& a);

/// The clutter of minimal vertex covers on the same vertex set. Discrete
/// clutters have an edgeless blocker.
Clutter blocker(const Clutter& c);

/// Minimal vertex covers as position masks, canonically ordered
/// (Berge's edge-by-edge transversal product).
std::vector<VertexSet> minimal_vertex_covers(const Clutter& c);

/// alpha_0: the least size of a minimal vertex cover; 0 when discrete.
std::size_t covering_number(const Clutter& c);

/// beta_0 = n - alpha_0.
std::size_t stability_number(const Clutter& c);

/// beta_1: the maximum number of pairwise disjoint edges.
std::size_t matching_number(const Clutter& c);

bool has_konig(const Clutter& c);
bool is_connected(const Clutter& c);
bool is_vertex_critical(const Clutter& c);
bool is_edge_critical(const Clutter& c);

/// Largest clutter accepted by the exhaustive partition search.
inline constexpr std::size_t kMaxDecomposableSearch = 24;

struct Partition {
  VertexSet first = 0;
  VertexSet second = 0;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// A partition X1, X2 with alpha_0(C) = alpha_0(C[X1]) + alpha_0(C[X2]), or
/// nothing if C is indecomposable. The witness returned is the one whose
/// first part (containing position 0) is smallest in numeric mask order.
/// Throws InstanceTooLarge above kMaxDecomposableSearch vertices.
std::optional<Partition> is_decomposable(const Clutter& c);

/// alpha_0(C[S]) for every S (indexed by mask), via a maximum-stable-set
/// table. Requires n <= kMaxDecomposableSearch.
std::vector<std::uint8_t> induced_covering_numbers(const Clutter& c);

/// Adds one vertex `fresh` plus edges that each contain it.
Clutter cone_vertex_extension(const Clutter& c, const VertexId& fresh,
                              const std::vector<std::vector<VertexId>>& new_edges);

}  // namespace simis

#endif  // SIMIS_CLUTTER_HPP
