// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "simis/clutter.hpp"
#include "simis/error.hpp"

namespace simis {
namespace {

using testing::complete;
using testing::complete_bipartite;
using testing::cycle;
using testing::discrete;

Clutter fig6() {
  return Clutter::make(7, {{1, 2}, {1, 5}, {1, 6}, {2, 3}, {3, 4}, {3, 7}, {4, 5}, {4, 7}, {6, 7}});
}

Clutter fig4() {
  return Clutter::make(10, {{1, 2}, {2, 6}, {6, 9}, {9, 5}, {5, 1}, {3, 4}, {4, 8}, {8, 10}, {10, 7},
                            {7, 3}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {9, 7}, {9, 8}, {10, 6}, {10, 5}});
}

VertexId v(std::uint32_t base, std::uint32_t copy = 1) { return {base, copy}; }

void expect_error(ErrorKind kind, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

TEST(ClutterConstruction, SingleEdge) {
  const Clutter c = Clutter::make(2, {{1, 2}});
  EXPECT_EQ(c.vertex_count(), 2u);
  EXPECT_EQ(c.edge_count(), 1u);
}

TEST(ClutterConstruction, CycleDeduplicatesEdges) {
  const Clutter c = Clutter::make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {2, 1}});
  EXPECT_EQ(c.edge_count(), 5u);
}

TEST(ClutterConstruction, RejectsNestedAndEmptyEdges) {
  expect_error(ErrorKind::AntichainViolation, [] { Clutter::make(3, {{1, 2}, {1, 2, 3}}); });
  expect_error(ErrorKind::EmptyEdge, [] { Clutter::make(3, {{}}); });
  expect_error(ErrorKind::UnknownVertex, [] { Clutter::make(2, {{1, 3}}); });
  expect_error(ErrorKind::InvalidArgument, [] { Clutter::make(0, {}); });
}

TEST(ClutterConstruction, MinimalizeIsExplicit) {
  EXPECT_EQ(minimalize_edges({{1, 2}, {1, 2, 3}, {3}}),
            (std::vector<std::vector<std::size_t>>{{1, 2}, {3}}));
}

TEST(InducedSubclutter, Examples) {
  const Clutter c5 = cycle(5);
  const Clutter path = induced_subclutter(c5, 0b00111);
  EXPECT_EQ(path.vertex_count(), 3u);
  EXPECT_EQ(path.edges(), (std::vector<VertexSet>{0b011, 0b110}));
  EXPECT_TRUE(induced_subclutter(c5, 0b00101).is_discrete());
  const std::vector<VertexId> tri{v(3), v(4), v(7)};
  const Clutter triangle = induced_subclutter(fig6(), tri);
  EXPECT_EQ(triangle, Clutter::from_masks(tri, {0b011, 0b101, 0b110}));
  const std::vector<VertexId> unknown{v(9)};
  expect_error(ErrorKind::UnknownVertex, [&] { induced_subclutter(c5, unknown); });
}

TEST(DeleteVertex, Examples) {
  const Clutter p = delete_vertex(cycle(5), v(1));
  EXPECT_EQ(p.vertex_count(), 4u);
  EXPECT_EQ(p.edge_count(), 3u);
  const Clutter single = delete_vertex(Clutter::make(2, {{1, 2}}), v(1));
  EXPECT_EQ(single.vertex_count(), 1u);
  EXPECT_TRUE(single.is_discrete());
  const Clutter f = delete_vertex(fig6(), v(1));
  EXPECT_EQ(f.vertex_count(), 6u);
  EXPECT_EQ(f.edge_count(), 6u);
  expect_error(ErrorKind::UnknownVertex, [] { delete_vertex(cycle(5), v(6)); });
}

TEST(DuplicateVertex, Examples) {
  Clutter star = Clutter::make(2, {{1, 2}});
  star = duplicate_vertex(star, v(1));
  star = duplicate_vertex(star, v(1));
  EXPECT_EQ(star.vertices(), (std::vector<VertexId>{v(1), v(1, 2), v(1, 3), v(2)}));
  EXPECT_EQ(star.edge_count(), 3u);
  EXPECT_EQ(star, parallelization(Clutter::make(2, {{1, 2}}), {{3, 1}}));

  const Clutter two = duplicate_vertex(discrete(1), v(1));
  EXPECT_EQ(two.vertex_count(), 2u);
  EXPECT_TRUE(two.is_discrete());

  const Clutter tri = duplicate_vertex(complete(3), v(1));
  EXPECT_EQ(tri.vertex_count(), 4u);
  EXPECT_EQ(tri.edge_count(), 5u);
}

TEST(Parallelization, Examples) {
  const Clutter k33 = parallelization(Clutter::make(2, {{1, 2}}), {{3, 3}});
  EXPECT_EQ(k33.vertex_count(), 6u);
  EXPECT_EQ(k33.edge_count(), 9u);
  EXPECT_EQ(matching_number(k33), 3u);
  EXPECT_EQ(parallelization(fig6(), {{1, 1, 1, 1, 1, 1, 1}}), fig6());
  EXPECT_EQ(parallelization(fig6(), {{0, 0, 1, 1, 0, 0, 1}}), induced_subclutter(fig6(), 0b1001100));
  expect_error(ErrorKind::DimensionMismatch, [] { parallelization(cycle(5), {{1, 1}}); });
}

TEST(Blocker, Examples) {
  EXPECT_EQ(blocker(Clutter::make(2, {{1, 2}})).edges(), (std::vector<VertexSet>{0b01, 0b10}));
  const Clutter b5 = blocker(cycle(5));
  EXPECT_EQ(b5.edge_count(), 5u);
  for (VertexSet e : b5.edges()) EXPECT_EQ(cardinality(e), 3);
  EXPECT_EQ(blocker(complete(3)).edges(), (std::vector<VertexSet>{0b011, 0b101, 0b110}));
  EXPECT_TRUE(blocker(discrete(3)).is_discrete());
}

TEST(Numbers, CoveringStabilityMatching) {
  EXPECT_EQ(covering_number(cycle(5)), 3u);
  EXPECT_EQ(covering_number(fig4()), 6u);
  EXPECT_EQ(covering_number(discrete(4)), 0u);
  EXPECT_EQ(stability_number(cycle(5)), 2u);
  EXPECT_EQ(stability_number(complete(4)), 1u);
  EXPECT_EQ(stability_number(discrete(3)), 3u);
  EXPECT_EQ(matching_number(cycle(5)), 2u);
  EXPECT_EQ(matching_number(complete_bipartite(3, 3)), 3u);
  EXPECT_EQ(matching_number(Clutter::make(2, {{1, 2}})), 1u);
}

TEST(Konig, Examples) {
  EXPECT_FALSE(has_konig(cycle(5)));
  EXPECT_TRUE(has_konig(cycle(6)));
  EXPECT_TRUE(has_konig(complete_bipartite(2, 3)));
  EXPECT_TRUE(has_konig(Clutter::make(2, {{1, 2}})));
  EXPECT_TRUE(has_konig(discrete(2)));
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(cycle(5)));
  EXPECT_FALSE(is_connected(Clutter::make(4, {{1, 2}, {3, 4}})));
  EXPECT_FALSE(is_connected(discrete(2)));
  EXPECT_TRUE(is_connected(discrete(1)));
}

TEST(Criticality, Examples) {
  EXPECT_TRUE(is_vertex_critical(cycle(5)));
  EXPECT_FALSE(is_vertex_critical(Clutter::make(3, {{1, 2}})));
  EXPECT_TRUE(is_vertex_critical(complete(4)));
  EXPECT_TRUE(is_edge_critical(cycle(5)));
  EXPECT_TRUE(is_edge_critical(complete(4)));
  EXPECT_FALSE(is_edge_critical(fig6()));
}

TEST(Decomposable, Examples) {
  EXPECT_FALSE(is_decomposable(cycle(5)).has_value());
  const auto witness = is_decomposable(fig4());
  ASSERT_TRUE(witness.has_value());
  const Clutter g = fig4();
  EXPECT_EQ(witness->first | witness->second, g.all());
  EXPECT_EQ(witness->first & witness->second, 0u);
  EXPECT_EQ(covering_number(induced_subclutter(g, witness->first)) +
                covering_number(induced_subclutter(g, witness->second)),
            6u);
  EXPECT_FALSE(is_decomposable(testing::graph_complement(cycle(5))).has_value());
  EXPECT_FALSE(is_decomposable(testing::graph_complement(cycle(7))).has_value());
  EXPECT_FALSE(is_decomposable(discrete(1)).has_value());
  EXPECT_TRUE(is_decomposable(discrete(2)).has_value());
}

TEST(Decomposable, TooLarge) {
  expect_error(ErrorKind::InstanceTooLarge, [] { is_decomposable(discrete(25)); });
}

TEST(InducedCoveringNumbers, MatchesDirectComputation) {
  const Clutter g = fig6();
  const auto table = induced_covering_numbers(g);
  for (VertexSet s = 0; s <= g.all(); ++s) {
    if (s == 0) continue;
    EXPECT_EQ(table[s], covering_number(induced_subclutter(g, s))) << s;
  }
}

TEST(ConeVertexExtension, Examples) {
  const VertexId fresh = v(3);
  const Clutter tri = cone_vertex_extension(Clutter::make(2, {{1, 2}}), fresh, {{fresh, v(1)}, {fresh, v(2)}});
  EXPECT_EQ(tri, complete(3));
  std::vector<std::vector<VertexId>> spokes;
  for (std::uint32_t i = 1; i <= 5; ++i) spokes.push_back({v(6), v(i)});
  const Clutter wheel = cone_vertex_extension(cycle(5), v(6), spokes);
  EXPECT_EQ(covering_number(wheel), 4u);
  EXPECT_EQ(cone_vertex_extension(discrete(1), v(2), {{v(2), v(1)}}), Clutter::make(2, {{1, 2}}));
  expect_error(ErrorKind::AntichainViolation, [&] {
    cone_vertex_extension(Clutter::make(2, {{1, 2}}), fresh, {{fresh}, {fresh, v(1)}});
  });
}

TEST(VertexNames, Rendering) {
  EXPECT_EQ(to_string(v(3)), "3");
  EXPECT_EQ(to_string(v(3, 2)), "3^2");
}

}  // namespace
}  // namespace simis
