// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

// Instance generators shared by the test suites: exhaustive clutter and
// graph enumeration, named families and seeded random clutters.

#ifndef SIMIS_TESTS_ORACLES_HPP
#define SIMIS_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "simis/clutter.hpp"

namespace simis::testing {

/// Every clutter on vertices 1..n: all antichains of nonempty subsets,
/// the empty family included.
std::vector<Clutter> all_clutters(std::size_t n);

/// One graph per isomorphism class on n <= 7 vertices.
std::vector<Clutter> graphs_up_to_isomorphism(std::size_t n);

Clutter cycle(std::size_t n);
Clutter complete(std::size_t n);
Clutter complete_bipartite(std::size_t p, std::size_t q);
Clutter path(std::size_t n);
Clutter graph_complement(const Clutter& g);
Clutter discrete(std::size_t n);

/// Minimal elements of a few random nonempty subsets of 1..n, n drawn
/// uniformly from [n_min, n_max]. With `require_edge` the family is nonempty.
Clutter random_clutter(std::mt19937_64& rng, std::size_t n_min, std::size_t n_max,
                       bool require_edge = true);

/// Random bipartite graph with at least one edge on 2..n_max vertices.
Clutter random_bipartite_graph(std::mt19937_64& rng, std::size_t n_max);

/// "{1,2},{2,3}" style rendering for failure messages.
std::string describe(const Clutter& c);

/// Every a with 0 <= a <= box, in odometer order (a = 0 first).
std::vector<std::vector<std::int64_t>> box_points(const std::vector<std::int64_t>& box);

}  // namespace simis::testing

#endif  // SIMIS_TESTS_ORACLES_HPP
