// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

// Cross-validation of the cone against the clutter combinatorics, and graph
// classification (bipartite, odd holes/antiholes, Berge, cliques).

#ifndef SIMIS_ANALYSIS_HPP
#define SIMIS_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simis/clutter.hpp"
#include "simis/cone.hpp"
#include "simis/ideals.hpp"

namespace simis {

/// Every edge has exactly two vertices (vacuously true without edges).
bool is_graph(const Clutter& c);

/// Vertex sets inducing a chordless odd cycle of length >= 5, canonically
/// ordered. Throws NotAGraph.
std::vector<VertexSet> find_odd_holes(const Clutter& g);

/// Vertex sets inducing the complement of an odd cycle of length >= 5. A
/// 5-set qualifies exactly when it is an odd hole too (C5 is
/// self-complementary), so such sets appear in both lists.
std::vector<VertexSet> find_odd_antiholes(const Clutter& g);

bool is_berge(const Clutter& g);

/// Every nonempty clique, singletons included, canonically ordered.
std::vector<VertexSet> cliques(const Clutter& g);

bool is_bipartite(const Clutter& g);

/// The Hilbert basis is exactly {(1_Q, |Q| - 1) : Q a clique} together with
/// nothing else. Throws NotAGraph, or NotBerge when g has an odd hole or
/// antihole. A false result means an implementation bug, not a theorem.
bool check_perfect_generators(const Clutter& g, const HilbertOptions& options = {});

struct MainTheoremCheck {
  bool holds = true;
  std::uint64_t points_checked = 0;
  std::vector<std::string> mismatches;  // first few, human readable
};

/// Over every 0 != a <= box: (a, alpha_0(C^a)) is in the Hilbert basis iff
/// C^a is indecomposable, and every basis element with a <= box has
/// b = alpha_0(C^a) -- save the degree-0 unit vectors, which sit next to
/// (e_k, 1) when {x_k} is an edge. The cone side and the partition-search
/// side share no code beyond the clutter type. `jobs` threads split the box.
MainTheoremCheck check_main_theorem_detailed(const Clutter& c, const std::vector<std::int64_t>& box,
                                             unsigned jobs = 1,
                                             const HilbertOptions& options = {});
bool check_main_theorem(const Clutter& c, const std::vector<std::int64_t>& box,
                        unsigned jobs = 1, const HilbertOptions& options = {});

/// Every C^a with 0 != a <= box has the König property.
bool all_parallelizations_konig(const Clutter& c, const std::vector<std::int64_t>& box);

struct PerfectDiagnosis {
  std::vector<VertexSet> odd_holes;
  /// Antiholes of length >= 7 only; 5-vertex antiholes are the holes listed
  /// in `self_complementary`.
  std::vector<VertexSet> odd_antiholes;
  std::vector<VertexSet> self_complementary;
  bool berge = false;
  /// Only evaluated for Berge graphs.
  std::optional<bool> clique_generators;
};

struct HilbertSummary {
  std::size_t total = 0;
  std::size_t zero_one = 0;
  std::int64_t max_b = 0;
};

struct ClassifyOptions {
  std::string id;
  /// Powers are compared for i = 1..max_power_i only.
  std::uint32_t max_power_i = 2;
  HilbertOptions hilbert;
};

struct ClassificationReport {
  std::string id;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool is_graph = false;
  std::size_t alpha0 = 0;
  std::size_t beta0 = 0;
  std::size_t beta1 = 0;
  bool konig = false;
  bool connected = false;
  bool decomposable = false;
  /// The witness when the partition search ran; above
  /// kMaxDecomposableSearch vertices the cone decides and no witness exists.
  std::optional<Partition> decomposition;
  std::string decomposable_method;
  bool mfmc_exact = false;
  std::vector<PowerComparison> powers;
  std::optional<bool> bipartite;
  std::optional<PerfectDiagnosis> perfect;
  HilbertSummary hilbert;
};

/// Throws InternalConsistency if a Berge graph fails the clique check.
ClassificationReport classify(const Clutter& c, const ClassifyOptions& options = {});

}  // namespace simis

#endif  // SIMIS_ANALYSIS_HPP
