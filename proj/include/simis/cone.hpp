// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

// The Simis cone of an edge ideal and its Hilbert basis.
//
// For a clutter on n vertices with minimal vertex covers C_1..C_s, the cone
// lives in R^{n+1} and is cut out by x >= 0 and <x, (u_k, -1)> >= 0 where u_k
// is the characteristic vector of C_k. A lattice point (a, b) is in the cone
// exactly when a is a b-cover, so the Hilbert basis lists the minimal
// algebra generators x^a t^b of the symbolic Rees algebra.

#ifndef SIMIS_CONE_HPP
#define SIMIS_CONE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simis/clutter.hpp"
#include "simis/covers.hpp"
#include "simis/error.hpp"

namespace simis {

struct SimisCone {
  std::size_t dimension = 0;
  /// e_1..e_{n+1} first, then one (u_k, -1) per minimal cover, in cover order.
  /// A discrete clutter contributes the empty cover, i.e. (0, ..., 0, -1).
  std::vector<std::vector<std::int64_t>> normals;

  bool contains(const std::vector<std::int64_t>& point) const;
  /// Number of (u_k, -1) normals.
  std::size_t cover_normal_count() const { return normals.size() - dimension; }
};

SimisCone simis_cone(const Clutter& c);

/// Elements as (a, b) pairs in (b, a) order.
struct HilbertBasis {
  std::vector<CoverVector> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const CoverVector& v) const;
};

inline constexpr std::uint64_t kDefaultWorkBudget = 1'000'000;

/// Reads SIMIS_WORK_BUDGET, falling back to kDefaultWorkBudget.
std::uint64_t default_work_budget();

struct HilbertOptions {
  /// Bound on candidate sums that survive reduction (new basis elements of
  /// the intermediate cones). Exceeding it raises WorkBudgetExceeded.
  std::uint64_t work_budget = default_work_budget();
};

struct HilbertStats {
  std::uint64_t candidates = 0;  // sums formed
  std::uint64_t accepted = 0;    // sums kept after reduction (the budgeted steps)
  std::size_t peak_size = 0;     // largest intermediate generating set
};

/// Thrown when the work budget runs out; carries how far the completion got.
class WorkBudgetError : public Error {
 public:
  WorkBudgetError(const std::string& message, std::size_t halfspaces_done,
                  std::size_t halfspaces_total, std::size_t partial_size)
      : Error(ErrorKind::WorkBudgetExceeded, message),
        halfspaces_done(halfspaces_done),
        halfspaces_total(halfspaces_total),
        partial_size(partial_size) {}

  std::size_t halfspaces_done;
  std::size_t halfspaces_total;
  std::size_t partial_size;
};

/// The Hilbert basis of a cone inside the nonnegative orthant (every unit
/// normal must be present). Cutting halfspaces are added one at a time
/// starting from the orthant's basis e_1..e_d; each cut is completed by
/// adding sums of opposite-sign generators in increasing total degree and
/// discarding every sum that a lower-degree generator reduces.
HilbertBasis hilbert_basis(const SimisCone& cone, const HilbertOptions& options = {},
                           HilbertStats* stats = nullptr);

/// Direct reading of the irreducibility characterization inside a box:
/// every cone point p <= box that is not q + (p - q) for two nonzero cone
/// points. The box has n + 1 entries (the last bounds b).
std::vector<std::vector<std::int64_t>> hilbert_basis_bruteforce(
    const SimisCone& cone, const std::vector<std::int64_t>& box,
    std::uint64_t max_points = 10'000'000);

/// One entry per basis element: (a, alpha_0(C^a)).
struct Parallelization {
  ParallelizationVector a;
  std::int64_t covering_number = 0;
};

std::vector<Parallelization> indecomposable_parallelizations(const Clutter& c,
                                                             const HilbertOptions& options = {});

struct InducedSubclutter {
  VertexSet vertices = 0;
  std::int64_t covering_number = 0;
};

/// The 0/1 part of the basis, as vertex subsets in canonical subset order.
std::vector<InducedSubclutter> indecomposable_induced_subclutters(
    const Clutter& c, const HilbertOptions& options = {});

std::vector<InducedSubclutter> zero_one_supports(const HilbertBasis& basis);

/// (1, ..., 1, alpha_0(C)) is in the basis.
bool is_indecomposable_via_cone(const Clutter& c, const HilbertOptions& options = {});

}  // namespace simis

#endif  // SIMIS_CONE_HPP
