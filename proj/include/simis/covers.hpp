// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

// b-covers of the blocker: a in N^n is a b-cover when <a, u> >= b for the
// characteristic vector u of every minimal vertex cover. Everything here is
// computed from the minimal covers directly and does not touch the cone
// module, so it can serve as an independent oracle for it.

#ifndef SIMIS_COVERS_HPP
#define SIMIS_COVERS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "simis/clutter.hpp"

namespace simis {

/// The pair (a, b), read as the monomial x^a t^b. Ordered by (b, a).
struct CoverVector {
  std::vector<std::int64_t> a;
  std::int64_t b = 0;

  friend bool operator==(const CoverVector&, const CoverVector&) = default;
  friend std::strong_ordering operator<=>(const CoverVector& lhs, const CoverVector& rhs) {
    if (auto cmp = lhs.b <=> rhs.b; cmp != 0) return cmp;
    return lhs.a <=> rhs.a;
  }
};

std::string to_string(const CoverVector& cv);

/// Minimal covers of a clutter, precomputed once for repeated queries.
class CoverSystem {
 public:
  explicit CoverSystem(const Clutter& c);

  std::size_t dimension() const { return n_; }
  /// The minimal covers; for a discrete clutter this is the empty set alone.
  const std::vector<VertexSet>& covers() const { return covers_; }

  /// min over minimal covers of the sum of a over the cover; 0 for a
  /// discrete clutter, whose only minimal cover is the empty set.
  std::int64_t value(const std::vector<std::int64_t>& a) const;

  /// Largest b for which a is a b-cover; the same number as value(a).
  std::int64_t max_degree(const std::vector<std::int64_t>& a) const { return value(a); }

  bool is_cover(const CoverVector& cv) const;

  /// Exhaustive split search; throws NotACover when cv is not a cover or is
  /// (0, 0).
  bool is_indecomposable(const CoverVector& cv) const;

 private:
  void check_dimension(const std::vector<std::int64_t>& a) const;

  std::size_t n_;
  std::vector<VertexSet> covers_;
};


bool is_b_cover(const Clutter& c, const CoverVector& cv);
std::int64_t cover_value(const Clutter& c, const std::vector<std::int64_t>& a);
bool is_indecomposable_cover(const Clutter& c, const CoverVector& cv);

/// Default bound on split candidates examined by the enumeration oracle.
inline constexpr std::uint64_t kCoverEnumerationBudget = 10'000'000;

/// Every indecomposable b-cover (a, b) with 0 <= a <= box and b <= b_max, in
/// (b, a) order. Never includes a = 0.
std::vector<CoverVector> enumerate_indecomposable_covers(
    const Clutter& c, const std::vector<std::int64_t>& box, std::int64_t b_max,
    std::uint64_t budget = kCoverEnumerationBudget);

}  // namespace simis

#endif  // SIMIS_COVERS_HPP
