// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

// Monomial ideals in K[x_1..x_n]: edge ideals, ordinary and symbolic powers.

#ifndef SIMIS_IDEALS_HPP
#define SIMIS_IDEALS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simis/clutter.hpp"
#include "simis/cone.hpp"
#include "simis/covers.hpp"

namespace simis {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}
  static Monomial square_free(std::size_t n, VertexSet support);

  std::size_t dimension() const { return exponents_.size(); }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  std::uint64_t degree() const;
  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  /// "x1*x2^2"; "1" for the unit.
  std::string to_string() const;

  /// Degree first, then reverse-lexicographic on exponents; the canonical
  /// generator order.
  friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

class MonomialIdeal {
 public:
  /// The zero ideal in n variables.
  explicit MonomialIdeal(std::size_t n) : n_(n) {}
  /// Minimalizes the given generators.
  MonomialIdeal(std::size_t n, std::vector<Monomial> generators);

  std::size_t dimension() const { return n_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_;
  std::vector<Monomial> generators_;
};

/// Drops duplicates and every generator divisible by another; canonical order.
std::vector<Monomial> minimalize(std::vector<Monomial> generators);

MonomialIdeal edge_ideal(const Clutter& c);
MonomialIdeal power(const MonomialIdeal& ideal, std::uint32_t i);
MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

/// p^b for the prime p generated by the variables in `cover`.
MonomialIdeal prime_power(VertexSet cover, std::uint32_t b, std::size_t n);

/// Largest (b + 1)^n for which symbolic_power re-derives its result from
/// the inequality description.
inline constexpr double kSymbolicCrossCheckPoints = 200'000;

/// I^(b) as the intersection of p_k^b over the minimal covers C_k; a
/// discrete clutter has I = 0 and so I^(b) = 0. On small instances the
/// result is checked against symbolic_power_by_inequalities (a disagreement
/// throws InternalConsistency).
MonomialIdeal symbolic_power(const Clutter& c, std::uint32_t b);

/// I^(b) from the inequalities <a, u_k> >= b: the minimal such x^a, found by
/// scanning 0 <= a <= b componentwise.
MonomialIdeal symbolic_power_by_inequalities(const Clutter& c, std::uint32_t b);

bool ideals_equal(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

/// A minimal generator of `larger` outside `smaller`, if any.
std::optional<Monomial> containment_witness(const MonomialIdeal& larger,
                                            const MonomialIdeal& smaller);

using ReesGenerator = CoverVector;

/// Minimal algebra generators x^a t^b of the symbolic Rees algebra with
/// b <= b_max, read off the Hilbert basis of the Simis cone.
std::vector<ReesGenerator> symbolic_rees_generators(const Clutter& c, std::int64_t b_max,
                                                    const HilbertOptions& options = {});

/// I^i = I^(i) for all i, decided exactly: every basis element of positive
/// degree has degree 1.
bool mfmc_exact(const HilbertBasis& basis);
bool mfmc_exact(const Clutter& c, const HilbertOptions& options = {});

struct PowerComparison {
  std::uint32_t i = 0;
  bool equal = true;
  /// Minimal generator of I^(i) not in I^i.
  std::optional<Monomial> witness;
};

/// I^i against I^(i) for i = 1..max_i. Says nothing about i > max_i.
std::vector<PowerComparison> compare_powers(const Clutter& c, std::uint32_t max_i);

}  // namespace simis

#endif  // SIMIS_IDEALS_HPP
