// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#include "simis/ideals.hpp"

#include <algorithm>
#include <numeric>

#include "simis/error.hpp"

namespace simis {

namespace {

void check_same_dimension(std::size_t lhs, std::size_t rhs) {
  if (lhs != rhs) {
    throw Error(ErrorKind::DimensionMismatch, "ideals live in " + std::to_string(lhs) + " and " +
                                                  std::to_string(rhs) + " variables");
  }
}

}  // namespace

Monomial Monomial::square_free(std::size_t n, VertexSet support) {
  std::vector<std::uint32_t> e(n, 0);
  for (std::size_t p : members(support)) e[p] = 1;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const {
  check_same_dimension(dimension(), other.dimension());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same_dimension(dimension(), other.dimension());
  std::vector<std::uint32_t> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exponents_[i], other.exponents_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same_dimension(dimension(), other.dimension());
  std::vector<std::uint32_t> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (__builtin_add_overflow(exponents_[i], other.exponents_[i], &e[i])) {
      throw Error(ErrorKind::ArithmeticOverflow, "monomial exponent overflow");
    }
  }
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) {
  if (auto c = lhs.degree() <=> rhs.degree(); c != 0) return c;
  // Higher powers of earlier variables first: x1^2 < x1*x2 < x2^2.
  return rhs.exponents_ <=> lhs.exponents_;
}

std::vector<Monomial> minimalize(std::vector<Monomial> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Monomial> kept;
  for (auto& m : generators) {
    // Divisors have no larger degree, so they precede m in sorted order.
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> generators) : n_(n) {
  for (const auto& g : generators) check_same_dimension(n, g.dimension());
  generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  check_same_dimension(n_, m.dimension());
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal edge_ideal(const Clutter& c) {
  std::vector<Monomial> gens;
  for (VertexSet e : c.edges()) gens.push_back(Monomial::square_free(c.vertex_count(), e));
  return MonomialIdeal(c.vertex_count(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::uint32_t i) {
  if (i == 0) throw Error(ErrorKind::InvalidArgument, "power exponent must be at least 1");
  MonomialIdeal result = ideal;
  for (std::uint32_t k = 1; k < i; ++k) {
    std::vector<Monomial> products;
    products.reserve(result.generators().size() * ideal.generators().size());
    for (const auto& g : result.generators()) {
      for (const auto& h : ideal.generators()) products.push_back(g * h);
    }
    result = MonomialIdeal(ideal.dimension(), std::move(products));
  }
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  check_same_dimension(lhs.dimension(), rhs.dimension());
  std::vector<Monomial> lcms;
  lcms.reserve(lhs.generators().size() * rhs.generators().size());
  for (const auto& g : lhs.generators()) {
    for (const auto& h : rhs.generators()) lcms.push_back(g.lcm(h));
  }
  return MonomialIdeal(lhs.dimension(), std::move(lcms));
}

MonomialIdeal prime_power(VertexSet cover, std::uint32_t b, std::size_t n) {
  if (cover == 0) throw Error(ErrorKind::InvalidArgument, "prime of an empty cover");
  if (n < 64 && (cover >> n) != 0) {
    throw Error(ErrorKind::DimensionMismatch, "cover outside the ambient variables");
  }
  const std::vector<std::size_t> vars = members(cover);
  std::vector<Monomial> gens;
  std::vector<std::uint32_t> e(n, 0);
  // Distribute b among the cover variables, last variable takes the remainder.
  auto place = [&](auto&& self, std::size_t k, std::uint32_t left) -> void {
    if (k + 1 == vars.size()) {
      e[vars[k]] = left;
      gens.emplace_back(e);
      e[vars[k]] = 0;
      return;
    }
    for (std::uint32_t x = 0; x <= left; ++x) {
      e[vars[k]] = x;
      self(self, k + 1, left - x);
    }
    e[vars[k]] = 0;
  };
  place(place, 0, b);
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal symbolic_power(const Clutter& c, std::uint32_t b) {
  if (b == 0) throw Error(ErrorKind::InvalidArgument, "symbolic power exponent must be at least 1");
  const std::size_t n = c.vertex_count();
  if (c.is_discrete()) return MonomialIdeal(n);
  std::optional<MonomialIdeal> acc;
  for (VertexSet cover : minimal_vertex_covers(c)) {
    MonomialIdeal p = prime_power(cover, b, n);
    acc = acc ? intersect(*acc, p) : std::move(p);
  }
  // Cross-check against the inequality description whenever its scan is cheap.
  double points = 1;
  for (std::size_t i = 0; i < n; ++i) points *= b + 1.0;
  if (points <= kSymbolicCrossCheckPoints && !ideals_equal(*acc, symbolic_power_by_inequalities(c, b))) {
    throw Error(ErrorKind::InternalConsistency,
                "prime intersection and inequality description disagree on I^(" +
                    std::to_string(b) + ")");
  }
  return *acc;
}

MonomialIdeal symbolic_power_by_inequalities(const Clutter& c, std::uint32_t b) {
  if (b == 0) throw Error(ErrorKind::InvalidArgument, "symbolic power exponent must be at least 1");
  const std::size_t n = c.vertex_count();
  if (c.is_discrete()) return MonomialIdeal(n);
  const CoverSystem system(c);
  // Every minimal generator has a <= b componentwise: lowering an entry
  // above b to b keeps every <a, u_k> >= b.
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    points *= b + 1;
    if (points > 50'000'000) {
      throw Error(ErrorKind::InstanceTooLarge, "inequality scan exceeds 5e7 points");
    }
  }
  std::vector<Monomial> gens;
  std::vector<std::int64_t> a(n, 0);
  while (true) {
    if (system.value(a) >= static_cast<std::int64_t>(b)) {
      gens.emplace_back(std::vector<std::uint32_t>(a.begin(), a.end()));
    }
    std::size_t k = 0;
    while (k < n && a[k] == static_cast<std::int64_t>(b)) a[k++] = 0;
    if (k == n) break;
    ++a[k];
  }
  return MonomialIdeal(n, std::move(gens));
}

bool ideals_equal(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  check_same_dimension(lhs.dimension(), rhs.dimension());
  return lhs.generators() == rhs.generators();
}

std::optional<Monomial> containment_witness(const MonomialIdeal& larger,
                                            const MonomialIdeal& smaller) {
  check_same_dimension(larger.dimension(), smaller.dimension());
  for (const auto& g : larger.generators()) {
    if (!smaller.contains(g)) return g;
  }
  return std::nullopt;
}

std::vector<ReesGenerator> symbolic_rees_generators(const Clutter& c, std::int64_t b_max,
                                                    const HilbertOptions& options) {
  const HilbertBasis basis = hilbert_basis(simis_cone(c), options);
  std::vector<ReesGenerator> out;
  for (const auto& h : basis.elements) {
    if (h.b <= b_max) out.push_back(h);
  }
  return out;
}

bool mfmc_exact(const HilbertBasis& basis) {
  return std::all_of(basis.elements.begin(), basis.elements.end(),
                     [](const CoverVector& h) { return h.b <= 1; });
}

bool mfmc_exact(const Clutter& c, const HilbertOptions& options) {
  return mfmc_exact(hilbert_basis(simis_cone(c), options));
}

std::vector<PowerComparison> compare_powers(const Clutter& c, std::uint32_t max_i) {
  std::vector<PowerComparison> out;
  const MonomialIdeal ideal = edge_ideal(c);
  std::optional<MonomialIdeal> ordinary;
  for (std::uint32_t i = 1; i <= max_i; ++i) {
    ordinary = ordinary ? MonomialIdeal(c.vertex_count(), [&] {
      std::vector<Monomial> products;
      for (const auto& g : ordinary->generators()) {
        for (const auto& h : ideal.generators()) products.push_back(g * h);
      }
      return products;
    }())
                        : ideal;
    const MonomialIdeal symbolic = symbolic_power(c, i);
    PowerComparison cmp;
    cmp.i = i;
    cmp.witness = containment_witness(symbolic, *ordinary);
    cmp.equal = !cmp.witness && ideals_equal(symbolic, *ordinary);
    out.push_back(std::move(cmp));
  }
  return out;
}

}  // namespace simis
