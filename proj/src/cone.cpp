// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#include "simis/cone.hpp"

#include <algorithm>

namespace simis {

bool SimisCone::contains(const std::vector<std::int64_t>& point) const {
  if (point.size() != dimension) throw Error(ErrorKind::DimensionMismatch, "point of wrong length");
  for (const auto& normal : normals) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < dimension; ++i) sum += normal[i] * point[i];
    if (sum < 0) return false;
  }
  return true;
}

SimisCone simis_cone(const Clutter& c) {
  const std::size_t n = c.vertex_count();
  SimisCone cone;
  cone.dimension = n + 1;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<std::int64_t> e(n + 1, 0);
    e[i] = 1;
    cone.normals.push_back(std::move(e));
  }
  // A discrete clutter's only minimal cover is the empty set, which
  // contributes (0, ..., 0, -1): the cone is then {b = 0}.
  std::vector<VertexSet> covers = minimal_vertex_covers(c);
  if (covers.empty()) covers.push_back(0);
  for (VertexSet cover : covers) {
    std::vector<std::int64_t> normal(n + 1, 0);
    for (std::size_t p : members(cover)) normal[p] = 1;
    normal[n] = -1;
    cone.normals.push_back(std::move(normal));
  }
  return cone;
}

bool HilbertBasis::contains(const CoverVector& v) const {
  return std::binary_search(elements.begin(), elements.end(), v);
}

std::vector<std::vector<std::int64_t>> hilbert_basis_bruteforce(
    const SimisCone& cone, const std::vector<std::int64_t>& box, std::uint64_t max_points) {
  const std::size_t d = cone.dimension;
  if (box.size() != d) throw Error(ErrorKind::DimensionMismatch, "box must have one bound per coordinate");
  std::vector<std::size_t> radix(d);
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (box[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative box bound");
    radix[i] = static_cast<std::size_t>(box[i]) + 1;
    points *= radix[i];
    if (points > max_points) {
      throw Error(ErrorKind::InstanceTooLarge,
                  "box has more than " + std::to_string(max_points) + " lattice points");
    }
  }
  std::vector<std::int64_t> stride(d);
  std::int64_t s = 1;
  for (std::size_t i = 0; i < d; ++i) {
    stride[i] = s;
    s *= static_cast<std::int64_t>(radix[i]);
  }
  auto decode = [&](std::size_t idx, std::vector<std::int64_t>& p) {
    for (std::size_t i = 0; i < d; ++i) {
      p[i] = static_cast<std::int64_t>(idx % radix[i]);
      idx /= radix[i];
    }
  };

  std::vector<std::uint8_t> inside(points);
  std::vector<std::int64_t> p(d), q(d);
  for (std::size_t idx = 0; idx < points; ++idx) {
    decode(idx, p);
    inside[idx] = cone.contains(p) ? 1 : 0;
  }

  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t idx = 1; idx < points; ++idx) {
    if (!inside[idx]) continue;
    decode(idx, p);
    bool reducible = false;
    std::fill(q.begin(), q.end(), 0);
    // Odometer over 0 <= q <= p; p - q then indexes as idx - q_idx.
    while (!reducible) {
      std::size_t k = 0;
      while (k < d && q[k] == p[k]) q[k++] = 0;
      if (k == d) break;
      ++q[k];
      std::int64_t q_idx = 0;
      for (std::size_t i = 0; i < d; ++i) q_idx += q[i] * stride[i];
      if (static_cast<std::size_t>(q_idx) == idx) continue;
      reducible = inside[static_cast<std::size_t>(q_idx)] &&
                  inside[idx - static_cast<std::size_t>(q_idx)];
    }
    if (!reducible) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [d](const auto& x, const auto& y) {
    if (x[d - 1] != y[d - 1]) return x[d - 1] < y[d - 1];
    return x < y;
  });
  return out;
}

std::vector<Parallelization> indecomposable_parallelizations(const Clutter& c,
                                                             const HilbertOptions& options) {
  const HilbertBasis basis = hilbert_basis(simis_cone(c), options);
  std::vector<Parallelization> out;
  for (const CoverVector& h : basis.elements) {
    out.push_back({ParallelizationVector{h.a}, h.b});
  }
  return out;
}

std::vector<InducedSubclutter> zero_one_supports(const HilbertBasis& basis) {
  std::vector<InducedSubclutter> out;
  for (const CoverVector& h : basis.elements) {
    VertexSet support = 0;
    bool zero_one = true;
    for (std::size_t i = 0; i < h.a.size() && zero_one; ++i) {
      if (h.a[i] == 1) {
        support |= singleton(i);
      } else if (h.a[i] != 0) {
        zero_one = false;
      }
    }
    if (zero_one && support != 0) out.push_back({support, h.b});
  }
  std::sort(out.begin(), out.end(), [](const InducedSubclutter& x, const InducedSubclutter& y) {
    if (x.vertices != y.vertices) return subset_order(x.vertices, y.vertices);
    return x.covering_number < y.covering_number;
  });
  return out;
}

std::vector<InducedSubclutter> indecomposable_induced_subclutters(const Clutter& c,
                                                                  const HilbertOptions& options) {
  return zero_one_supports(hilbert_basis(simis_cone(c), options));
}

bool is_indecomposable_via_cone(const Clutter& c, const HilbertOptions& options) {
  const HilbertBasis basis = hilbert_basis(simis_cone(c), options);
  const CoverVector whole{std::vector<std::int64_t>(c.vertex_count(), 1),
                          static_cast<std::int64_t>(covering_number(c))};
  return basis.contains(whole);
}

}  // namespace simis
