// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#include "simis/covers.hpp"

#include <algorithm>
#include <limits>

#include "simis/error.hpp"

namespace simis {

std::string to_string(const CoverVector& cv) {
  std::string out = "(";
  for (std::size_t i = 0; i < cv.a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cv.a[i]);
  }
  return out + ";" + std::to_string(cv.b) + ")";
}

CoverSystem::CoverSystem(const Clutter& c)
    : n_(c.vertex_count()), covers_(minimal_vertex_covers(c)) {
  if (covers_.empty()) covers_.push_back(0);
}

void CoverSystem::check_dimension(const std::vector<std::int64_t>& a) const {
  if (a.size() != n_) {
    throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(a.size()) +
                                                  " for a clutter on " + std::to_string(n_) +
                                                  " vertices");
  }
  for (std::int64_t x : a) {
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "cover vectors are nonnegative");
  }
}

std::int64_t CoverSystem::value(const std::vector<std::int64_t>& a) const {
  check_dimension(a);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (VertexSet cover : covers_) {
    std::int64_t sum = 0;
    for (VertexSet rest = cover; rest != 0; rest &= rest - 1) {
      sum += a[static_cast<std::size_t>(__builtin_ctzll(rest))];
    }
    best = std::min(best, sum);
  }
  return best;
}

bool CoverSystem::is_cover(const CoverVector& cv) const {
  if (cv.b < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  return max_degree(cv.a) >= cv.b;
}

bool CoverSystem::is_indecomposable(const CoverVector& cv) const {
  if (!is_cover(cv)) throw Error(ErrorKind::NotACover, to_string(cv) + " is not a cover");
  const auto& a = cv.a;
  const bool a_zero = std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
  if (a_zero && cv.b == 0) throw Error(ErrorKind::NotACover, "(0, 0) is the empty product");

  // Walk every c with 0 <= c <= a; for each, the admissible degrees of the
  // two parts are i <= max_degree(c) and j <= max_degree(a - c).
  std::vector<std::int64_t> c(n_, 0), d = a;
  while (true) {
    const bool c_zero = std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
    const bool d_zero = std::all_of(d.begin(), d.end(), [](std::int64_t x) { return x == 0; });
    const std::int64_t mc = max_degree(c);
    const std::int64_t md = max_degree(d);
    const std::int64_t lo = md >= cv.b ? 0 : cv.b - md;
    const std::int64_t hi = std::min(cv.b, mc);
    for (std::int64_t i = lo; i <= hi; ++i) {
      const bool first_nonzero = !c_zero || i != 0;
      const bool second_nonzero = !d_zero || cv.b - i != 0;
      if (first_nonzero && second_nonzero) return false;
    }
    std::size_t k = 0;
    while (k < n_ && c[k] == a[k]) {
      c[k] = 0;
      d[k] = a[k];
      ++k;
    }
    if (k == n_) break;
    ++c[k];
    --d[k];
  }
  return true;
}

bool is_b_cover(const Clutter& c, const CoverVector& cv) { return CoverSystem(c).is_cover(cv); }

std::int64_t cover_value(const Clutter& c, const std::vector<std::int64_t>& a) {
  return CoverSystem(c).value(a);
}

bool is_indecomposable_cover(const Clutter& c, const CoverVector& cv) {
  return CoverSystem(c).is_indecomposable(cv);
}

std::vector<CoverVector> enumerate_indecomposable_covers(const Clutter& c,
                                                         const std::vector<std::int64_t>& box,
                                                         std::int64_t b_max,
                                                         std::uint64_t budget) {
  const CoverSystem system(c);
  const std::size_t n = c.vertex_count();
  if (box.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "box length does not match the vertex count");
  }
  // Mixed-radix index over the box; max_degree is tabulated once.
  std::vector<std::size_t> radix(n), stride(n);
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (box[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative box bound");
    radix[i] = static_cast<std::size_t>(box[i]) + 1;
    stride[i] = static_cast<std::size_t>(points);
    points *= radix[i];
    if (points > budget) throw Error(ErrorKind::InstanceTooLarge, "box exceeds the work budget");
  }
  std::vector<std::int64_t> degree(points);
  std::vector<std::int64_t> a(n, 0);
  for (std::size_t idx = 0; idx < points; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<std::int64_t>(rest % radix[i]);
      rest /= radix[i];
    }
    degree[idx] = system.max_degree(a);
  }

  std::uint64_t work = 0;
  std::vector<CoverVector> out;
  std::vector<std::size_t> digits(n), sub(n);
  for (std::size_t idx = 0; idx < points; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      digits[i] = rest % radix[i];
      rest /= radix[i];
    }
    // (0, b) is a cover only for b = 0, the excluded empty product.
    if (idx == 0) continue;
    // Every b up to `threshold` splits along some proper 0 != c != a.
    std::int64_t threshold = -1;
    std::fill(sub.begin(), sub.end(), 0);
    while (true) {
      if (++work > budget) {
        throw Error(ErrorKind::InstanceTooLarge, "cover enumeration exceeded its work budget");
      }
      std::size_t c_idx = 0;
      for (std::size_t i = 0; i < n; ++i) c_idx += sub[i] * stride[i];
      if (c_idx != 0 && c_idx != idx) {
        threshold = std::max(threshold, degree[c_idx] + degree[idx - c_idx]);
      }
      std::size_t k = 0;
      while (k < n && sub[k] == digits[k]) sub[k++] = 0;
      if (k == n) break;
      ++sub[k];
    }
    const std::int64_t top = std::min(b_max, degree[idx]);
    for (std::int64_t b = threshold + 1; b <= top; ++b) {
      CoverVector cv{std::vector<std::int64_t>(n), b};
      for (std::size_t i = 0; i < n; ++i) cv.a[i] = static_cast<std::int64_t>(digits[i]);
      out.push_back(std::move(cv));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace simis
