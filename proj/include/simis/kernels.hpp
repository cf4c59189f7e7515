// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

// Integer vector kernels used by the Hilbert basis completion loop.
//
// Every kernel exists as a portable scalar reference and, on x86-64, as an
// AVX2 variant. The active table is chosen once at first use from the CPU
// feature bits; SIMIS_KERNELS=scalar|avx2 forces a choice (an unsupported
// request falls back to scalar).

#ifndef SIMIS_KERNELS_HPP
#define SIMIS_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace simis::kernels {

/// Row width granularity. Matrices handed to the kernels use a stride that
/// is a multiple of this, padded with zeros.
inline constexpr std::size_t kLaneWidth = 4;

constexpr std::size_t padded_width(std::size_t n) {
  return (n + kLaneWidth - 1) / kLaneWidth * kLaneWidth;
}

struct KernelTable {
  std::string_view name;

  /// true iff lhs[i] <= rhs[i] for every i < len.
  bool (*dominated)(const std::int64_t* lhs, const std::int64_t* rhs, std::size_t len);

  /// Index of the first row r < count with rows[r*stride ..] dominated by
  /// `z`, or `count` if there is none. `stride` is a multiple of kLaneWidth.
  std::size_t (*find_dominated_row)(const std::int64_t* rows, std::size_t count,
                                    std::size_t stride, const std::int64_t* z);

  /// out = a + b elementwise; returns false (out unspecified) on signed
  /// overflow in any lane.
  bool (*add_checked)(const std::int64_t* a, const std::int64_t* b, std::int64_t* out,
                      std::size_t len);

  /// Sum of a[i]*b[i]; returns false on overflow.
  bool (*dot_checked)(const std::int64_t* a, const std::int64_t* b, std::size_t len,
                      std::int64_t* result);
};

const KernelTable& scalar_kernels();

/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels();

/// The dispatched table (see file comment).
const KernelTable& active();

}  // namespace simis::kernels

#endif  // SIMIS_KERNELS_HPP
