// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace simis::kernels::detail {
namespace {

inline __m256i load(const std::int64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

bool avx2_dominated(const std::int64_t* lhs, const std::int64_t* rhs, std::size_t len) {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256i gt = _mm256_cmpgt_epi64(load(lhs + i), load(rhs + i));
    if (!_mm256_testz_si256(gt, gt)) return false;
  }
  for (; i < len; ++i) {
    if (lhs[i] > rhs[i]) return false;
  }
  return true;
}

// Rows have a padded stride, so there is no tail to handle.
std::size_t avx2_find_dominated_row(const std::int64_t* rows, std::size_t count,
                                    std::size_t stride, const std::int64_t* z) {
  for (std::size_t r = 0; r < count; ++r) {
    const std::int64_t* row = rows + r * stride;
    bool ok = true;
    for (std::size_t i = 0; i < stride; i += 4) {
      const __m256i gt = _mm256_cmpgt_epi64(load(row + i), load(z + i));
      if (!_mm256_testz_si256(gt, gt)) {
        ok = false;
        break;
      }
    }
    if (ok) return r;
  }
  return count;
}

bool avx2_add_checked(const std::int64_t* a, const std::int64_t* b, std::int64_t* out,
                      std::size_t len) {
  std::size_t i = 0;
  __m256i overflow = _mm256_setzero_si256();
  for (; i + 4 <= len; i += 4) {
    const __m256i va = load(a + i);
    const __m256i vb = load(b + i);
    const __m256i sum = _mm256_add_epi64(va, vb);
    // Signed overflow iff both operands differ in sign from the result.
    overflow = _mm256_or_si256(
        overflow, _mm256_and_si256(_mm256_xor_si256(va, sum), _mm256_xor_si256(vb, sum)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), sum);
  }
  if (_mm256_movemask_pd(_mm256_castsi256_pd(overflow)) != 0) return false;
  for (; i < len; ++i) {
    if (__builtin_add_overflow(a[i], b[i], &out[i])) return false;
  }
  return true;
}

}  // namespace

const KernelTable& avx2_table() {
  // AVX2 has no 64-bit lane multiply; the dot product stays scalar.
  static const KernelTable table{
      "avx2",
      avx2_dominated,
      avx2_find_dominated_row,
      avx2_add_checked,
      scalar_dot_checked,
  };
  return table;
}

}  // namespace simis::kernels::detail
