// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#include "kernels_internal.hpp"

namespace simis::kernels {
namespace detail {

bool scalar_dominated(const std::int64_t* lhs, const std::int64_t* rhs, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (lhs[i] > rhs[i]) return false;
  }
  return true;
}

std::size_t scalar_find_dominated_row(const std::int64_t* rows, std::size_t count,
                                      std::size_t stride, const std::int64_t* z) {
  for (std::size_t r = 0; r < count; ++r) {
    if (scalar_dominated(rows + r * stride, z, stride)) return r;
  }
  return count;
}

bool scalar_add_checked(const std::int64_t* a, const std::int64_t* b, std::int64_t* out,
                        std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (__builtin_add_overflow(a[i], b[i], &out[i])) return false;
  }
  return true;
}

bool scalar_dot_checked(const std::int64_t* a, const std::int64_t* b, std::size_t len,
                        std::int64_t* result) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < len; ++i) {
    std::int64_t term = 0;
    if (__builtin_mul_overflow(a[i], b[i], &term)) return false;
    if (__builtin_add_overflow(acc, term, &acc)) return false;
  }
  *result = acc;
  return true;
}

}  // namespace detail

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      "scalar",
      detail::scalar_dominated,
      detail::scalar_find_dominated_row,
      detail::scalar_add_checked,
      detail::scalar_dot_checked,
  };
  return table;
}

}  // namespace simis::kernels
