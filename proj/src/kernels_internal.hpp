// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMIS_SRC_KERNELS_INTERNAL_HPP
#define SIMIS_SRC_KERNELS_INTERNAL_HPP

#include "simis/kernels.hpp"

namespace simis::kernels::detail {

bool scalar_dominated(const std::int64_t* lhs, const std::int64_t* rhs, std::size_t len);
std::size_t scalar_find_dominated_row(const std::int64_t* rows, std::size_t count,
                                      std::size_t stride, const std::int64_t* z);
bool scalar_add_checked(const std::int64_t* a, const std::int64_t* b, std::int64_t* out,
                        std::size_t len);
bool scalar_dot_checked(const std::int64_t* a, const std::int64_t* b, std::size_t len,
                        std::int64_t* result);

#if defined(SIMIS_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace simis::kernels::detail

#endif  // SIMIS_SRC_KERNELS_INTERNAL_HPP
