// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMIS_SRC_CLUTTER_INTERNAL_HPP
#define SIMIS_SRC_CLUTTER_INTERNAL_HPP

#include <vector>

#include "simis/clutter.hpp"

namespace simis::detail {

/// Minimal transversals of a family of masks; empty family gives no sets.
std::vector<VertexSet> transversals(const std::vector<VertexSet>& edges);

std::size_t covering_number(const std::vector<VertexSet>& edges);

std::vector<VertexSet> edges_within(const std::vector<VertexSet>& edges, VertexSet s);

}  // namespace simis::detail

#endif  // SIMIS_SRC_CLUTTER_INTERNAL_HPP
