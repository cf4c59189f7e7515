// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

// Human-readable and JSON renderings of library results, in terms of the
// document's vertex labels.

#ifndef SIMIS_REPORT_HPP
#define SIMIS_REPORT_HPP

#include <string>
#include <vector>

#include "simis/analysis.hpp"
#include "simis/document.hpp"
#include "simis/ideals.hpp"

namespace simis {

/// "{1 3 4}".
std::string render_set(VertexSet s, const std::vector<std::string>& labels);
std::vector<std::string> set_labels(VertexSet s, const std::vector<std::string>& labels);

/// Variables are named after the labels, with an "x" prefix when the label
/// is numeric: "x1*x2^2", "a*b". The unit monomial is "1".
std::string render_monomial(const Monomial& m, const std::vector<std::string>& labels);

std::string render_classification(const ClassificationReport& report,
                                  const std::vector<std::string>& labels, DocumentFormat format);

}  // namespace simis

#endif  // SIMIS_REPORT_HPP
