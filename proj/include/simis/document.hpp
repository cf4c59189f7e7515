// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

// Clutter documents: a labelled vertex list plus edges, read from the line
// format
//
//   # comment
//   name: c5
//   vertices: 1 2 3 4 5
//   edge: 1 2
//   ...
//
// or from JSON {"name": ..., "vertices": [...], "edges": [[...], ...]}.
// Without a vertex list the vertices are the edge labels in order of first
// appearance.

#ifndef SIMIS_DOCUMENT_HPP
#define SIMIS_DOCUMENT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "simis/clutter.hpp"

namespace simis {

struct ClutterDocument {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;

  friend bool operator==(const ClutterDocument&, const ClutterDocument&) = default;
};

enum class DocumentFormat { Text, Data };

/// Picks Data when the first non-blank character is '{'.
DocumentFormat detect_format(std::string_view input);

/// Validates labels (unique, declared, no repeats inside an edge), at least
/// one vertex, nonempty edges and the antichain condition. Errors carry
/// "line L, column C" positions.
ClutterDocument parse_clutter(std::string_view input, DocumentFormat format);
ClutterDocument parse_clutter(std::string_view input);

std::string serialize(const ClutterDocument& doc, DocumentFormat format);

/// Vertex i of the document becomes VertexId{i + 1, 1}.
Clutter to_clutter(const ClutterDocument& doc);

/// Labels a clutter whose vertices are (base, copy) pairs over `base_labels`:
/// copy 1 keeps the label, copy j >= 2 becomes "label^j".
ClutterDocument to_document(const Clutter& c, const std::vector<std::string>& base_labels,
                            std::string name);

/// Reads a file ("-" for standard input).
std::string read_input(const std::string& path);

}  // namespace simis

#endif  // SIMIS_DOCUMENT_HPP
