// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#include "simis/document.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <json.hpp>

#include "simis/error.hpp"

namespace simis {

namespace {

using json = nlohmann::json;

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::string at(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

bool is_blank(char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; }

std::vector<Token> tokenize(std::string_view text, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_blank(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_blank(text[i])) ++i;
    if (i > start) out.push_back({std::string(text.substr(start, i - start)), offset + start + 1});
  }
  return out;
}

// Label bookkeeping shared by both formats. `where` renders a position.
class Builder {
 public:
  void set_vertices(const std::vector<std::string>& labels,
                    const std::vector<std::string>& where) {
    declared_ = true;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!index_.emplace(labels[i], doc_.vertices.size()).second) {
        throw Error(ErrorKind::ParseError, where[i] + "vertex '" + labels[i] + "' declared twice");
      }
      doc_.vertices.push_back(labels[i]);
    }
  }

  void add_edge(const std::vector<std::string>& labels, const std::vector<std::string>& where,
                const std::string& edge_where) {
    if (labels.empty()) throw Error(ErrorKind::EmptyEdge, edge_where + "edge has no vertices");
    VertexSet mask = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto it = index_.find(labels[i]);
      if (it == index_.end()) {
        if (declared_) {
          throw Error(ErrorKind::UnknownVertex, where[i] + "vertex '" + labels[i] + "' is not declared");
        }
        it = index_.emplace(labels[i], doc_.vertices.size()).first;
        doc_.vertices.push_back(labels[i]);
      }
      if (it->second >= kMaxVertices) {
        throw Error(ErrorKind::InstanceTooLarge, where[i] + "more than 64 vertices");
      }
      if (mask & singleton(it->second)) {
        throw Error(ErrorKind::ParseError, where[i] + "vertex '" + labels[i] + "' repeated in an edge");
      }
      mask |= singleton(it->second);
    }
    doc_.edges.push_back(labels);
    masks_.push_back(mask);
    edge_where_.push_back(edge_where);
  }

  ClutterDocument finish(std::string name, const std::string& end_where) {
    if (doc_.vertices.empty()) throw Error(ErrorKind::ParseError, end_where + "the clutter has no vertices");
    if (doc_.vertices.size() > kMaxVertices) {
      throw Error(ErrorKind::InstanceTooLarge, end_where + "more than 64 vertices");
    }
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      for (std::size_t j = 0; j < masks_.size(); ++j) {
        if (i != j && masks_[i] != masks_[j] && (masks_[i] & masks_[j]) == masks_[i]) {
          throw Error(ErrorKind::AntichainViolation,
                      edge_where_[j] + "edge contains the edge at " +
                          edge_where_[i].substr(0, edge_where_[i].size() - 2));
        }
      }
    }
    doc_.name = std::move(name);
    return std::move(doc_);
  }

 private:
  ClutterDocument doc_;
  bool declared_ = false;
  std::map<std::string, std::size_t> index_;
  std::vector<VertexSet> masks_;
  std::vector<std::string> edge_where_;
};

ClutterDocument parse_text(std::string_view input) {
  Builder builder;
  std::string name;
  bool have_name = false, have_vertices = false, have_edges = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= input.size()) {
    const std::size_t end = std::min(input.find('\n', pos), input.size());
    std::string_view line = input.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::size_t first = 0;
    while (first < line.size() && is_blank(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;

    const std::size_t colon = line.find(':', first);
    const std::string key(line.substr(first, colon == std::string_view::npos ? line.size() - first
                                                                             : colon - first));
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, at(line_no, first + 1) + "expected 'name:', 'vertices:' or 'edge:'");
    }
    const std::string_view rest = line.substr(colon + 1);
    const std::vector<Token> tokens = tokenize(rest, colon + 1);
    std::vector<std::string> labels, where;
    for (const Token& t : tokens) {
      labels.push_back(t.text);
      where.push_back(at(line_no, t.column));
    }
    if (key == "name") {
      if (have_name) throw Error(ErrorKind::ParseError, at(line_no, first + 1) + "second 'name:' line");
      have_name = true;
      std::size_t a = 0, b = rest.size();
      while (a < b && is_blank(rest[a])) ++a;
      while (b > a && is_blank(rest[b - 1])) --b;
      name = std::string(rest.substr(a, b - a));
    } else if (key == "vertices") {
      if (have_vertices) {
        throw Error(ErrorKind::ParseError, at(line_no, first + 1) + "second 'vertices:' line");
      }
      if (have_edges) {
        throw Error(ErrorKind::ParseError, at(line_no, first + 1) + "'vertices:' must precede the edges");
      }
      have_vertices = true;
      builder.set_vertices(labels, where);
    } else if (key == "edge") {
      have_edges = true;
      builder.add_edge(labels, where, at(line_no, first + 1));
    } else {
      throw Error(ErrorKind::ParseError, at(line_no, first + 1) + "unknown directive '" + key + "'");
    }
  }
  return builder.finish(std::move(name), "line " + std::to_string(line_no) + ": ");
}

std::string label_of(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error(ErrorKind::ParseError, where + ": vertex labels must be strings or integers");
}

ClutterDocument parse_data(std::string_view input) {
  json root;
  try {
    root = json::parse(input.begin(), input.end());
  } catch (const json::parse_error& e) {
    // Convert the byte offset into a line and column.
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, input.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (input[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError, at(line, column) + "malformed JSON");
  }
  if (!root.is_object()) throw Error(ErrorKind::ParseError, "document: expected a JSON object");
  for (const auto& [key, value] : root.items()) {
    (void)value;
    if (key != "name" && key != "vertices" && key != "edges") {
      throw Error(ErrorKind::ParseError, "document: unknown key '" + key + "'");
    }
  }
  Builder builder;
  std::string name;
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw Error(ErrorKind::ParseError, "name: expected a string");
    name = root["name"].get<std::string>();
  }
  if (root.contains("vertices")) {
    const json& vs = root["vertices"];
    if (!vs.is_array()) throw Error(ErrorKind::ParseError, "vertices: expected an array");
    std::vector<std::string> labels, where;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      where.push_back("vertices[" + std::to_string(i) + "]: ");
      labels.push_back(label_of(vs[i], where.back()));
    }
    builder.set_vertices(labels, where);
  }
  if (root.contains("edges")) {
    const json& es = root["edges"];
    if (!es.is_array()) throw Error(ErrorKind::ParseError, "edges: expected an array");
    for (std::size_t k = 0; k < es.size(); ++k) {
      const std::string edge_where = "edges[" + std::to_string(k) + "]: ";
      if (!es[k].is_array()) throw Error(ErrorKind::ParseError, edge_where + "expected an array");
      std::vector<std::string> labels, where;
      for (std::size_t i = 0; i < es[k].size(); ++i) {
        where.push_back("edges[" + std::to_string(k) + "][" + std::to_string(i) + "]: ");
        labels.push_back(label_of(es[k][i], where.back()));
      }
      builder.add_edge(labels, where, edge_where);
    }
  }
  return builder.finish(std::move(name), "document: ");
}

void check_text_label(const std::string& label) {
  if (label.empty() || label.find_first_of(" \t\r\n") != std::string::npos || label[0] == '#') {
    throw Error(ErrorKind::InvalidArgument,
                "label '" + label + "' cannot be written in the text format");
  }
}

}  // namespace

DocumentFormat detect_format(std::string_view input) {
  for (char ch : input) {
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') continue;
    return ch == '{' ? DocumentFormat::Data : DocumentFormat::Text;
  }
  return DocumentFormat::Text;
}

ClutterDocument parse_clutter(std::string_view input, DocumentFormat format) {
  return format == DocumentFormat::Data ? parse_data(input) : parse_text(input);
}

ClutterDocument parse_clutter(std::string_view input) {
  return parse_clutter(input, detect_format(input));
}

std::string serialize(const ClutterDocument& doc, DocumentFormat format) {
  if (format == DocumentFormat::Data) {
    json root = json::object();
    root["name"] = doc.name;
    root["vertices"] = doc.vertices;
    root["edges"] = doc.edges;
    return root.dump(2) + "\n";
  }
  if (doc.name.find_first_of("\r\n") != std::string::npos ||
      (!doc.name.empty() && (is_blank(doc.name.front()) || is_blank(doc.name.back())))) {
    throw Error(ErrorKind::InvalidArgument, "name cannot be written in the text format");
  }
  std::string out;
  if (!doc.name.empty()) out += "name: " + doc.name + "\n";
  out += "vertices:";
  for (const auto& v : doc.vertices) {
    check_text_label(v);
    out += " " + v;
  }
  out += "\n";
  for (const auto& e : doc.edges) {
    out += "edge:";
    for (const auto& v : e) {
      check_text_label(v);
      out += " " + v;
    }
    out += "\n";
  }
  return out;
}

Clutter to_clutter(const ClutterDocument& doc) {
  std::map<std::string, std::uint32_t> index;
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
    index[doc.vertices[i]] = static_cast<std::uint32_t>(i + 1);
    vertices.push_back({static_cast<std::uint32_t>(i + 1), 1});
  }
  std::vector<std::vector<VertexId>> edges;
  for (const auto& e : doc.edges) {
    std::vector<VertexId> edge;
    for (const auto& label : e) {
      auto it = index.find(label);
      if (it == index.end()) throw Error(ErrorKind::UnknownVertex, "vertex '" + label + "' is not declared");
      edge.push_back({it->second, 1});
    }
    edges.push_back(std::move(edge));
  }
  return Clutter(std::move(vertices), std::move(edges));
}

ClutterDocument to_document(const Clutter& c, const std::vector<std::string>& base_labels,
                            std::string name) {
  ClutterDocument doc;
  doc.name = std::move(name);
  for (const VertexId& v : c.vertices()) {
    if (v.base == 0 || v.base > base_labels.size()) {
      throw Error(ErrorKind::UnknownVertex, "vertex " + to_string(v) + " has no label");
    }
    std::string label = base_labels[v.base - 1];
    if (v.copy > 1) label += "^" + std::to_string(v.copy);
    doc.vertices.push_back(std::move(label));
  }
  for (VertexSet e : c.edges()) {
    std::vector<std::string> edge;
    for (std::size_t p : members(e)) edge.push_back(doc.vertices[p]);
    doc.edges.push_back(std::move(edge));
  }
  return doc;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace simis
