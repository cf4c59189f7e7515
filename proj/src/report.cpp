// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#include "simis/report.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace simis {

namespace {

using json = nlohmann::json;

std::string yes_no(bool v) { return v ? "true" : "false"; }

std::string render_sets(const std::vector<VertexSet>& sets, const std::vector<std::string>& labels) {
  if (sets.empty()) return "none";
  std::string out;
  for (VertexSet s : sets) out += (out.empty() ? "" : " ") + render_set(s, labels);
  return out;
}

json sets_json(const std::vector<VertexSet>& sets, const std::vector<std::string>& labels) {
  json out = json::array();
  for (VertexSet s : sets) out.push_back(set_labels(s, labels));
  return out;
}

}  // namespace

std::vector<std::string> set_labels(VertexSet s, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (std::size_t p : members(s)) out.push_back(labels.at(p));
  return out;
}

std::string render_set(VertexSet s, const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t p : members(s)) out += (out.size() > 1 ? " " : "") + labels.at(p);
  return out + "}";
}

std::string render_monomial(const Monomial& m, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    const std::uint32_t e = m.exponents()[i];
    if (e == 0) continue;
    const std::string& label = labels.at(i);
    const bool numeric = std::all_of(label.begin(), label.end(),
                                     [](unsigned char ch) { return std::isdigit(ch); });
    if (!out.empty()) out += "*";
    out += (numeric ? "x" : "") + label;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string render_classification(const ClassificationReport& r,
                                  const std::vector<std::string>& labels, DocumentFormat format) {
  const std::uint32_t max_i = r.powers.empty() ? 0 : r.powers.back().i;
  if (format == DocumentFormat::Data) {
    json out;
    out["id"] = r.id;
    out["vertices"] = r.vertex_count;
    out["edges"] = r.edge_count;
    out["is_graph"] = r.is_graph;
    out["alpha0"] = r.alpha0;
    out["beta0"] = r.beta0;
    out["beta1"] = r.beta1;
    out["konig"] = r.konig;
    out["connected"] = r.connected;
    out["decomposable"] = r.decomposable;
    out["decomposition"] = r.decomposition
                               ? json{{"first", set_labels(r.decomposition->first, labels)},
                                      {"second", set_labels(r.decomposition->second, labels)}}
                               : json(nullptr);
    out["decomposable_method"] = r.decomposable_method;
    out["mfmc_exact"] = r.mfmc_exact;
    json comparisons = json::array();
    for (const auto& p : r.powers) {
      comparisons.push_back({{"i", p.i},
                             {"equal", p.equal},
                             {"witness", p.witness ? json(render_monomial(*p.witness, labels))
                                                   : json(nullptr)}});
    }
    out["powers"] = {{"checked_up_to_i", max_i}, {"comparisons", comparisons}};
    out["bipartite"] = r.bipartite ? json(*r.bipartite) : json(nullptr);
    if (r.perfect) {
      const auto& d = *r.perfect;
      out["perfect"] = {
          {"odd_holes", sets_json(d.odd_holes, labels)},
          {"odd_antiholes", sets_json(d.odd_antiholes, labels)},
          {"self_complementary", sets_json(d.self_complementary, labels)},
          {"berge", d.berge},
          {"perfection", d.berge ? "perfect (via Berge)" : "not perfect (via Berge)"},
          {"clique_generators",
           d.clique_generators ? json(*d.clique_generators) : json(nullptr)}};
    } else {
      out["perfect"] = nullptr;
    }
    out["hilbert"] = {{"total", r.hilbert.total},
                      {"zero_one", r.hilbert.zero_one},
                      {"max_b", r.hilbert.max_b}};
    return out.dump(2) + "\n";
  }

  std::string out;
  auto line = [&](const std::string& key, const std::string& value) {
    out += key + ": " + value + "\n";
  };
  line("id", r.id.empty() ? "(unnamed)" : r.id);
  line("vertices", std::to_string(r.vertex_count));
  line("edges", std::to_string(r.edge_count));
  line("graph", yes_no(r.is_graph));
  line("alpha0", std::to_string(r.alpha0));
  line("beta0", std::to_string(r.beta0));
  line("beta1", std::to_string(r.beta1));
  line("konig", yes_no(r.konig));
  line("connected", yes_no(r.connected));
  std::string dec = yes_no(r.decomposable);
  if (r.decomposition) {
    dec += " " + render_set(r.decomposition->first, labels) + " + " +
           render_set(r.decomposition->second, labels);
  }
  line("decomposable", dec + " (" + r.decomposable_method + ")");
  line("mfmc exact", yes_no(r.mfmc_exact));
  for (const auto& p : r.powers) {
    line("I^" + std::to_string(p.i) + " = I^(" + std::to_string(p.i) + ")",
         p.equal ? "true" : "false, witness " + render_monomial(*p.witness, labels));
  }
  if (max_i > 0) line("powers compared", "i <= " + std::to_string(max_i) + " only");
  if (r.bipartite) line("bipartite", yes_no(*r.bipartite));
  if (r.perfect) {
    const auto& d = *r.perfect;
    line("odd holes", render_sets(d.odd_holes, labels));
    line("odd antiholes", render_sets(d.odd_antiholes, labels));
    if (!d.self_complementary.empty()) {
      line("self-complementary (listed as holes)", render_sets(d.self_complementary, labels));
    }
    line("perfect", d.berge ? "true (via Berge)" : "false (via Berge)");
    if (d.clique_generators) line("clique generators", yes_no(*d.clique_generators));
  }
  line("hilbert basis", std::to_string(r.hilbert.total) + " elements, " +
                            std::to_string(r.hilbert.zero_one) + " with 0/1 a-part, max b " +
                            std::to_string(r.hilbert.max_b));
  return out;
}

}  // namespace simis
