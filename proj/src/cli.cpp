// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#include "simis/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <new>

#include <CLI11.hpp>
#include <json.hpp>

#include "simis/analysis.hpp"
#include "simis/cone.hpp"
#include "simis/covers.hpp"
#include "simis/document.hpp"
#include "simis/error.hpp"
#include "simis/ideals.hpp"
#include "simis/report.hpp"

namespace simis {

namespace {

using json = nlohmann::json;

// Malformed option values that CLI11 cannot reject on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_csv(const std::string& text, const std::string& option) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 0) {
      throw UsageError(option + " expects comma-separated nonnegative integers, got '" + text + "'");
    }
    out.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return out;
}

std::string render_vector(const CoverVector& v) { return to_string(v); }

json cover_json(const CoverVector& v) { return {{"a", v.a}, {"b", v.b}}; }

class Command {
 public:
  Command(std::ostream& out, DocumentFormat format) : out_(out), format_(format) {}

  bool data() const { return format_ == DocumentFormat::Data; }
  std::ostream& out() { return out_; }
  DocumentFormat format() const { return format_; }

 private:
  std::ostream& out_;
  DocumentFormat format_;
};

void write_ideal(Command& cmd, const std::vector<std::string>& labels, const MonomialIdeal& ideal, const std::string& what,
                 const std::string& key, std::uint32_t exponent) {
  if (cmd.data()) {
    json gens = json::array();
    for (const auto& g : ideal.generators()) {
      gens.push_back({{"exponents", g.exponents()}, {"monomial", render_monomial(g, labels)}});
    }
    cmd.out() << json{{key, exponent}, {"generators", gens}}.dump(2) << "\n";
    return;
  }
  cmd.out() << "# " << what << ": " << ideal.generators().size() << " minimal generators\n";
  for (const auto& g : ideal.generators()) cmd.out() << render_monomial(g, labels) << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex covers, Simis cones and symbolic powers of edge ideals of clutters."};
  app.name("simis");
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "text";
  std::string input_format = "auto";
  unsigned jobs = 1;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "data"}))
      ->capture_default_str();
  app.add_option("--input-format", input_format, "Input format (auto detects JSON by a leading '{')")
      ->check(CLI::IsMember({"auto", "text", "data"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads for parallel checks")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();

  std::string file;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Clutter file ('-' for standard input)")->required();
    return sub;
  };

  CLI::App* blocker_cmd = add("blocker", "Minimal vertex covers");
  CLI::App* alpha_cmd = add("alpha", "Covering, stability and matching numbers");
  CLI::App* parallelize_cmd = add("parallelize", "The parallelization C^a");
  std::string a_csv;
  parallelize_cmd->add_option("--a", a_csv, "Multiplicities, one per vertex")->required();
  CLI::App* hilbert_cmd = add("hilbert", "Hilbert basis of the Simis cone");
  bool count_only = false, brute = false;
  std::string box_csv;
  hilbert_cmd->add_flag("--count", count_only, "Print only the number of elements");
  hilbert_cmd->add_option("--box", box_csv, "Keep elements with a <= box (n entries, or n+1 to bound b)");
  hilbert_cmd->add_flag("--brute", brute, "Use the exhaustive irreducibility search (needs --box)");
  CLI::App* indecomposables_cmd = add("indecomposables", "Indecomposable parallelizations");
  CLI::App* subclutters_cmd = add("subclutters", "Indecomposable induced subclutters");
  CLI::App* symbolic_cmd = add("symbolic-power", "Minimal generators of I^(b)");
  std::uint32_t b = 1;
  symbolic_cmd->add_option("--b", b, "Exponent")->required()->check(CLI::Range(1u, 64u));
  CLI::App* power_cmd = add("power", "Minimal generators of I^i");
  std::uint32_t i_power = 1;
  power_cmd->add_option("--i", i_power, "Exponent")->required()->check(CLI::Range(1u, 64u));
  CLI::App* compare_cmd = add("compare-powers", "I^i against I^(i) for i = 1..k");
  std::uint32_t max_i = 1;
  compare_cmd->add_option("--max-i", max_i, "Largest exponent compared")
      ->required()
      ->check(CLI::Range(1u, 64u));
  CLI::App* classify_cmd = add("classify", "Classification report");
  std::uint32_t classify_max_i = 2;
  classify_cmd->add_option("--max-i", classify_max_i, "Largest exponent for the power comparison")
      ->check(CLI::Range(0u, 64u))
      ->capture_default_str();
  CLI::App* theorem_cmd = add("check-theorem", "Cross-check the cone against partition search");
  std::string theorem_box;
  theorem_cmd->add_option("--box", theorem_box, "Bound on a, one entry per vertex")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::string text = read_input(file);
    const DocumentFormat in_format = input_format == "auto"   ? detect_format(text)
                                     : input_format == "data" ? DocumentFormat::Data
                                                              : DocumentFormat::Text;
    const ClutterDocument doc = parse_clutter(text, in_format);
    const Clutter clutter = to_clutter(doc);
    const auto& labels = doc.vertices;
    const std::size_t n = clutter.vertex_count();
    Command cmd(out, format == "data" ? DocumentFormat::Data : DocumentFormat::Text);
    HilbertOptions hopts;

    if (blocker_cmd->parsed()) {
      const ClutterDocument covers =
          to_document(blocker(clutter), labels, "blocker(" + doc.name + ")");
      if (!cmd.data()) out << "# " << covers.edges.size() << " minimal vertex covers\n";
      out << serialize(covers, cmd.format());
    } else if (alpha_cmd->parsed()) {
      const std::size_t a0 = covering_number(clutter);
      const std::size_t b0 = stability_number(clutter);
      const std::size_t b1 = matching_number(clutter);
      const bool konig = has_konig(clutter);
      if (cmd.data()) {
        out << json{{"alpha0", a0}, {"beta0", b0}, {"beta1", b1}, {"konig", konig}}.dump(2) << "\n";
      } else {
        out << "alpha0: " << a0 << "\nbeta0: " << b0 << "\nbeta1: " << b1
            << "\nkonig: " << (konig ? "true" : "false") << "\n";
      }
    } else if (parallelize_cmd->parsed()) {
      const auto a = parse_csv(a_csv, "--a");
      const Clutter ca = parallelization(clutter, ParallelizationVector{a});
      std::string name = doc.name + "^(";
      for (std::size_t k = 0; k < a.size(); ++k) name += (k ? "," : "") + std::to_string(a[k]);
      out << serialize(to_document(ca, labels, name + ")"), cmd.format());
    } else if (hilbert_cmd->parsed()) {
      std::vector<CoverVector> elements;
      std::optional<std::vector<std::int64_t>> box;
      if (!box_csv.empty()) {
        box = parse_csv(box_csv, "--box");
        if (box->size() != n && box->size() != n + 1) {
          throw UsageError("--box needs " + std::to_string(n) + " or " + std::to_string(n + 1) +
                           " entries");
        }
      }
      if (brute) {
        if (!box) throw UsageError("--brute needs --box");
        std::vector<std::int64_t> full = *box;
        // Points with a <= box have b <= the cover value of the box itself.
        if (full.size() == n) {
          full.push_back(cover_value(clutter, std::vector<std::int64_t>(box->begin(), box->end())));
        }
        for (auto& p : hilbert_basis_bruteforce(simis_cone(clutter), full)) {
          CoverVector v;
          v.b = p.back();
          p.pop_back();
          v.a = std::move(p);
          elements.push_back(std::move(v));
        }
        std::sort(elements.begin(), elements.end());
      } else {
        for (auto& h : hilbert_basis(simis_cone(clutter), hopts).elements) {
          bool inside = true;
          for (std::size_t k = 0; box && k < box->size(); ++k) {
            inside = inside && (k < n ? h.a[k] : h.b) <= (*box)[k];
          }
          if (inside) elements.push_back(std::move(h));
        }
      }
      if (count_only) {
        out << (cmd.data() ? json{{"count", elements.size()}}.dump(2) : std::to_string(elements.size()))
            << "\n";
      } else if (cmd.data()) {
        json list = json::array();
        for (const auto& v : elements) list.push_back(cover_json(v));
        out << json{{"vertices", labels}, {"count", elements.size()}, {"elements", list}}.dump(2)
            << "\n";
      } else {
        out << "# " << elements.size() << " elements (a;b), coordinates in vertex order:";
        for (const auto& l : labels) out << " " << l;
        out << "\n";
        for (const auto& v : elements) out << render_vector(v) << "\n";
      }
    } else if (indecomposables_cmd->parsed()) {
      const auto list = indecomposable_parallelizations(clutter, hopts);
      if (cmd.data()) {
        json arr = json::array();
        for (const auto& p : list) arr.push_back({{"a", p.a.entries}, {"alpha0", p.covering_number}});
        out << json{{"vertices", labels}, {"parallelizations", arr}}.dump(2) << "\n";
      } else {
        out << "# " << list.size() << " indecomposable parallelizations\n";
        for (const auto& p : list) {
          std::string a;
          for (std::size_t k = 0; k < p.a.entries.size(); ++k) {
            a += (k ? "," : "") + std::to_string(p.a.entries[k]);
          }
          out << "a=(" << a << ") alpha0=" << p.covering_number << "\n";
        }
      }
    } else if (subclutters_cmd->parsed()) {
      const auto list = indecomposable_induced_subclutters(clutter, hopts);
      if (cmd.data()) {
        json arr = json::array();
        for (const auto& s : list) {
          arr.push_back({{"vertices", set_labels(s.vertices, labels)}, {"alpha0", s.covering_number}});
        }
        out << json{{"subclutters", arr}}.dump(2) << "\n";
      } else {
        out << "# " << list.size() << " indecomposable induced subclutters\n";
        for (const auto& s : list) {
          out << render_set(s.vertices, labels) << " alpha0=" << s.covering_number << "\n";
        }
      }
    } else if (symbolic_cmd->parsed()) {
      write_ideal(cmd, labels, symbolic_power(clutter, b), "I^(" + std::to_string(b) + ")", "b", b);
    } else if (power_cmd->parsed()) {
      write_ideal(cmd, labels, power(edge_ideal(clutter), i_power), "I^" + std::to_string(i_power),
                  "i", i_power);
    } else if (compare_cmd->parsed()) {
      const auto cmp = compare_powers(clutter, max_i);
      if (cmd.data()) {
        json arr = json::array();
        for (const auto& c : cmp) {
          arr.push_back({{"i", c.i},
                         {"equal", c.equal},
                         {"witness", c.witness ? json(render_monomial(*c.witness, labels))
                                               : json(nullptr)}});
        }
        out << json{{"checked_up_to_i", max_i}, {"comparisons", arr}}.dump(2) << "\n";
      } else {
        out << "# I^i against I^(i) for i = 1.." << max_i << "; nothing is claimed beyond i = "
            << max_i << "\n";
        for (const auto& c : cmp) {
          out << "i=" << c.i << ": "
              << (c.equal ? "equal" : "differ, witness " + render_monomial(*c.witness, labels))
              << "\n";
        }
      }
    } else if (classify_cmd->parsed()) {
      ClassifyOptions copts;
      copts.id = doc.name;
      copts.max_power_i = classify_max_i;
      copts.hilbert = hopts;
      out << render_classification(classify(clutter, copts), labels, cmd.format());
    } else if (theorem_cmd->parsed()) {
      const auto box = parse_csv(theorem_box, "--box");
      const MainTheoremCheck check = check_main_theorem_detailed(clutter, box, jobs, hopts);
      if (cmd.data()) {
        out << json{{"holds", check.holds},
                    {"points_checked", check.points_checked},
                    {"mismatches", check.mismatches}}
                   .dump(2)
            << "\n";
      } else {
        out << "holds: " << (check.holds ? "true" : "false") << "\n"
            << "points checked: " << check.points_checked << "\n";
        for (const auto& m : check.mismatches) out << "mismatch: " << m << "\n";
      }
      if (!check.holds) {
        err << "error: InternalConsistency: the cone and the partition search disagree\n";
        return kExitDomainError;
      }
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const WorkBudgetError& e) {
    err << "error: " << e.what() << " (completed "
        << e.halfspaces_done << " of " << e.halfspaces_total << " halfspaces; partial basis size "
        << e.partial_size << "; raise SIMIS_WORK_BUDGET to continue)\n";
    return kExitWorkBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitDomainError;
  }
}

}  // namespace simis
