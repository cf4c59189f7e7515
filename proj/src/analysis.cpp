// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

#include "simis/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "simis/error.hpp"

namespace simis {

namespace {

std::vector<VertexSet> adjacency(const Clutter& g) {
  if (!is_graph(g)) throw Error(ErrorKind::NotAGraph, "the clutter has an edge of size other than 2");
  std::vector<VertexSet> adj(g.vertex_count(), 0);
  for (VertexSet e : g.edges()) {
    const auto ends = members(e);
    adj[ends[0]] |= singleton(ends[1]);
    adj[ends[1]] |= singleton(ends[0]);
  }
  return adj;
}

std::vector<VertexSet> complement(const std::vector<VertexSet>& adj) {
  const VertexSet all = full_set(adj.size());
  std::vector<VertexSet> out(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) out[v] = all & ~adj[v] & ~singleton(v);
  return out;
}

// Chordless cycles of odd length >= 5. Each cycle is grown from its least
// vertex s along induced paths through larger vertices, and recorded in the
// direction whose second vertex is smaller than its last.
class OddHoleSearch {
 public:
  explicit OddHoleSearch(const std::vector<VertexSet>& adj) : adj_(adj) {}

  std::vector<VertexSet> run() {
    for (std::size_t s = 0; s < adj_.size(); ++s) {
      start_ = s;
      allowed_ = full_set(adj_.size()) & ~full_set(s + 1);
      path_ = {s};
      extend(singleton(s), 0);
    }
    canonicalize(found_);
    return std::move(found_);
  }

 private:
  // `interior` holds path vertices other than the start and the last.
  void extend(VertexSet on_path, VertexSet interior) {
    const std::size_t last = path_.back();
    for (VertexSet rest = adj_[last] & allowed_ & ~on_path; rest; rest &= rest - 1) {
      const auto w = static_cast<std::size_t>(__builtin_ctzll(rest));
      if (adj_[w] & interior) continue;
      if (path_.size() >= 2 && (adj_[w] & singleton(start_))) {
        // w closes the cycle; it cannot be extended without a chord.
        const std::size_t length = path_.size() + 1;
        if (length >= 5 && length % 2 == 1 && path_[1] < w) found_.push_back(on_path | singleton(w));
        continue;
      }
      path_.push_back(w);
      extend(on_path | singleton(w), path_.size() > 2 ? interior | singleton(last) : interior);
      path_.pop_back();
    }
  }

  const std::vector<VertexSet>& adj_;
  std::size_t start_ = 0;
  VertexSet allowed_ = 0;
  std::vector<std::size_t> path_;
  std::vector<VertexSet> found_;
};

template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count && !failed; i = next++) fn(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

struct Box {
  std::vector<std::size_t> radix;
  std::size_t points = 1;

  explicit Box(const std::vector<std::int64_t>& bounds, std::size_t n) {
    if (bounds.size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "box needs one bound per vertex");
    }
    for (std::int64_t b : bounds) {
      if (b < 0) throw Error(ErrorKind::InvalidArgument, "negative box bound");
      radix.push_back(static_cast<std::size_t>(b) + 1);
      points *= radix.back();
      if (points > 10'000'000) throw Error(ErrorKind::InstanceTooLarge, "box has too many points");
    }
  }

  std::vector<std::int64_t> decode(std::size_t idx) const {
    std::vector<std::int64_t> a(radix.size());
    for (std::size_t i = 0; i < radix.size(); ++i) {
      a[i] = static_cast<std::int64_t>(idx % radix[i]);
      idx /= radix[i];
    }
    return a;
  }
  std::optional<std::size_t> encode(const std::vector<std::int64_t>& a) const {
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < radix.size(); ++i) {
      if (a[i] < 0 || static_cast<std::size_t>(a[i]) >= radix[i]) return std::nullopt;
      idx += static_cast<std::size_t>(a[i]) * stride;
      stride *= radix[i];
    }
    return idx;
  }
};

bool is_unit_vector(const std::vector<std::int64_t>& a) {
  return std::count(a.begin(), a.end(), 1) == 1 &&
         std::count(a.begin(), a.end(), 0) == static_cast<std::ptrdiff_t>(a.size()) - 1;
}

}  // namespace

bool is_graph(const Clutter& c) {
  return std::all_of(c.edges().begin(), c.edges().end(),
                     [](VertexSet e) { return cardinality(e) == 2; });
}

std::vector<VertexSet> find_odd_holes(const Clutter& g) {
  return OddHoleSearch(adjacency(g)).run();
}

std::vector<VertexSet> find_odd_antiholes(const Clutter& g) {
  return OddHoleSearch(complement(adjacency(g))).run();
}

bool is_berge(const Clutter& g) {
  return find_odd_holes(g).empty() && find_odd_antiholes(g).empty();
}

std::vector<VertexSet> cliques(const Clutter& g) {
  const std::vector<VertexSet> adj = adjacency(g);
  std::vector<VertexSet> out;
  // Grow each clique by vertices above its largest member.
  auto grow = [&](auto&& self, VertexSet clique, VertexSet candidates) -> void {
    out.push_back(clique);
    for (VertexSet rest = candidates; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(__builtin_ctzll(rest));
      self(self, clique | singleton(v), candidates & adj[v] & ~full_set(v + 1));
    }
  };
  for (std::size_t v = 0; v < adj.size(); ++v) grow(grow, singleton(v), adj[v] & ~full_set(v + 1));
  canonicalize(out);
  return out;
}

bool is_bipartite(const Clutter& g) {
  const std::vector<VertexSet> adj = adjacency(g);
  std::vector<int> side(adj.size(), -1);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : members(adj[v])) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool check_perfect_generators(const Clutter& g, const HilbertOptions& options) {
  if (!is_graph(g)) throw Error(ErrorKind::NotAGraph, "the clutter has an edge of size other than 2");
  if (!is_berge(g)) throw Error(ErrorKind::NotBerge, "the graph has an odd hole or odd antihole");
  std::vector<CoverVector> expected;
  for (VertexSet q : cliques(g)) {
    CoverVector v{std::vector<std::int64_t>(g.vertex_count(), 0), cardinality(q) - 1};
    for (std::size_t p : members(q)) v.a[p] = 1;
    expected.push_back(std::move(v));
  }
  std::sort(expected.begin(), expected.end());
  return hilbert_basis(simis_cone(g), options).elements == expected;
}

MainTheoremCheck check_main_theorem_detailed(const Clutter& c, const std::vector<std::int64_t>& box,
                                             unsigned jobs, const HilbertOptions& options) {
  const Box grid(box, c.vertex_count());
  const HilbertBasis basis = hilbert_basis(simis_cone(c), options);

  // Clutter side: alpha_0(C^a) and the partition search, per box point.
  std::vector<std::int64_t> alpha(grid.points, 0);
  std::vector<std::uint8_t> indecomposable(grid.points, 0);
  parallel_for(grid.points, jobs, [&](std::size_t idx) {
    if (idx == 0) return;
    const Clutter ca = parallelization(c, ParallelizationVector{grid.decode(idx)});
    alpha[idx] = static_cast<std::int64_t>(covering_number(ca));
    indecomposable[idx] = is_decomposable(ca) ? 0 : 1;
  });

  MainTheoremCheck check;
  auto fail = [&](std::string what) {
    check.holds = false;
    if (check.mismatches.size() < 16) check.mismatches.push_back(std::move(what));
  };
  for (std::size_t idx = 1; idx < grid.points; ++idx) {
    ++check.points_checked;
    const CoverVector v{grid.decode(idx), alpha[idx]};
    const bool in_basis = basis.contains(v);
    if (in_basis != static_cast<bool>(indecomposable[idx])) {
      fail(to_string(v) + (in_basis ? " is in the Hilbert basis but C^a is decomposable"
                                    : " is missing from the Hilbert basis but C^a is indecomposable"));
    }
  }
  for (const CoverVector& h : basis.elements) {
    const auto idx = grid.encode(h.a);
    if (!idx || *idx == 0) continue;
    if (h.b == alpha[*idx]) continue;
    if (h.b == 0 && is_unit_vector(h.a)) continue;
    fail(to_string(h) + " is in the Hilbert basis but alpha_0(C^a) = " + std::to_string(alpha[*idx]));
  }
  return check;
}

bool check_main_theorem(const Clutter& c, const std::vector<std::int64_t>& box, unsigned jobs,
                        const HilbertOptions& options) {
  return check_main_theorem_detailed(c, box, jobs, options).holds;
}

bool all_parallelizations_konig(const Clutter& c, const std::vector<std::int64_t>& box) {
  const Box grid(box, c.vertex_count());
  for (std::size_t idx = 1; idx < grid.points; ++idx) {
    if (!has_konig(parallelization(c, ParallelizationVector{grid.decode(idx)}))) return false;
  }
  return true;
}

ClassificationReport classify(const Clutter& c, const ClassifyOptions& options) {
  ClassificationReport r;
  r.id = options.id;
  r.vertex_count = c.vertex_count();
  r.edge_count = c.edge_count();
  r.is_graph = is_graph(c);
  r.alpha0 = covering_number(c);
  r.beta0 = stability_number(c);
  r.beta1 = matching_number(c);
  r.konig = has_konig(c);
  r.connected = is_connected(c);

  const HilbertBasis basis = hilbert_basis(simis_cone(c), options.hilbert);
  r.hilbert.total = basis.size();
  r.hilbert.zero_one = zero_one_supports(basis).size();
  for (const auto& h : basis.elements) r.hilbert.max_b = std::max(r.hilbert.max_b, h.b);
  r.mfmc_exact = mfmc_exact(basis);

  if (c.vertex_count() <= kMaxDecomposableSearch) {
    r.decomposition = is_decomposable(c);
    r.decomposable = r.decomposition.has_value();
    r.decomposable_method = "partition search";
  } else {
    const CoverVector whole{std::vector<std::int64_t>(c.vertex_count(), 1),
                            static_cast<std::int64_t>(r.alpha0)};
    r.decomposable = !basis.contains(whole);
    r.decomposable_method = "Hilbert basis";
  }

  if (options.max_power_i > 0) r.powers = compare_powers(c, options.max_power_i);

  if (r.is_graph) {
    r.bipartite = is_bipartite(c);
    PerfectDiagnosis d;
    d.odd_holes = find_odd_holes(c);
    for (VertexSet s : find_odd_antiholes(c)) {
      (cardinality(s) == 5 ? d.self_complementary : d.odd_antiholes).push_back(s);
    }
    d.berge = d.odd_holes.empty() && d.odd_antiholes.empty() && d.self_complementary.empty();
    if (d.berge) {
      d.clique_generators = check_perfect_generators(c, options.hilbert);
      if (!*d.clique_generators) {
        throw Error(ErrorKind::InternalConsistency,
                    "Berge graph whose Hilbert basis is not the clique set");
      }
    }
    r.perfect = std::move(d);
  }
  return r;
}

}  // namespace simis
