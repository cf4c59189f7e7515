// Copyright 2026 The simis Authors
// SPDX-License-Identifier: Apache-2.0

// Hilbert basis by successive halfspace cuts.
//
// Let B be the Hilbert basis of a pointed cone K and l a linear form. The
// basis of K+ = K ∩ {l >= 0} is obtained by closing B+ = {x in B : l(x) >= 0}
// and B- = {x in B : l(x) <= 0} under sums x + y with l(x) > 0 > l(y), keeping
// a sum in B+ (B-) only when no element of B+ (B-) reduces it inside K+ (K-).
// Sums are generated by total degree so that a generator, once accepted, is
// never reduced by a later one.
//
// Each generator is stored as a row of linear-form values: its coordinates,
// then its value under every cut processed so far, then zeros. Since K lies
// in the orthant, y reduces z in K+ exactly when the row of y is
// componentwise <= the row of z, which is the kernels' dominance test. For
// K- the current cut's column is stored negated.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "simis/cone.hpp"
#include "simis/kernels.hpp"

namespace simis {

std::uint64_t default_work_budget() {
  if (const char* env = std::getenv("SIMIS_WORK_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultWorkBudget;
}

namespace {

class RowMatrix {
 public:
  explicit RowMatrix(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return degrees_.size(); }
  const std::int64_t* row(std::size_t i) const { return data_.data() + i * width_; }
  std::int64_t* row(std::size_t i) { return data_.data() + i * width_; }
  const std::int64_t* data() const { return data_.data(); }
  std::int64_t degree(std::size_t i) const { return degrees_[i]; }

  std::size_t push(const std::int64_t* values, std::int64_t degree) {
    data_.insert(data_.end(), values, values + width_);
    degrees_.push_back(degree);
    return degrees_.size() - 1;
  }

 private:
  std::size_t width_;
  std::vector<std::int64_t> data_;
  std::vector<std::int64_t> degrees_;
};

bool is_unit(const std::vector<std::int64_t>& v, std::size_t* index) {
  std::size_t ones = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 1) {
      ++ones;
      *index = i;
    } else if (v[i] != 0) {
      return false;
    }
  }
  return ones == 1;
}

class Completion {
 public:
  Completion(std::size_t dimension, std::vector<std::vector<std::int64_t>> cuts,
             const HilbertOptions& options, HilbertStats* stats)
      : d_(dimension),
        cuts_(std::move(cuts)),
        width_(kernels::padded_width(dimension + cuts_.size())),
        options_(options),
        stats_(stats),
        k_(kernels::active()),
        basis_(width_) {
    std::vector<std::int64_t> row(width_, 0);
    for (std::size_t i = 0; i < d_; ++i) {
      std::fill(row.begin(), row.end(), 0);
      row[i] = 1;
      basis_.push(row.data(), 1);
    }
  }

  RowMatrix run() {
    for (std::size_t k = 0; k < cuts_.size(); ++k) cut(k);
    return std::move(basis_);
  }

 private:
  void cut(std::size_t k) {
    const std::size_t col = d_ + k;
    const auto& normal = cuts_[k];
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      std::int64_t value = 0;
      if (!k_.dot_checked(basis_.row(i), normal.data(), d_, &value)) overflow();
      basis_.row(i)[col] = value;
    }

    // plus: reducers for K+ (l >= 0). minus: reducers for K- (l <= 0), with
    // column `col` negated. Sum partners are grouped by degree.
    RowMatrix plus(width_), minus(width_);
    std::map<std::int64_t, std::vector<std::size_t>> pos_by_degree, neg_by_degree;

    std::vector<std::size_t> order(basis_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return basis_.degree(x) < basis_.degree(y);
    });
    std::vector<std::int64_t> scratch(width_);
    auto add_generator = [&](const std::int64_t* values, std::int64_t degree) {
      const std::int64_t l = values[col];
      if (l >= 0) {
        const std::size_t idx = plus.push(values, degree);
        if (l > 0) pos_by_degree[degree].push_back(idx);
      }
      if (l <= 0) {
        std::copy(values, values + width_, scratch.begin());
        scratch[col] = -l;
        const std::size_t idx = minus.push(scratch.data(), degree);
        if (l < 0) neg_by_degree[degree].push_back(idx);
      }
    };
    for (std::size_t i : order) add_generator(basis_.row(i), basis_.degree(i));

    if (!pos_by_degree.empty() && !neg_by_degree.empty()) {
      std::vector<std::int64_t> sum(width_), flipped(width_);
      std::vector<std::vector<std::int64_t>> level;
      const std::int64_t first = pos_by_degree.begin()->first + neg_by_degree.begin()->first;
      for (std::int64_t degree = first;
           degree <= pos_by_degree.rbegin()->first + neg_by_degree.rbegin()->first; ++degree) {
        level.clear();
        const std::size_t plus_limit = plus.size();
        const std::size_t minus_limit = minus.size();
        for (const auto& [dp, pos_list] : pos_by_degree) {
          if (dp >= degree) break;
          auto it = neg_by_degree.find(degree - dp);
          if (it == neg_by_degree.end()) continue;
          for (std::size_t x : pos_list) {
            for (std::size_t y : it->second) {
              // minus rows hold -l(y) in `col`; restore the sign for the sum.
              std::copy(minus.row(y), minus.row(y) + width_, flipped.begin());
              flipped[col] = -flipped[col];
              if (!k_.add_checked(plus.row(x), flipped.data(), sum.data(), width_)) overflow();
              if (stats_) ++stats_->candidates;
              const std::int64_t l = sum[col];
              bool keep;
              if (l >= 0) {
                keep = k_.find_dominated_row(plus.data(), plus_limit, width_, sum.data()) ==
                       plus_limit;
              } else {
                std::copy(sum.begin(), sum.end(), flipped.begin());
                flipped[col] = -l;
                keep = k_.find_dominated_row(minus.data(), minus_limit, width_,
                                             flipped.data()) == minus_limit;
              }
              if (keep) level.push_back(sum);
            }
          }
        }
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        for (const auto& values : level) {
          if (++accepted_ > options_.work_budget) {
            throw WorkBudgetError(
                "Hilbert basis completion exceeded its budget of " +
                    std::to_string(options_.work_budget) + " steps while adding cut " +
                    std::to_string(k + 1) + " of " + std::to_string(cuts_.size()) + " (" +
                    std::to_string(plus.size()) + " generators on the nonnegative side)",
                k, cuts_.size(), plus.size());
          }
          if (stats_) stats_->accepted = accepted_;
          add_generator(values.data(), degree);
        }
        if (stats_) stats_->peak_size = std::max(stats_->peak_size, plus.size() + minus.size());
      }
    }
    basis_ = std::move(plus);
  }

  [[noreturn]] void overflow() const {
    throw Error(ErrorKind::ArithmeticOverflow, "64-bit overflow during Hilbert basis completion");
  }

  std::size_t d_;
  std::vector<std::vector<std::int64_t>> cuts_;
  std::size_t width_;
  const HilbertOptions& options_;
  HilbertStats* stats_;
  const kernels::KernelTable& k_;
  RowMatrix basis_;
  std::uint64_t accepted_ = 0;
};

}  // namespace

HilbertBasis hilbert_basis(const SimisCone& cone, const HilbertOptions& options,
                           HilbertStats* stats) {
  const std::size_t d = cone.dimension;
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "cone of dimension 0");
  std::vector<bool> has_unit(d, false);
  std::vector<std::vector<std::int64_t>> cuts;
  for (const auto& normal : cone.normals) {
    if (normal.size() != d) throw Error(ErrorKind::DimensionMismatch, "normal of wrong length");
    std::size_t index = 0;
    if (is_unit(normal, &index)) {
      has_unit[index] = true;
    } else {
      cuts.push_back(normal);
    }
  }
  if (std::find(has_unit.begin(), has_unit.end(), false) != has_unit.end()) {
    throw Error(ErrorKind::InvalidArgument, "the cone must lie in the nonnegative orthant");
  }
  if (stats) *stats = {};
  Completion completion(d, std::move(cuts), options, stats);
  const RowMatrix rows = completion.run();

  HilbertBasis basis;
  basis.elements.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CoverVector v;
    v.a.assign(rows.row(i), rows.row(i) + d - 1);
    v.b = rows.row(i)[d - 1];
    basis.elements.push_back(std::move(v));
  }
  std::sort(basis.elements.begin(), basis.elements.end());
  return basis;
}

}  // namespace simis
