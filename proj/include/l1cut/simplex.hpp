// Copyright 2026 The l1cut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense two-phase primal simplex over exact rationals.
//
// Bland's smallest-index rule picks both the entering and the leaving
// variable, which guarantees termination without perturbation. Intended for
// desk-sized problems (a few hundred rows, a few thousand columns).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "l1cut/error.hpp"
#include "l1cut/rational.hpp"

namespace l1cut::lp {

enum class Relation { less_equal, greater_equal, equal };

struct Constraint {
  std::vector<Rat> coefficients;
  Relation relation;
  Rat rhs;
};

/// minimize objective . x  subject to the constraints and x >= 0.
struct Problem {
  std::vector<Rat> objective;
  std::vector<Constraint> constraints;
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
  Status status = Status::infeasible;
  Rat objective_value;
  std::vector<Rat> primal;
  /// One multiplier per constraint with objective - A^T dual >= 0 on every
  /// column; nonnegative on >= rows and nonpositive on <= rows.
  std::vector<Rat> dual;
  std::size_t pivots = 0;
};

namespace detail {

class Tableau {
 public:
  explicit Tableau(const Problem& problem) : structural_(problem.objective.size()) {
    const std::size_t m = problem.constraints.size();
    // Column layout: structural | one auxiliary per row (slack or surplus) | artificials.
    std::vector<Relation> relations;
    relations.reserve(m);
    row_sign_.assign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = problem.constraints[i];
      if (c.coefficients.size() != structural_) {
        throw InputError("constraint " + std::to_string(i) + " has the wrong number of coefficients");
      }
      Relation relation = c.relation;
      if (c.rhs < 0) {
        row_sign_[i] = -1;
        if (relation == Relation::less_equal) {
          relation = Relation::greater_equal;
        } else if (relation == Relation::greater_equal) {
          relation = Relation::less_equal;
        }
      }
      relations.push_back(relation);
    }

    const std::size_t aux_begin = structural_;
    std::size_t artificial_count = 0;
    for (Relation r : relations) {
      if (r != Relation::less_equal) ++artificial_count;
    }
    artificial_begin_ = aux_begin + m;
    columns_ = artificial_begin_ + artificial_count;

    rows_.assign(m, std::vector<Rat>(columns_ + 1, Rat(0)));
    basis_.assign(m, 0);
    identity_column_.assign(m, 0);
    std::size_t next_artificial = artificial_begin_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = problem.constraints[i];
      auto& row = rows_[i];
      for (std::size_t j = 0; j < structural_; ++j) row[j] = c.coefficients[j] * row_sign_[i];
      row[columns_] = c.rhs * row_sign_[i];
      switch (relations[i]) {
        case Relation::less_equal:
          row[aux_begin + i] = 1;
          basis_[i] = aux_begin + i;
          break;
        case Relation::greater_equal:
          row[aux_begin + i] = -1;
          row[next_artificial] = 1;
          basis_[i] = next_artificial++;
          break;
        case Relation::equal:
          // The auxiliary column stays empty; it is never eligible.
          row[next_artificial] = 1;
          basis_[i] = next_artificial++;
          break;
      }
      identity_column_[i] = basis_[i];
    }
    blocked_.assign(columns_, false);
    for (std::size_t i = 0; i < m; ++i) {
      if (relations[i] == Relation::equal) blocked_[aux_begin + i] = true;
    }
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  bool has_artificials() const noexcept { return columns_ > artificial_begin_; }

  /// Runs simplex for costs `cost` (one per column). Returns false when
  /// unbounded.
  bool optimize(const std::vector<Rat>& cost, std::size_t& pivots) {
    while (true) {
      const auto reduced = reduced_costs(cost);
      std::size_t entering = columns_;
      for (std::size_t j = 0; j < columns_; ++j) {
        if (!blocked_[j] && reduced[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == columns_) return true;

      std::size_t leaving = rows_.size();
      Rat best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& a = rows_[i][entering];
        if (a <= 0) continue;
        Rat ratio = rows_[i][columns_] / a;
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows_.size()) return false;
      pivot(leaving, entering);
      ++pivots;
    }
  }

  std::vector<Rat> phase_one_costs() const {
    std::vector<Rat> cost(columns_, Rat(0));
    for (std::size_t j = artificial_begin_; j < columns_; ++j) cost[j] = 1;
    return cost;
  }

  std::vector<Rat> phase_two_costs(const std::vector<Rat>& objective) const {
    std::vector<Rat> cost(columns_, Rat(0));
    for (std::size_t j = 0; j < structural_; ++j) cost[j] = objective[j];
    return cost;
  }

  Rat objective_value(const std::vector<Rat>& cost) const {
    Rat total = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) total += cost[basis_[i]] * rows_[i][columns_];
    return total;
  }

  /// Pivots basic artificials (all at level zero) out where a non-artificial
  /// column allows it, then forbids artificials from re-entering.
  void retire_artificials(std::size_t& pivots) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < artificial_begin_) continue;
      for (std::size_t j = 0; j < artificial_begin_; ++j) {
        if (!blocked_[j] && rows_[i][j] != 0) {
          pivot(i, j);
          ++pivots;
          break;
        }
      }
      // Otherwise the row is redundant and its artificial stays basic at 0.
    }
    for (std::size_t j = artificial_begin_; j < columns_; ++j) blocked_[j] = true;
  }

  std::vector<Rat> primal() const {
    std::vector<Rat> x(structural_, Rat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = rows_[i][columns_];
    }
    return x;
  }

  /// y^T = c_B^T B^{-1}; column i of B^{-1} is the current tableau column of
  /// the row's initial identity column.
  std::vector<Rat> dual(const std::vector<Rat>& cost) const {
    std::vector<Rat> y(rows_.size(), Rat(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rat value = 0;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& entry = rows_[i][identity_column_[r]];
        if (entry != 0) value += cost[basis_[i]] * entry;
      }
      y[r] = value * row_sign_[r];
    }
    return y;
  }

 private:
  std::vector<Rat> reduced_costs(const std::vector<Rat>& cost) const {
    std::vector<Rat> reduced = cost;
    reduced.resize(columns_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat& cb = cost[basis_[i]];
      if (cb == 0) continue;
      const auto& row = rows_[i];
      for (std::size_t j = 0; j < columns_; ++j) {
        if (row[j] != 0) reduced[j] -= cb * row[j];
      }
    }
    return reduced;
  }

  void pivot(std::size_t pivot_row, std::size_t pivot_col) {
    auto& prow = rows_[pivot_row];
    const Rat inverse = 1 / prow[pivot_col];
    for (auto& entry : prow) {
      if (entry != 0) entry *= inverse;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == pivot_row) continue;
      auto& row = rows_[i];
      const Rat factor = row[pivot_col];
      if (factor == 0) continue;
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (prow[j] != 0) row[j] -= factor * prow[j];
      }
    }
    basis_[pivot_row] = pivot_col;
  }

  std::size_t structural_;
  std::size_t artificial_begin_ = 0;
  std::size_t columns_ = 0;
  std::vector<std::vector<Rat>> rows_;  // last entry of each row is the rhs
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> identity_column_;
  std::vector<int> row_sign_;
  std::vector<bool> blocked_;
};

}  // namespace detail

inline Solution minimize(const Problem& problem) {
  detail::Tableau tableau(problem);
  Solution solution;
  if (tableau.has_artificials()) {
    const auto cost = tableau.phase_one_costs();
    tableau.optimize(cost, solution.pivots);  // bounded below by zero
    if (tableau.objective_value(cost) != 0) {
      solution.status = Status::infeasible;
      return solution;
    }
  }
  tableau.retire_artificials(solution.pivots);
  const auto cost = tableau.phase_two_costs(problem.objective);
  if (!tableau.optimize(cost, solution.pivots)) {
    solution.status = Status::unbounded;
    return solution;
  }
  solution.status = Status::optimal;
  solution.objective_value = tableau.objective_value(cost);
  solution.primal = tableau.primal();
  solution.dual = tableau.dual(cost);
  return solution;
}

}  // namespace l1cut::lp
