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

// Exact c_1 of a small finite metric by linear programming over the cut cone.
//
//   minimize D  subject to  d(x,y) <= sum_S lambda_S rho_S(x,y) <= D d(x,y)
//                           for every pair, lambda >= 0
//
// Contraction is normalized to 1, so D is the distortion. Cuts are taken in
// complement-canonical form (they contain point 0), which loses nothing
// because rho_S equals rho of the complement.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "l1cut/cut_measure.hpp"
#include "l1cut/error.hpp"
#include "l1cut/graph.hpp"
#include "l1cut/rational.hpp"
#include "l1cut/simplex.hpp"

namespace l1cut {

struct OracleGuard {
  std::size_t max_points = 12;
};

/// All 2^(m-1) - 1 nontrivial cuts containing point 0, ordered by the
/// bitmask of their other members.
inline std::vector<Cut> enumerate_nontrivial_cuts(std::size_t m, OracleGuard guard = {}) {
  if (m < 2) {
    throw InputError("cut enumeration needs at least two points");
  }
  if (m > guard.max_points || m > 63) {
    throw GuardError("cut enumeration over " + std::to_string(m) + " points exceeds the guard of " +
                     std::to_string(guard.max_points));
  }
  const std::uint64_t count = (std::uint64_t{1} << (m - 1)) - 1;
  std::vector<Cut> cuts;
  cuts.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Cut cut(m);
    cut.insert(0);
    for (std::size_t bit = 0; bit + 1 < m; ++bit) {
      if (mask >> bit & 1) cut.insert(bit + 1);
    }
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

enum class OracleStatus { optimal, infeasible, guard_exceeded };

inline const char* status_name(OracleStatus s) {
  switch (s) {
    case OracleStatus::optimal: return "optimal";
    case OracleStatus::infeasible: return "infeasible";
    case OracleStatus::guard_exceeded: return "guard_exceeded";
  }
  return "?";
}

struct LPResult {
  OracleStatus status = OracleStatus::infeasible;
  Rat optimum_D;
  CutMeasure witness;
  std::size_t pivots = 0;
};

namespace detail {

struct CutPairIncidence {
  std::vector<Cut> cuts;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<std::vector<bool>> separates;  // [cut][pair]
};

inline CutPairIncidence cut_pair_incidence(std::size_t m, OracleGuard guard) {
  CutPairIncidence inc;
  inc.cuts = enumerate_nontrivial_cuts(m, guard);
  for (Vertex x = 0; x < m; ++x) {
    for (Vertex y = x + 1; y < m; ++y) inc.pairs.emplace_back(x, y);
  }
  inc.separates.reserve(inc.cuts.size());
  for (const auto& cut : inc.cuts) {
    std::vector<bool> row(inc.pairs.size());
    for (std::size_t p = 0; p < inc.pairs.size(); ++p) {
      row[p] = cut.separates(inc.pairs[p].first, inc.pairs[p].second);
    }
    inc.separates.push_back(std::move(row));
  }
  return inc;
}

inline CutMeasure witness_measure(const CutPairIncidence& inc, const std::vector<Rat>& lambda,
                                  std::size_t m) {
  CutMeasure witness(m);
  for (std::size_t s = 0; s < inc.cuts.size(); ++s) {
    if (lambda[s] != 0) witness.add(inc.cuts[s], lambda[s]);
  }
  return witness;
}

}  // namespace detail

/// Exact minimal distortion of embedding `m` into l1, with an optimal cut
/// measure. The witness bounds d <= d' <= D d and the LP dual optimality
/// certificate are re-checked in exact arithmetic before returning.
inline LPResult exact_c1(const FiniteMetric& m, OracleGuard guard = {}) {
  LPResult result;
  const std::size_t n = m.size();
  if (n < 2) {
    throw InputError("c1 needs at least two points");
  }
  if (n > guard.max_points) {
    result.status = OracleStatus::guard_exceeded;
    return result;
  }
  const auto inc = detail::cut_pair_incidence(n, guard);
  const std::size_t cut_count = inc.cuts.size();
  const std::size_t d_column = cut_count;

  lp::Problem problem;
  problem.objective.assign(cut_count + 1, Rat(0));
  problem.objective[d_column] = 1;
  for (std::size_t p = 0; p < inc.pairs.size(); ++p) {
    const Rat& dp = m(inc.pairs[p].first, inc.pairs[p].second);
    lp::Constraint lower{std::vector<Rat>(cut_count + 1, Rat(0)), lp::Relation::greater_equal, dp};
    lp::Constraint upper{std::vector<Rat>(cut_count + 1, Rat(0)), lp::Relation::greater_equal, Rat(0)};
    for (std::size_t s = 0; s < cut_count; ++s) {
      if (inc.separates[s][p]) {
        lower.coefficients[s] = 1;
        upper.coefficients[s] = -1;
      }
    }
    upper.coefficients[d_column] = dp;
    problem.constraints.push_back(std::move(lower));
    problem.constraints.push_back(std::move(upper));
  }

  const lp::Solution solution = lp::minimize(problem);
  if (solution.status != lp::Status::optimal) {
    // Large lambda always satisfies every row, and D >= 0 bounds the objective.
    throw VerificationError("cut-cone LP was not solved to optimality");
  }
  result.status = OracleStatus::optimal;
  result.optimum_D = solution.objective_value;
  result.pivots = solution.pivots;
  result.witness = detail::witness_measure(inc, solution.primal, n);

  // Primal check: d <= d' <= D d on every pair.
  const auto embedded = pseudometric_table(result.witness);
  for (const auto& [x, y] : inc.pairs) {
    if (embedded(x, y) < m(x, y) || embedded(x, y) > result.optimum_D * m(x, y)) {
      throw VerificationError("oracle witness violates its bounds on pair (" + std::to_string(x) +
                              "," + std::to_string(y) + ")");
    }
  }
  // Dual check: y >= 0, A^T y <= c, and b^T y = D.
  const auto& y = solution.dual;
  Rat dual_objective = 0;
  Rat d_column_load = 0;
  for (std::size_t p = 0; p < inc.pairs.size(); ++p) {
    if (y[2 * p] < 0 || y[2 * p + 1] < 0) {
      throw VerificationError("oracle dual multiplier is negative");
    }
    const Rat& dp = m(inc.pairs[p].first, inc.pairs[p].second);
    dual_objective += dp * y[2 * p];
    d_column_load += dp * y[2 * p + 1];
  }
  if (d_column_load > 1 || dual_objective != result.optimum_D) {
    throw VerificationError("oracle dual certificate does not match the optimum");
  }
  for (std::size_t s = 0; s < cut_count; ++s) {
    Rat load = 0;
    for (std::size_t p = 0; p < inc.pairs.size(); ++p) {
      if (inc.separates[s][p]) load += y[2 * p] - y[2 * p + 1];
    }
    if (load > 0) {
      throw VerificationError("oracle dual certificate is infeasible on a cut column");
    }
  }
  return result;
}

struct IsometryResult {
  bool isometric = false;
  CutMeasure witness;
};

/// Whether `m` lies in the cut cone, i.e. embeds in l1 with distortion 1.
inline IsometryResult is_l1_isometric(const FiniteMetric& m, OracleGuard guard = {}) {
  const std::size_t n = m.size();
  if (n < 2) {
    throw InputError("isometry test needs at least two points");
  }
  if (n > guard.max_points) {
    throw GuardError("isometry test over " + std::to_string(n) + " points exceeds the guard of " +
                     std::to_string(guard.max_points));
  }
  const auto inc = detail::cut_pair_incidence(n, guard);
  lp::Problem problem;
  problem.objective.assign(inc.cuts.size(), Rat(0));
  for (std::size_t p = 0; p < inc.pairs.size(); ++p) {
    lp::Constraint row{std::vector<Rat>(inc.cuts.size(), Rat(0)), lp::Relation::equal,
                       m(inc.pairs[p].first, inc.pairs[p].second)};
    for (std::size_t s = 0; s < inc.cuts.size(); ++s) {
      if (inc.separates[s][p]) row.coefficients[s] = 1;
    }
    problem.constraints.push_back(std::move(row));
  }
  const lp::Solution solution = lp::minimize(problem);
  IsometryResult result;
  if (solution.status != lp::Status::optimal) return result;
  result.isometric = true;
  result.witness = detail::witness_measure(inc, solution.primal, n);
  if (pseudometric_table(result.witness) != m.matrix()) {
    throw VerificationError("isometry witness does not reproduce the metric");
  }
  return result;
}

}  // namespace l1cut
