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

// The two cut families on K_{2,2k}^ell and the embedding d1 built from them.
//
// Family I picks a path i in [2k] and a depth j in [ell] uniformly and cuts
// out the interior segment of path i at offsets j..2ell-j (a window centred
// on the B-vertex). Family II picks a k-subset I of the paths and b in [ell]
// uniformly; the cut contains terminal 0 and, on each path, the prefix of
// offsets 1..2ell-b when the path is in I and 1..b-1 otherwise. Both are
// represented as exact equiprobable atom lists, so every expectation below
// is an exact rational.
//
//   d1 = (2 ell k (k-1) / (2k-1)) E[rho_{S1}] + 2 ell E[rho_{S2}]

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "l1cut/cut_measure.hpp"
#include "l1cut/error.hpp"
#include "l1cut/graph.hpp"
#include "l1cut/rational.hpp"

namespace l1cut {

/// Refuses family II enumerations with more than `max_subsets` index sets.
/// The default admits k <= 6 (C(12, 6) = 924).
struct CutGuard {
  std::uint64_t max_subsets = 924;
};

/// C(n, r); saturates at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    const std::uint64_t numerator = n - r + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / numerator) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * numerator / i;  // C(n-r+i-1, i-1) * (n-r+i) / i = C(n-r+i, i)
  }
  return result;
}

namespace detail {

inline bool window_contains(const ThetaLayout& layout, std::size_t path, std::size_t depth,
                            const ThetaLayout::Position& p) {
  return !p.terminal && p.path == path && depth <= p.offset &&
         p.offset <= layout.path_length() - depth;
}

inline bool prefix_contains(const ThetaLayout& layout, const std::vector<bool>& in_subset,
                            std::size_t b, const ThetaLayout::Position& p) {
  if (p.terminal) return p.offset == 0;
  const std::size_t threshold = in_subset[p.path] ? layout.path_length() - b : b - 1;
  return p.offset <= threshold;
}

inline std::vector<ThetaLayout::Position> locate_all(const ThetaLayout& layout,
                                                     std::span<const Vertex> points) {
  std::vector<ThetaLayout::Position> out;
  out.reserve(points.size());
  for (Vertex v : points) out.push_back(layout.locate(v));
  return out;
}

inline std::vector<Vertex> all_vertices(const ThetaLayout& layout) {
  std::vector<Vertex> out(layout.vertex_count());
  for (Vertex v = 0; v < out.size(); ++v) out[v] = v;
  return out;
}

/// Steps a sorted k-subset of {1..n} to its lexicographic successor.
inline bool next_subset(std::vector<std::size_t>& subset, std::size_t n) {
  const std::size_t k = subset.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (subset[pos] < n - (k - 1 - pos)) {
      ++subset[pos];
      for (std::size_t q = pos + 1; q < k; ++q) subset[q] = subset[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Family I restricted to `points` (universe index p stands for theta vertex
/// points[p]). Atoms ordered by path, then depth.
inline CutMeasure enumerate_cuts_I(std::size_t k, std::size_t ell, std::span<const Vertex> points) {
  const ThetaLayout layout(k, ell);
  const auto positions = detail::locate_all(layout, points);
  const Rat weight = rat(1, static_cast<std::int64_t>(layout.path_count() * ell));
  CutMeasure measure(points.size());
  for (std::size_t i = 1; i <= layout.path_count(); ++i) {
    for (std::size_t j = 1; j <= ell; ++j) {
      Cut cut(points.size());
      for (std::size_t p = 0; p < positions.size(); ++p) {
        if (detail::window_contains(layout, i, j, positions[p])) cut.insert(p);
      }
      measure.add(std::move(cut), weight);
    }
  }
  return measure;
}

inline CutMeasure enumerate_cuts_I(std::size_t k, std::size_t ell) {
  const auto all = detail::all_vertices(ThetaLayout(k, ell));
  return enumerate_cuts_I(k, ell, all);
}

/// Family II restricted to `points`. Atoms ordered by the k-subset
/// (lexicographic), then b.
inline CutMeasure enumerate_cuts_II(std::size_t k, std::size_t ell, std::span<const Vertex> points,
                                    CutGuard guard = {}) {
  const ThetaLayout layout(k, ell);
  const std::uint64_t subsets = binomial(2 * k, k);
  if (subsets > guard.max_subsets) {
    throw GuardError("family II would enumerate C(" + std::to_string(2 * k) + "," +
                     std::to_string(k) + ") index sets; guard allows " +
                     std::to_string(guard.max_subsets));
  }
  const auto positions = detail::locate_all(layout, points);
  const Rat weight = Rat(1) / (Rat(Integer(subsets)) * Rat(static_cast<std::int64_t>(ell)));
  CutMeasure measure(points.size());
  std::vector<std::size_t> subset(k);
  for (std::size_t q = 0; q < k; ++q) subset[q] = q + 1;
  std::vector<bool> in_subset(layout.path_count() + 1);
  do {
    std::fill(in_subset.begin(), in_subset.end(), false);
    for (std::size_t i : subset) in_subset[i] = true;
    for (std::size_t b = 1; b <= ell; ++b) {
      Cut cut(points.size());
      for (std::size_t p = 0; p < positions.size(); ++p) {
        if (detail::prefix_contains(layout, in_subset, b, positions[p])) cut.insert(p);
      }
      measure.add(std::move(cut), weight);
    }
  } while (detail::next_subset(subset, layout.path_count()));
  return measure;
}

inline CutMeasure enumerate_cuts_II(std::size_t k, std::size_t ell, CutGuard guard = {}) {
  const auto all = detail::all_vertices(ThetaLayout(k, ell));
  return enumerate_cuts_II(k, ell, all, guard);
}

/// Weight given to family I: 2 ell k (k-1) / (2k-1).
inline Rat family_I_coefficient(std::size_t k, std::size_t ell) {
  const auto kk = static_cast<std::int64_t>(k);
  return rat(2 * static_cast<std::int64_t>(ell) * kk * (kk - 1), 2 * kk - 1);
}

/// Weight given to family II: 2 ell.
inline Rat family_II_coefficient(std::size_t ell) { return Rat(2 * static_cast<std::int64_t>(ell)); }

/// The embedding d1 as a cut measure over `points`.
inline CutMeasure combine_d1(std::size_t k, std::size_t ell, std::span<const Vertex> points,
                             CutGuard guard = {}) {
  return enumerate_cuts_I(k, ell, points).scaled(family_I_coefficient(k, ell)) +
         enumerate_cuts_II(k, ell, points, guard).scaled(family_II_coefficient(ell));
}

inline CutMeasure combine_d1(std::size_t k, std::size_t ell, CutGuard guard = {}) {
  const auto all = detail::all_vertices(ThetaLayout(k, ell));
  return combine_d1(k, ell, all, guard);
}

/// The seven pair shapes that every pair reduces to under the symmetries of
/// both cut families: permuting paths, and swapping the terminals (which
/// reflects every offset j to 2ell - j and maps family II to itself via
/// complements).
enum class PairCase { I, II, III, IV, V, VI, VII };

inline const char* case_name(PairCase c) {
  switch (c) {
    case PairCase::I: return "I";
    case PairCase::II: return "II";
    case PairCase::III: return "III";
    case PairCase::IV: return "IV";
    case PairCase::V: return "V";
    case PairCase::VI: return "VI";
    case PairCase::VII: return "VII";
  }
  return "?";
}

/// Canonical representative of a pair. `near` is the offset of the vertex
/// on the first path (a <= ell except in case III, where it is the only
/// offset), `far` the offset of the other vertex (0 when unused).
struct CanonicalPair {
  PairCase kind;
  std::size_t near;
  std::size_t far;
};

inline CanonicalPair classify_pair(const ThetaLayout& layout, Vertex x, Vertex y) {
  if (x == y) {
    throw InputError("closed-form d1 needs distinct vertices");
  }
  const std::size_t ell = layout.ell();
  const std::size_t len = layout.path_length();
  auto px = layout.locate(x);
  auto py = layout.locate(y);

  if (px.terminal && py.terminal) return {PairCase::I, 0, 0};
  if (py.terminal) std::swap(px, py);
  if (px.terminal) {
    // Terminal 1 becomes terminal 0 after reflecting.
    const std::size_t a = px.offset == 0 ? py.offset : len - py.offset;
    return {a <= ell ? PairCase::II : PairCase::III, a, 0};
  }

  std::size_t a = px.offset;
  std::size_t c = py.offset;
  if (px.path == py.path) {
    if (a > c) std::swap(a, c);
    if (a > ell) {
      // Both past the midpoint: reflect.
      const std::size_t ra = len - c;
      const std::size_t rc = len - a;
      a = ra;
      c = rc;
    }
    return {c <= ell ? PairCase::IV : PairCase::V, a, c};
  }
  if (a > ell && c > ell) {
    a = len - a;
    c = len - c;
  }
  if (a > ell) std::swap(a, c);
  return {c <= ell ? PairCase::VI : PairCase::VII, a, c};
}

/// d1(x, y) from the per-case closed forms, with r = (3k-2)/(2k-1),
/// alpha = (k-1)/(2k-1), beta = k/(2k-1):
///   I    terminals              2 ell
///   II   0 and a <= ell         r a
///   III  0 and a > ell          a + alpha (2 ell - a)
///   IV   same path, a < c <= ell            r (c - a)
///   V    same path, a <= ell < c            (c - a) + alpha |a + c - 2 ell|
///   VI   other paths, a, c <= ell           (a + c) + alpha |c - a|
///   VII  other paths, a <= ell < c          2 ell - beta |(2 ell - c) - a|
inline Rat closed_form_d1(std::size_t k, std::size_t ell, Vertex x, Vertex y) {
  const ThetaLayout layout(k, ell);
  const auto [kind, near, far] = classify_pair(layout, x, y);
  const auto kk = static_cast<std::int64_t>(k);
  const auto two_ell = static_cast<std::int64_t>(2 * ell);
  const auto a = static_cast<std::int64_t>(near);
  const auto c = static_cast<std::int64_t>(far);
  const Rat r = rat(3 * kk - 2, 2 * kk - 1);
  const Rat alpha = rat(kk - 1, 2 * kk - 1);
  const Rat beta = rat(kk, 2 * kk - 1);
  auto iabs = [](std::int64_t v) { return v < 0 ? -v : v; };
  switch (kind) {
    case PairCase::I: return Rat(two_ell);
    case PairCase::II: return r * a;
    case PairCase::III: return Rat(a) + alpha * (two_ell - a);
    case PairCase::IV: return r * (c - a);
    case PairCase::V: return Rat(c - a) + alpha * iabs(a + c - two_ell);
    case PairCase::VI: return Rat(a + c) + alpha * iabs(c - a);
    case PairCase::VII: return Rat(two_ell) - beta * iabs((two_ell - c) - a);
  }
  throw VerificationError("unreachable pair case");
}

}  // namespace l1cut
