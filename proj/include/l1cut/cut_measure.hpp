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

// Cuts, nonnegative cut measures, and the l1 pseudometrics they define.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "l1cut/error.hpp"
#include "l1cut/graph.hpp"
#include "l1cut/rational.hpp"

namespace l1cut {

/// A subset of {0, ..., universe_size - 1}.
class Cut {
 public:
  Cut() = default;
  explicit Cut(std::size_t universe_size) : bits_(universe_size, false) {}

  Cut(std::size_t universe_size, std::span<const Vertex> members) : bits_(universe_size, false) {
    for (Vertex v : members) insert(v);
  }

  std::size_t universe_size() const noexcept { return bits_.size(); }

  bool contains(Vertex v) const { return bits_.at(v); }

  void insert(Vertex v) {
    if (v >= bits_.size()) {
      throw InputError("cut member " + std::to_string(v) + " outside universe of size " +
                       std::to_string(bits_.size()));
    }
    bits_[v] = true;
  }

  std::size_t count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

  /// Empty or everything: such a cut separates no pair.
  bool trivial() const {
    const std::size_t c = count();
    return c == 0 || c == bits_.size();
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < bits_.size(); ++v) {
      if (bits_[v]) out.push_back(v);
    }
    return out;
  }

  /// rho_S(x, y) = |1_S(x) - 1_S(y)|.
  bool separates(Vertex x, Vertex y) const { return bits_.at(x) != bits_.at(y); }

  auto operator<=>(const Cut&) const = default;

 private:
  std::vector<bool> bits_;
};

struct CutAtom {
  Cut cut;
  Rat weight;
};

/// Finite nonnegative combination of cut metrics on a common universe.
///
/// Atoms are stored in insertion order; duplicates are allowed until
/// normalized() merges them.
class CutMeasure {
 public:
  CutMeasure() = default;
  explicit CutMeasure(std::size_t universe_size) : universe_size_(universe_size) {}

  std::size_t universe_size() const noexcept { return universe_size_; }
  const std::vector<CutAtom>& atoms() const noexcept { return atoms_; }
  std::size_t atom_count() const noexcept { return atoms_.size(); }

  void add(Cut cut, Rat weight) {
    if (cut.universe_size() != universe_size_) {
      throw InputError("cut universe " + std::to_string(cut.universe_size()) +
                       " does not match measure universe " + std::to_string(universe_size_));
    }
    if (weight < 0) {
      throw InputError("negative cut weight");
    }
    atoms_.push_back(CutAtom{std::move(cut), std::move(weight)});
  }

  Rat total_weight() const {
    Rat total = 0;
    for (const auto& atom : atoms_) total += atom.weight;
    return total;
  }

  /// Every weight multiplied by a nonnegative factor.
  CutMeasure scaled(const Rat& factor) const {
    if (factor < 0) {
      throw InputError("negative measure scale factor");
    }
    CutMeasure out(universe_size_);
    out.atoms_.reserve(atoms_.size());
    for (const auto& atom : atoms_) out.atoms_.push_back(CutAtom{atom.cut, atom.weight * factor});
    return out;
  }

  /// Concatenation of the atoms of two measures on the same universe.
  friend CutMeasure operator+(const CutMeasure& a, const CutMeasure& b) {
    if (a.universe_size_ != b.universe_size_) {
      throw InputError("adding cut measures over different universes");
    }
    CutMeasure out = a;
    out.atoms_.insert(out.atoms_.end(), b.atoms_.begin(), b.atoms_.end());
    return out;
  }

  /// Identical cuts merged, zero weights dropped, atoms sorted by cut.
  CutMeasure normalized() const {
    std::vector<CutAtom> sorted = atoms_;
    std::sort(sorted.begin(), sorted.end(),
              [](const CutAtom& a, const CutAtom& b) { return a.cut < b.cut; });
    CutMeasure out(universe_size_);
    for (auto& atom : sorted) {
      if (!out.atoms_.empty() && out.atoms_.back().cut == atom.cut) {
        out.atoms_.back().weight += atom.weight;
      } else {
        out.atoms_.push_back(std::move(atom));
      }
    }
    std::erase_if(out.atoms_, [](const CutAtom& a) { return a.weight == 0; });
    return out;
  }

 private:
  std::size_t universe_size_ = 0;
  std::vector<CutAtom> atoms_;
};

/// sum over atoms of weight * rho_S(x, y).
inline Rat cut_pseudometric(const CutMeasure& m, Vertex x, Vertex y) {
  if (x >= m.universe_size() || y >= m.universe_size()) {
    throw InputError("pseudometric query outside the measure universe");
  }
  Rat total = 0;
  if (x == y) return total;
  for (const auto& atom : m.atoms()) {
    if (atom.cut.separates(x, y)) total += atom.weight;
  }
  return total;
}

/// The full pseudometric table of a measure.
inline SymMatrix<Rat> pseudometric_table(const CutMeasure& m) {
  const std::size_t n = m.universe_size();
  // Accumulate by atom: only pairs straddling the cut change.
  SymMatrix<Rat> table(n, Rat(0));
  std::vector<Rat> upper(n * n, Rat(0));
  std::vector<Vertex> inside;
  std::vector<Vertex> outside;
  for (const auto& atom : m.atoms()) {
    if (atom.weight == 0) continue;
    inside.clear();
    outside.clear();
    for (Vertex v = 0; v < n; ++v) (atom.cut.contains(v) ? inside : outside).push_back(v);
    for (Vertex a : inside) {
      for (Vertex b : outside) upper[std::min(a, b) * n + std::max(a, b)] += atom.weight;
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) table.set(x, y, upper[x * n + y]);
  }
  return table;
}

using Coordinates = std::vector<std::vector<Rat>>;

/// One l1 coordinate per atom: vertex v gets weight * 1_S(v).
inline Coordinates materialize_coordinates(const CutMeasure& m) {
  Coordinates coords(m.universe_size(), std::vector<Rat>(m.atom_count(), Rat(0)));
  for (std::size_t a = 0; a < m.atom_count(); ++a) {
    const auto& atom = m.atoms()[a];
    for (Vertex v = 0; v < m.universe_size(); ++v) {
      if (atom.cut.contains(v)) coords[v][a] = atom.weight;
    }
  }
  return coords;
}

inline Rat l1_distance(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) {
    throw InputError("l1 distance between vectors of different dimension");
  }
  Rat total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += abs(a[i] - b[i]);
  return total;
}

inline SymMatrix<Rat> l1_table(const Coordinates& coords) {
  SymMatrix<Rat> table(coords.size(), Rat(0));
  for (Vertex x = 0; x < coords.size(); ++x) {
    for (Vertex y = x + 1; y < coords.size(); ++y) table.set(x, y, l1_distance(coords[x], coords[y]));
  }
  return table;
}

/// Exact expansion/contraction extremes of an embedding against a base metric.
struct DistortionReport {
  Rat min_ratio;
  Rat max_ratio;
  Rat distortion;
  std::pair<Vertex, Vertex> argmin_pair;
  std::pair<Vertex, Vertex> argmax_pair;
};

/// Ratios embedded/base over all unordered pairs x < y. Ties keep the first
/// pair in lexicographic order.
inline DistortionReport distortion_report(const FiniteMetric& base, const SymMatrix<Rat>& embedded) {
  const std::size_t n = base.size();
  if (embedded.size() != n) {
    throw InputError("embedding has " + std::to_string(embedded.size()) + " points, base metric " +
                     std::to_string(n));
  }
  if (n < 2) {
    throw InputError("distortion needs at least two points");
  }
  DistortionReport report;
  bool first = true;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (embedded(x, y) == 0) {
        throw InfiniteDistortionError("embedding collapses points " + std::to_string(x) + " and " +
                                      std::to_string(y));
      }
      Rat ratio = embedded(x, y) / base(x, y);
      if (first || ratio < report.min_ratio) {
        report.min_ratio = ratio;
        report.argmin_pair = {x, y};
      }
      if (first || ratio > report.max_ratio) {
        report.max_ratio = ratio;
        report.argmax_pair = {x, y};
      }
      first = false;
    }
  }
  report.distortion = report.max_ratio / report.min_ratio;
  return report;
}

inline DistortionReport distortion_report(const FiniteMetric& base, const CutMeasure& embedded) {
  return distortion_report(base, pseudometric_table(embedded));
}

inline DistortionReport distortion_report(const FiniteMetric& base, const Coordinates& embedded) {
  return distortion_report(base, l1_table(embedded));
}

inline DistortionReport distortion_report(const FiniteMetric& base, const FiniteMetric& embedded) {
  return distortion_report(base, embedded.matrix());
}

}  // namespace l1cut
